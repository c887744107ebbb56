//! Smash-product operator algebras in normal form.
//!
//! A [`SmashElem`] is `Σ_w p_w δ_w` with coefficients on the left, where
//! `δ_w` is a divided-difference or Demazure operator. A [`TensorOp`] is an
//! element of the smash product tensored with one or two copies of the plain
//! Hecke algebra. Reflections are always rewritten in the `δ` basis, so two
//! operators are equal exactly when their normal forms are.

mod operators;
mod smash;
mod tensor;

pub use operators::{
    build_operator, check_braid, check_braid_budget, check_square, closed_form, coefficient_extract,
    operator_word_product, operator_word_product_budget, AnyOp, BraidOutcome, OperatorKind, SquareClass,
};
pub use smash::{hecke_product, SmashElem};
pub use tensor::TensorOp;

pub use crate::ring::{CoeffRing, Flavor};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hpoly::HPoly;
    use crate::kring::KElem;
    use crate::ring::Value;
    use crate::root_weyl::{element_of_word, enumerate_group, CartanData, WeylElement, Word};
    use alloc::string::ToString;
    use alloc::vec;
    use num_bigint::BigInt;

    fn w(c: &CartanData, l: &[usize]) -> WeylElement {
        element_of_word(c, &Word::new(l.to_vec())).unwrap()
    }

    #[test]
    fn smash_examples() {
        let c = CartanData::type_a(1).unwrap();
        let d = SmashElem::<HPoly>::delta(Flavor::NilH, &c, 0).unwrap();
        assert!(d.mul(&c, &d).unwrap().is_zero());
        let a = SmashElem::scalar(Flavor::NilH, &c, HPoly::var(1, 0)).unwrap();
        let got = d.mul(&c, &a).unwrap();
        let expect = SmashElem::scalar(Flavor::NilH, &c, HPoly::from_i64(1, 2))
            .unwrap()
            .sub(&d.scale_left(&HPoly::var(1, 0)))
            .unwrap();
        assert_eq!(got, expect);
        let di = SmashElem::<KElem>::delta(Flavor::IsobaricK, &c, 0).unwrap();
        assert_eq!(di.mul(&c, &di).unwrap(), di);
        assert!(SmashElem::<HPoly>::delta(Flavor::DemazureK, &c, 0).is_err());
    }

    #[test]
    fn reflections_square_to_one() {
        let c = CartanData::type_b(2).unwrap();
        for f in [Flavor::DemazureK, Flavor::IsobaricK] {
            let r = SmashElem::<KElem>::reflection(f, &c, 1).unwrap();
            assert_eq!(r.mul(&c, &r).unwrap(), SmashElem::identity(f, &c).unwrap());
        }
        let r = SmashElem::<HPoly>::reflection(Flavor::NilH, &c, 0).unwrap();
        assert_eq!(r.mul(&c, &r).unwrap(), SmashElem::identity(Flavor::NilH, &c).unwrap());
        let x = KElem::exp_root(2, 0, 3);
        let ri = SmashElem::<KElem>::reflection(Flavor::IsobaricK, &c, 1).unwrap();
        assert_eq!(ri.apply(&c, &x), x.reflect(&c, 1));
    }

    #[test]
    fn squares() {
        let c = CartanData::type_a(2).unwrap();
        let expect = [
            (OperatorKind::L, SquareClass::Zero),
            (OperatorKind::Lambda, SquareClass::Idempotent),
            (OperatorKind::LambdaCirc, SquareClass::Idempotent),
            (OperatorKind::J, SquareClass::Involution),
            (OperatorKind::Xi, SquareClass::Involution),
            (OperatorKind::XiCirc, SquareClass::Involution),
            (OperatorKind::D, SquareClass::Zero),
        ];
        for (k, s) in expect {
            for i in 0..2 {
                assert_eq!(check_square(&c, i, k).unwrap(), s, "{k}");
            }
        }
    }

    #[test]
    fn braids_a2() {
        let c = CartanData::type_a(2).unwrap();
        for k in OperatorKind::ALL {
            assert!(check_braid(&c, 0, 1, k).unwrap(), "{k}");
        }
        let a1a1 = CartanData::from_rows(&[vec![2, 0], vec![0, 2]]).unwrap();
        for k in OperatorKind::ALL {
            assert!(check_braid(&a1a1, 0, 1, k).unwrap(), "{k} commutation");
        }
    }

    #[test]
    fn word_products_agree_across_reduced_words() {
        let c = CartanData::type_a(2).unwrap();
        for k in OperatorKind::ALL {
            let x = operator_word_product(&c, &Word::new(vec![0, 1, 0]), k).unwrap();
            let y = operator_word_product(&c, &Word::new(vec![1, 0, 1]), k).unwrap();
            assert_eq!(x, y, "{k}");
        }
        let e = operator_word_product(&c, &Word::default(), OperatorKind::L).unwrap();
        assert_eq!(e.num_terms(), 1);
    }

    #[test]
    fn closed_forms() {
        let c = CartanData::type_a(2).unwrap();
        for x in enumerate_group(&c, 10).unwrap() {
            for k in [OperatorKind::J, OperatorKind::Xi, OperatorKind::XiCirc] {
                let cf = closed_form(&c, &x, k).unwrap();
                let prod = operator_word_product(&c, x.word(), k).unwrap();
                assert_eq!(cf, prod, "{k} at {x}");
            }
        }
        let e = WeylElement::identity(&c);
        let id = operator_word_product(&c, &Word::default(), OperatorKind::J).unwrap();
        assert_eq!(closed_form(&c, &e, OperatorKind::J).unwrap(), id);
        assert_eq!(
            closed_form(&c, &w(&c, &[0]), OperatorKind::J).unwrap(),
            build_operator(&c, 0, OperatorKind::J).unwrap()
        );
        assert!(closed_form(&c, &e, OperatorKind::L).is_err());
    }

    #[test]
    fn extraction() {
        let c = CartanData::type_a(2).unwrap();
        let l = operator_word_product(&c, &Word::new(vec![0, 1, 0]), OperatorKind::L).unwrap();
        let v = coefficient_extract(&c, &l, &w(&c, &[0]), &w(&c, &[0, 1]));
        assert_eq!(v.to_string(), "1");
        assert!(coefficient_extract(&c, &l, &w(&c, &[0]), &w(&c, &[1, 0])).is_zero());
        let w0 = w(&c, &[0, 1, 0]);
        let v = coefficient_extract(&c, &l, &WeylElement::identity(&c), &w0);
        assert_eq!(v, Value::H(HPoly::one(2)));
    }

    fn h2(t: &AnyOp) -> TensorOp<HPoly> {
        match t {
            AnyOp::H(x) => x.clone(),
            AnyOp::K(_) => unreachable!(),
        }
    }

    #[test]
    fn nil_hecke_homomorphism_relations() {
        let c = CartanData::type_a(2).unwrap();
        let d = |i| h2(&build_operator(&c, i, OperatorKind::D).unwrap());
        let j = |i| h2(&build_operator(&c, i, OperatorKind::J).unwrap());
        let one = TensorOp::<HPoly>::identity(Flavor::NilH, 2, &c).unwrap();
        let e = WeylElement::identity(&c);
        let scalar = |p: HPoly| {
            TensorOp::pure(&SmashElem::scalar(Flavor::NilH, &c, p).unwrap(), 2, e.clone(), e.clone()).unwrap()
        };
        let m = |x: &TensorOp<HPoly>, y: &TensorOp<HPoly>| x.mul(&c, y).unwrap();
        for i in 0..2 {
            assert!(m(&d(i), &d(i)).is_zero());
            assert_eq!(m(&j(i), &j(i)), one);
            assert_eq!(m(&scalar(HPoly::var(2, i)), &d(i)), j(i).sub(&one).unwrap());
            let beta = HPoly::linear(&[3, -2]);
            let conj = m(&m(&j(i), &scalar(beta.clone())), &j(i));
            assert_eq!(conj, scalar(beta.reflect(&c, i)));
        }
        let (a, b) = (0, 1);
        assert_eq!(m(&m(&d(a), &d(b)), &d(a)), m(&m(&d(b), &d(a)), &d(b)));
        assert_eq!(m(&m(&j(a), &j(b)), &j(a)), m(&m(&j(b), &j(a)), &j(b)));
        let lhs = m(&m(&d(a), &d(b)), &j(a)).add(&m(&m(&j(a), &d(b)), &d(a))).unwrap();
        assert_eq!(lhs, m(&m(&d(b), &j(a)), &d(b)));
        assert_eq!(m(&m(&d(a), &j(b)), &j(a)), m(&m(&j(b), &j(a)), &d(b)));
    }

    #[test]
    fn faithful_action_of_products() {
        let c = CartanData::type_a(2).unwrap();
        let f = {
            let x = HPoly::linear(&[1, 0, 2, -1, 0, 1]);
            let y = HPoly::linear(&[0, 1, 1, 0, -1, 3]);
            &(&x * &y) * &(&x + &HPoly::from_i64(6, 5))
        };
        let l0 = h2(&build_operator(&c, 0, OperatorKind::L).unwrap());
        let l1 = h2(&build_operator(&c, 1, OperatorKind::L).unwrap());
        let prod = l0.mul(&c, &l1).unwrap();
        assert_eq!(prod.apply(&c, &f), l0.apply(&c, &l1.apply(&c, &f)));
        let g = &KElem::exp(&crate::root_weyl::Weight(vec![1, -1, 0, 2, -1, 0]))
            + &KElem::exp(&crate::root_weyl::Weight(vec![0, 0, 1, 0, 0, -1])).scale(&BigInt::from(3));
        for k in [OperatorKind::Lambda, OperatorKind::LambdaCirc] {
            let (AnyOp::K(x0), AnyOp::K(x1)) = (build_operator(&c, 0, k).unwrap(), build_operator(&c, 1, k).unwrap())
            else {
                unreachable!()
            };
            let p = x0.mul(&c, &x1).unwrap();
            assert_eq!(p.apply(&c, &g), x0.apply(&c, &x1.apply(&c, &g)), "{k}");
        }
    }
}
