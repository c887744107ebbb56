use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use schub_core::kring::KElem;
use schub_core::root_weyl::{bruhat_leq, demazure_product, element_of_word, enumerate_group, reduced_words};
use schub_core::schubert::{structure_constant_h_word, structure_constant_k_word, HVariant, KBasis};
use schub_core::{CartanData, HPoly, Word};

fn cartan() -> impl Strategy<Value = CartanData> {
    prop_oneof![
        Just(CartanData::type_a(2).unwrap()),
        Just(CartanData::type_b(2).unwrap()),
        Just(CartanData::type_c(2).unwrap()),
        Just(CartanData::g2()),
    ]
}

fn hpoly(n: usize) -> impl Strategy<Value = HPoly> {
    prop::collection::vec((prop::collection::vec(0u32..3, n), -4i64..5), 0..5)
        .prop_map(move |ts| HPoly::from_terms(n, ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

fn kelem(n: usize) -> impl Strategy<Value = KElem> {
    prop::collection::vec((prop::collection::vec(-2i64..3, n), -4i64..5), 0..4)
        .prop_map(move |ts| KElem::from_terms(n, ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

proptest! {
    #[test]
    fn polynomial_ring_axioms(f in hpoly(2), g in hpoly(2), h in hpoly(2)) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        if !g.is_zero() {
            prop_assert_eq!((&f * &g).div_exact(&g), Some(f.clone()));
        }
    }

    #[test]
    fn divided_differences(c in cartan(), f in hpoly(2), g in hpoly(2), i in 0usize..2) {
        prop_assert_eq!(f.reflect(&c, i).reflect(&c, i), f.clone());
        prop_assert!(f.divided_difference(&c, i).divided_difference(&c, i).is_zero());
        let lhs = (&f * &g).divided_difference(&c, i);
        let rhs = &(&f.divided_difference(&c, i) * &g) + &(&f.reflect(&c, i) * &g.divided_difference(&c, i));
        prop_assert_eq!(lhs, rhs);
        let d = f.divided_difference(&c, i);
        prop_assert_eq!(d.reflect(&c, i), d);
    }

    #[test]
    fn divided_difference_braids(f in hpoly(2)) {
        let c = CartanData::type_a(2).unwrap();
        let d = |p: &HPoly, i| p.divided_difference(&c, i);
        prop_assert_eq!(d(&d(&d(&f, 0), 1), 0), d(&d(&d(&f, 1), 0), 1));
        let b = CartanData::type_b(2).unwrap();
        let d = |p: &HPoly, i| p.divided_difference(&b, i);
        prop_assert_eq!(d(&d(&d(&d(&f, 0), 1), 0), 1), d(&d(&d(&d(&f, 1), 0), 1), 0));
    }

    #[test]
    fn demazure_operators(c in cartan(), f in kelem(2), g in kelem(2), i in 0usize..2) {
        prop_assert_eq!(f.reflect(&c, i).reflect(&c, i), f.clone());
        let d = f.demazure(&c, i);
        prop_assert_eq!(d.demazure(&c, i), d.clone());
        let di = f.isobaric_demazure(&c, i);
        prop_assert_eq!(di.isobaric_demazure(&c, i), di);
        let lhs = (&f * &g).demazure(&c, i);
        let rhs = &(&d * &g) + &(&f.reflect(&c, i) * &g.demazure(&c, i));
        prop_assert_eq!(lhs, rhs);
        if !g.is_zero() {
            prop_assert_eq!((&f * &g).div_exact(&g), Some(f.clone()));
        }
    }

    #[test]
    fn demazure_braids(f in kelem(2)) {
        let c = CartanData::type_a(2).unwrap();
        let d = |p: &KElem, i| p.demazure(&c, i);
        prop_assert_eq!(d(&d(&d(&f, 0), 1), 0), d(&d(&d(&f, 1), 0), 1));
        let d = |p: &KElem, i| p.isobaric_demazure(&c, i);
        prop_assert_eq!(d(&d(&d(&f, 0), 1), 0), d(&d(&d(&f, 1), 0), 1));
    }

    #[test]
    fn evaluation_is_a_homomorphism(f in kelem(2), g in kelem(2), p in 1i64..20, q in 1i64..20) {
        let t = [BigRational::new(p.into(), q.into()), BigRational::new(q.into(), (p + 1).into())];
        let ev = |x: &KElem| x.evaluate(&t).unwrap();
        prop_assert_eq!(ev(&(&f * &g)), ev(&f) * ev(&g));
        prop_assert_eq!(ev(&(&f + &g)), ev(&f) + ev(&g));
    }

    #[test]
    fn demazure_products(c in cartan(), letters in prop::collection::vec(0usize..2, 0..9)) {
        let q = Word::new(letters);
        let w = demazure_product(&c, &q).unwrap();
        prop_assert!(w.length() <= q.len());
        prop_assert!(bruhat_leq(&c, &element_of_word(&c, &q).unwrap(), &w));
        if q.is_reduced(&c).unwrap() {
            prop_assert_eq!(w.length(), q.len());
        }
        for rw in reduced_words(&c, &w) {
            prop_assert_eq!(element_of_word(&c, &rw).unwrap(), w.clone());
        }
    }

    #[test]
    fn a_is_independent_of_the_word(idx in 0usize..6, jdx in 0usize..6, pad in prop::collection::vec(0usize..2, 0..3)) {
        let c = CartanData::type_a(2).unwrap();
        let g = enumerate_group(&c, 10).unwrap();
        let w0 = &g[5];
        let (u, v) = (&g[idx], &g[jdx]);
        let q = w0.word().concat(&Word::new(pad));
        prop_assert_eq!(demazure_product(&c, &q).unwrap(), w0.clone());
        for basis in [KBasis::Ideal, KBasis::Structure] {
            let reference = structure_constant_k_word(&c, u, v, w0.word(), basis).unwrap();
            prop_assert_eq!(structure_constant_k_word(&c, u, v, &q, basis).unwrap(), reference);
        }
        for rw in reduced_words(&c, w0) {
            let h = structure_constant_h_word(&c, u, v, &rw, HVariant::Ddr).unwrap();
            prop_assert_eq!(h, structure_constant_h_word(&c, u, v, w0.word(), HVariant::Ddr).unwrap());
        }
    }
}
