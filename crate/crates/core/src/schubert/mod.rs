//! Structure constants and point restrictions from subword sums.
//!
//! Every summand is a product of one simple operator per letter of the
//! ambient word, applied right to left to the constant `1`.

mod bott_samelson;
mod constants;
mod recursion;

pub use bott_samelson::{bs_restriction, bs_structure_constant, PointClass};
pub use constants::{
    restriction, restriction_h, restriction_h_word, restriction_k, restriction_k_word, structure_constant,
    structure_constant_h, structure_constant_h_word, structure_constant_k, structure_constant_k_word, HVariant, KBasis,
    Theory, WordIndex,
};
pub use recursion::{recursion_c, RecursionSolver};

use crate::hpoly::HPoly;
use crate::kring::KElem;
use crate::root_weyl::{CartanData, Word};

/// One letter's operator in a cohomology product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum HStep {
    /// `r`
    R,
    /// `α r`
    AlphaR,
    /// `∂ r`
    DR,
    /// `r (−∂)`
    RNegD,
}

/// One letter's operator in a K-theory product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum KStep {
    /// `r`
    R,
    /// `(1 − e^{−α}) r`
    BR,
    /// `e^{−α} r`
    ENegR,
    /// `e^{α} r (−Ď)`
    EPosRNegD,
    /// `e^{−α} r (−Ď̄)`
    ENegRNegIso,
}

pub(crate) fn eval_h(c: &CartanData, q: &Word, steps: impl DoubleEndedIterator<Item = (usize, HStep)>) -> HPoly {
    let n = c.rank();
    let mut f = HPoly::one(n);
    for (pos, step) in steps.rev() {
        let i = q.letters()[pos];
        f = match step {
            HStep::R => f.reflect(c, i),
            HStep::AlphaR => &HPoly::var(n, i) * &f.reflect(c, i),
            HStep::DR => f.reflect(c, i).divided_difference(c, i),
            HStep::RNegD => (-&f.divided_difference(c, i)).reflect(c, i),
        };
        if f.is_zero() {
            break;
        }
    }
    f
}

pub(crate) fn eval_k(c: &CartanData, q: &Word, steps: impl DoubleEndedIterator<Item = (usize, KStep)>) -> KElem {
    let n = c.rank();
    let mut f = KElem::one(n);
    let unit = |i: usize, k: i64| {
        let mut e = alloc::vec![0; n];
        e[i] = k;
        e
    };
    for (pos, step) in steps.rev() {
        let i = q.letters()[pos];
        f = match step {
            KStep::R => f.reflect(c, i),
            KStep::BR => {
                let g = f.reflect(c, i);
                &g - &g.shift(&unit(i, -1))
            }
            KStep::ENegR => f.reflect(c, i).shift(&unit(i, -1)),
            KStep::EPosRNegD => (-&f.demazure(c, i)).reflect(c, i).shift(&unit(i, 1)),
            KStep::ENegRNegIso => (-&f.isobaric_demazure(c, i)).reflect(c, i).shift(&unit(i, -1)),
        };
        if f.is_zero() {
            break;
        }
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_weyl::perm::element_from_perm;
    use crate::root_weyl::{
        element_of_word, enumerate_group, subwords_with_product, Subword, SubwordMode, WeylElement,
    };
    use alloc::string::ToString;
    use alloc::vec;

    fn w(c: &CartanData, l: &[usize]) -> WeylElement {
        element_of_word(c, &Word::new(l.to_vec())).unwrap()
    }

    #[test]
    fn a2_golden_constants() {
        let c = CartanData::type_a(2).unwrap();
        let w0 = w(&c, &[0, 1, 0]);
        for variant in [HVariant::Ddr, HVariant::Rdd] {
            let one = structure_constant_h(&c, &w(&c, &[0]), &w(&c, &[0, 1]), &w0, variant);
            assert_eq!(one.to_string(), "1");
            let zero = structure_constant_h(&c, &w(&c, &[0]), &w(&c, &[1, 0]), &w0, variant);
            assert!(zero.is_zero());
        }
    }

    #[test]
    fn a3_golden_constants() {
        let c = CartanData::type_a(3).unwrap();
        let u = element_from_perm(&c, &[1, 4, 3, 2]).unwrap();
        let v = element_from_perm(&c, &[3, 2, 1, 4]).unwrap();
        let x = element_from_perm(&c, &[3, 4, 2, 1]).unwrap();
        assert_eq!(structure_constant_h(&c, &u, &v, &x, HVariant::Ddr).to_string(), "a1 + a2 + a3");
        let q = Word::new(vec![0, 1, 2, 0, 1]);
        let a = structure_constant_k_word(&c, &u, &v, &q, KBasis::Ideal).unwrap();
        assert_eq!(a.to_string(), "e[0,-1,0] - e[-1,-2,-1]");
        assert_eq!(structure_constant_k(&c, &u, &v, &x, KBasis::Ideal), a);
    }

    #[test]
    fn unit_class() {
        let c = CartanData::type_a(2).unwrap();
        let e = WeylElement::identity(&c);
        let g = enumerate_group(&c, 10).unwrap();
        for v in &g {
            for x in &g {
                let expect = u8::from(v == x);
                let h = structure_constant_h(&c, &e, v, x, HVariant::Ddr);
                assert_eq!(h, HPoly::from_i64(2, expect.into()));
                let a = structure_constant_k(&c, &e, v, x, KBasis::Ideal);
                assert_eq!(a, KElem::from_i64(2, expect.into()));
                let mut total = KElem::zero(2);
                for u in &g {
                    total += &structure_constant_k(&c, u, v, x, KBasis::Structure);
                }
                assert_eq!(total, KElem::from_i64(2, expect.into()));
            }
        }
    }

    #[test]
    fn restriction_examples() {
        let c = CartanData::type_a(2).unwrap();
        let e = WeylElement::identity(&c);
        let r1 = w(&c, &[0]);
        assert_eq!(restriction_h(&c, &e, &w(&c, &[0, 1, 0])).to_string(), "1");
        assert_eq!(restriction_h(&c, &r1, &w(&c, &[0, 1])).to_string(), "a1");
        assert_eq!(restriction_h(&c, &r1, &w(&c, &[1, 0])).to_string(), "a1 + a2");
        assert!(restriction_h(&c, &w(&c, &[0, 1]), &w(&c, &[1, 0])).is_zero());
        let a1 = CartanData::type_a(1).unwrap();
        let s = w(&a1, &[0]);
        let e1 = WeylElement::identity(&a1);
        assert_eq!(restriction_k(&a1, &e1, &s, KBasis::Structure).to_string(), "e[-1]");
        for x in enumerate_group(&c, 10).unwrap() {
            assert_eq!(restriction_k(&c, &e, &x, KBasis::Ideal), KElem::one(2));
        }
        assert!(restriction_k(&c, &w(&c, &[0, 1]), &w(&c, &[1, 0]), KBasis::Ideal).is_zero());
    }

    #[test]
    fn restriction_is_diagonal_constant() {
        for tag in ["A2", "B2"] {
            let c = CartanData::from_type_name(tag).unwrap();
            let g = enumerate_group(&c, 100).unwrap();
            for v in &g {
                for x in &g {
                    assert_eq!(structure_constant_h(&c, x, v, x, HVariant::Ddr), restriction_h(&c, v, x));
                    for b in [KBasis::Ideal, KBasis::Structure] {
                        assert_eq!(structure_constant_k(&c, x, v, x, b), restriction_k(&c, v, x, b));
                    }
                }
            }
        }
    }

    #[test]
    fn recursion_examples() {
        let c = CartanData::type_a(2).unwrap();
        let p = |l: &[usize]| element_from_perm(&c, l).unwrap();
        let mut s = RecursionSolver::new(&c);
        assert_eq!(s.solve(&p(&[3, 1, 2]), &p(&[1, 3, 2]), &p(&[3, 2, 1])).to_string(), "1");
        assert_eq!(s.solve(&p(&[2, 1, 3]), &p(&[1, 3, 2]), &p(&[2, 3, 1])).to_string(), "1");
        let x = p(&[3, 2, 1]);
        assert_eq!(s.solve(&WeylElement::identity(&c), &x, &x).to_string(), "1");
        assert!(recursion_c(&c, &x, &x, &p(&[1, 3, 2]), 0).is_err());
    }

    #[test]
    fn bott_samelson_examples() {
        let c = CartanData::type_a(2).unwrap();
        let empty = Word::default();
        let z = Subword::empty(0);
        for t in [Theory::H, Theory::KIdeal, Theory::KStructure] {
            let v = bs_structure_constant(&c, &empty, &z, &z, &z, t).unwrap();
            assert_eq!(v.to_string(), if t == Theory::H { "1" } else { "e[0,0]" });
        }
        let q1 = Word::new(vec![0]);
        let f = Subword::full(1);
        assert_eq!(bs_structure_constant(&c, &q1, &f, &f, &f, Theory::H).unwrap().to_string(), "a1");
        let q = Word::new(vec![0, 1]);
        let j = Subword::parse("10").unwrap();
        let l = Subword::parse("11").unwrap();
        assert_eq!(bs_restriction(&c, &q, &j, &l, PointClass::T).unwrap().to_string(), "a1");
        assert!(bs_restriction(&c, &q, &l, &j, PointClass::Tau).unwrap().is_zero());
        let e2 = Subword::empty(0);
        assert_eq!(bs_restriction(&c, &empty, &e2, &e2, PointClass::TauCirc).unwrap().to_string(), "e[0,0]");
        let q = Word::new(vec![0, 1, 0]);
        let mut total = HPoly::zero(2);
        for r in subwords_with_product(&c, &q, &w(&c, &[0]), SubwordMode::Reduced).unwrap() {
            for s in subwords_with_product(&c, &q, &w(&c, &[0, 1]), SubwordMode::Reduced).unwrap() {
                let b = bs_structure_constant(&c, &q, &r, &s, &Subword::full(3), Theory::H).unwrap();
                total += b.as_h().unwrap();
            }
        }
        assert_eq!(total.to_string(), "1");
    }
}
