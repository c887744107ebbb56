//! The common interface of the two coefficient rings.

use core::fmt;

use crate::hpoly::HPoly;
use crate::kring::KElem;
use crate::root_weyl::CartanData;

/// Which Hecke-type operators act on a coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    /// Divided differences `∂_i` on polynomials, nil relations `∂_i² = 0`.
    NilH,
    /// Ordinary Demazure operators `Ď_i` on characters, `Ď_i² = Ď_i`.
    DemazureK,
    /// Isobaric Demazure operators `Ď̄_i` on characters, `Ď̄_i² = Ď̄_i`.
    IsobaricK,
}

impl Flavor {
    pub fn is_nil(self) -> bool {
        self == Flavor::NilH
    }
}

pub trait CoeffRing: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero(n: usize) -> Self;
    fn one(n: usize) -> Self;
    fn nvars(&self) -> usize;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn reflect_block(&self, c: &CartanData, i: usize, off: usize) -> Self;
    /// The twisted derivation `D_i` with `D_i(fg) = (D_i f)g + (r_i f)(D_i g)`:
    /// `∂_i` on polynomials, ordinary `Ď_i` on characters.
    fn derivation_block(&self, c: &CartanData, i: usize, off: usize) -> Self;
    /// The basis operator of `flavor` acting on the block at `off`.
    fn hecke_action(&self, flavor: Flavor, c: &CartanData, i: usize, off: usize) -> Self;
    fn supports(flavor: Flavor) -> bool;
    /// `(u, b)` with `r_i = u (1 − b δ_i)` in the given flavor.
    fn reflection_expansion(flavor: Flavor, n: usize, i: usize) -> (Self, Self);
    fn div_exact(&self, d: &Self) -> Option<Self>;
    fn embed(&self, off: usize, total: usize) -> Self;
}

impl CoeffRing for HPoly {
    fn zero(n: usize) -> Self {
        HPoly::zero(n)
    }
    fn one(n: usize) -> Self {
        HPoly::one(n)
    }
    fn nvars(&self) -> usize {
        HPoly::nvars(self)
    }
    fn is_zero(&self) -> bool {
        HPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn reflect_block(&self, c: &CartanData, i: usize, off: usize) -> Self {
        HPoly::reflect_block(self, c, i, off)
    }
    fn derivation_block(&self, c: &CartanData, i: usize, off: usize) -> Self {
        self.divided_difference_block(c, i, off)
    }
    fn hecke_action(&self, flavor: Flavor, c: &CartanData, i: usize, off: usize) -> Self {
        assert_eq!(flavor, Flavor::NilH, "polynomials carry the nil-Hecke action");
        self.divided_difference_block(c, i, off)
    }
    fn supports(flavor: Flavor) -> bool {
        flavor == Flavor::NilH
    }
    fn reflection_expansion(_: Flavor, n: usize, i: usize) -> (Self, Self) {
        (HPoly::one(n), HPoly::var(n, i))
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        HPoly::div_exact(self, d)
    }
    fn embed(&self, off: usize, total: usize) -> Self {
        HPoly::embed(self, off, total)
    }
}

impl CoeffRing for KElem {
    fn zero(n: usize) -> Self {
        KElem::zero(n)
    }
    fn one(n: usize) -> Self {
        KElem::one(n)
    }
    fn nvars(&self) -> usize {
        KElem::nvars(self)
    }
    fn is_zero(&self) -> bool {
        KElem::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn reflect_block(&self, c: &CartanData, i: usize, off: usize) -> Self {
        KElem::reflect_block(self, c, i, off)
    }
    fn derivation_block(&self, c: &CartanData, i: usize, off: usize) -> Self {
        self.demazure_block(c, i, off)
    }
    fn hecke_action(&self, flavor: Flavor, c: &CartanData, i: usize, off: usize) -> Self {
        match flavor {
            Flavor::DemazureK => self.demazure_block(c, i, off),
            Flavor::IsobaricK => self.isobaric_demazure_block(c, i, off),
            Flavor::NilH => panic!("characters carry a 0-Hecke action"),
        }
    }
    fn supports(flavor: Flavor) -> bool {
        flavor != Flavor::NilH
    }
    fn reflection_expansion(flavor: Flavor, n: usize, i: usize) -> (Self, Self) {
        let b = &KElem::one(n) - &KElem::exp_root(n, i, -1);
        match flavor {
            Flavor::IsobaricK => (KElem::exp_root(n, i, 1), b),
            _ => (KElem::one(n), b),
        }
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        KElem::div_exact(self, d)
    }
    fn embed(&self, off: usize, total: usize) -> Self {
        let n = KElem::nvars(self);
        assert!(off + n <= total);
        KElem::from_terms(
            total,
            self.terms().map(|(e, c)| {
                let mut v = alloc::vec![0; total];
                v[off..off + n].copy_from_slice(e);
                (v, c.clone())
            }),
        )
    }
}

/// A value in either coefficient ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Value {
    H(HPoly),
    K(KElem),
}

impl Value {
    pub fn is_zero(&self) -> bool {
        match self {
            Value::H(p) => p.is_zero(),
            Value::K(f) => f.is_zero(),
        }
    }

    pub fn as_h(&self) -> Option<&HPoly> {
        match self {
            Value::H(p) => Some(p),
            Value::K(_) => None,
        }
    }

    pub fn as_k(&self) -> Option<&KElem> {
        match self {
            Value::K(f) => Some(f),
            Value::H(_) => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::H(p) => write!(f, "{p}"),
            Value::K(k) => write!(f, "{k}"),
        }
    }
}
