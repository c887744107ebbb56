use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::ring::{CoeffRing, Flavor};
use crate::root_weyl::{CartanData, WeylElement};

/// `δ_b δ_x`, or `None` when the nil relation kills it.
pub fn hecke_product(flavor: Flavor, c: &CartanData, b: &WeylElement, x: &WeylElement) -> Option<WeylElement> {
    let mut out = b.clone();
    for &i in x.word().letters() {
        if out.is_right_descent(i) {
            if flavor.is_nil() {
                return None;
            }
        } else {
            out = out.right_mul_gen(c, i);
        }
    }
    Some(out)
}

/// `δ_i δ_a`
pub(crate) fn gen_times_basis(flavor: Flavor, c: &CartanData, i: usize, a: &WeylElement) -> Option<WeylElement> {
    if a.is_left_descent(i) {
        (!flavor.is_nil()).then(|| a.clone())
    } else {
        Some(a.left_mul_gen(c, i))
    }
}

pub(crate) fn add_into<K: Ord, C: CoeffRing>(map: &mut BTreeMap<K, C>, k: K, v: C) {
    if v.is_zero() {
        return;
    }
    use alloc::collections::btree_map::Entry;
    match map.entry(k) {
        Entry::Vacant(e) => {
            e.insert(v);
        }
        Entry::Occupied(mut e) => {
            let s = e.get().add(&v);
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// `Σ_w p_w δ_w` in the smash product of a coefficient ring with a Hecke
/// algebra.
#[derive(Clone, PartialEq)]
pub struct SmashElem<C> {
    flavor: Flavor,
    n: usize,
    terms: BTreeMap<WeylElement, C>,
}

impl<C: CoeffRing> SmashElem<C> {
    pub fn zero(flavor: Flavor, n: usize) -> Result<Self> {
        if !C::supports(flavor) {
            return Err(Error::FlavorMismatch);
        }
        Ok(SmashElem { flavor, n, terms: BTreeMap::new() })
    }

    /// `p δ_a`
    pub fn term(flavor: Flavor, c: &CartanData, p: C, a: WeylElement) -> Result<Self> {
        let mut s = Self::zero(flavor, c.rank())?;
        add_into(&mut s.terms, a, p);
        Ok(s)
    }

    pub fn scalar(flavor: Flavor, c: &CartanData, p: C) -> Result<Self> {
        Self::term(flavor, c, p, WeylElement::identity(c))
    }

    pub fn identity(flavor: Flavor, c: &CartanData) -> Result<Self> {
        Self::scalar(flavor, c, C::one(c.rank()))
    }

    /// `1 δ_i`
    pub fn delta(flavor: Flavor, c: &CartanData, i: usize) -> Result<Self> {
        Self::term(flavor, c, C::one(c.rank()), WeylElement::generator(c, i)?)
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeylElement, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: &WeylElement) -> C {
        self.terms.get(a).cloned().unwrap_or_else(|| C::zero(self.n))
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.flavor != o.flavor {
            return Err(Error::FlavorMismatch);
        }
        if self.n != o.n {
            return Err(Error::RankMismatch { expected: self.n, found: o.n });
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut s = self.clone();
        for (a, p) in &o.terms {
            add_into(&mut s.terms, a.clone(), p.clone());
        }
        Ok(s)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        SmashElem {
            flavor: self.flavor,
            n: self.n,
            terms: self.terms.iter().map(|(a, p)| (a.clone(), p.neg())).collect(),
        }
    }

    /// `p · self`
    pub fn scale_left(&self, p: &C) -> Self {
        let mut s = SmashElem { flavor: self.flavor, n: self.n, terms: BTreeMap::new() };
        for (a, q) in &self.terms {
            add_into(&mut s.terms, a.clone(), p.mul(q));
        }
        s
    }

    /// `δ_i · self`, moving `δ_i` past each coefficient with
    /// `δ_i p = (D_i p) + (r_i p) δ_i`.
    pub fn left_mul_generator(&self, c: &CartanData, i: usize) -> Self {
        let mut s = SmashElem { flavor: self.flavor, n: self.n, terms: BTreeMap::new() };
        for (a, p) in &self.terms {
            add_into(&mut s.terms, a.clone(), p.derivation_block(c, i, 0));
            if let Some(b) = gen_times_basis(self.flavor, c, i, a) {
                add_into(&mut s.terms, b, p.reflect_block(c, i, 0));
            }
        }
        s
    }

    /// `δ_a · self`
    pub fn left_mul_basis(&self, c: &CartanData, a: &WeylElement) -> Self {
        let mut s = self.clone();
        for &i in a.word().letters().iter().rev() {
            s = s.left_mul_generator(c, i);
        }
        s
    }

    pub fn mul(&self, c: &CartanData, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut s = SmashElem { flavor: self.flavor, n: self.n, terms: BTreeMap::new() };
        for (a, p) in &self.terms {
            for (x, q) in &o.left_mul_basis(c, a).terms {
                add_into(&mut s.terms, x.clone(), p.mul(q));
            }
        }
        Ok(s)
    }

    /// The expansion of `r_i` in the `δ` basis.
    pub fn reflection(flavor: Flavor, c: &CartanData, i: usize) -> Result<Self> {
        let d = Self::delta(flavor, c, i)?;
        let one = Self::identity(flavor, c)?;
        let (unit, b) = C::reflection_expansion(flavor, c.rank(), i);
        one.sub(&d.scale_left(&b)).map(|s| s.scale_left(&unit))
    }

    /// The expansion of `w` as a product of reflections.
    pub fn weyl(flavor: Flavor, c: &CartanData, w: &WeylElement) -> Result<Self> {
        let mut s = Self::identity(flavor, c)?;
        for &i in w.word().letters() {
            s = s.mul(c, &Self::reflection(flavor, c, i)?)?;
        }
        Ok(s)
    }

    /// Acts on `f`, whose variables at `off..off + n` are the ones seen by
    /// the operators; coefficients multiply after embedding at `off`.
    pub fn apply_block(&self, c: &CartanData, f: &C, off: usize) -> C {
        let total = f.nvars();
        let mut out = C::zero(total);
        for (a, p) in &self.terms {
            let mut g = f.clone();
            for &i in a.word().letters().iter().rev() {
                g = g.hecke_action(self.flavor, c, i, off);
            }
            out = out.add(&p.embed(off, total).mul(&g));
        }
        out
    }

    pub fn apply(&self, c: &CartanData, f: &C) -> C {
        self.apply_block(c, f, 0)
    }

    /// The operator applied to the constant `1`.
    pub fn act_on_one(&self) -> C {
        let mut out = C::zero(self.n);
        for (a, p) in &self.terms {
            if a.is_identity() || self.flavor == Flavor::IsobaricK {
                out = out.add(p);
            }
        }
        out
    }
}

impl<C: CoeffRing> fmt::Debug for SmashElem<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<alloc::string::String> =
            self.terms.iter().map(|(a, p)| alloc::format!("({p})·δ[{a}]")).collect();
        write!(f, "{:?}[{}]", self.flavor, parts.join(" + "))
    }
}
