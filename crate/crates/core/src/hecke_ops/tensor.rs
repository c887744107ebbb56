use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use super::smash::{add_into, gen_times_basis, hecke_product, SmashElem};
use crate::error::{Error, Result};
use crate::ring::{CoeffRing, Flavor};
use crate::root_weyl::{CartanData, WeylElement};

type Key = (WeylElement, WeylElement, WeylElement);

/// `Σ p δ_a ⊗ δ_b (⊗ δ_c)`: slot one in the smash product, the other slots
/// in the plain Hecke algebra. With arity 2 the third slot is always `e`.
#[derive(Clone, PartialEq)]
pub struct TensorOp<C> {
    flavor: Flavor,
    arity: usize,
    n: usize,
    terms: BTreeMap<Key, C>,
}

impl<C: CoeffRing> TensorOp<C> {
    pub fn zero(flavor: Flavor, arity: usize, c: &CartanData) -> Result<Self> {
        if !C::supports(flavor) {
            return Err(Error::FlavorMismatch);
        }
        if !(2..=3).contains(&arity) {
            return Err(Error::Precondition("tensor arity must be 2 or 3".into()));
        }
        Ok(TensorOp { flavor, arity, n: c.rank(), terms: BTreeMap::new() })
    }

    pub fn identity(flavor: Flavor, arity: usize, c: &CartanData) -> Result<Self> {
        let e = WeylElement::identity(c);
        Self::pure(&SmashElem::identity(flavor, c)?, arity, e.clone(), e)
    }

    /// `s ⊗ δ_b ⊗ δ_c`
    pub fn pure(s: &SmashElem<C>, arity: usize, b: WeylElement, cc: WeylElement) -> Result<Self> {
        if arity == 2 && !cc.is_identity() {
            return Err(Error::Precondition("third slot of a 2-fold tensor must be e".into()));
        }
        let mut t = TensorOp { flavor: s.flavor(), arity, n: b.rank(), terms: BTreeMap::new() };
        if !(2..=3).contains(&arity) {
            return Err(Error::Precondition("tensor arity must be 2 or 3".into()));
        }
        for (a, p) in s.terms() {
            add_into(&mut t.terms, (a.clone(), b.clone(), cc.clone()), p.clone());
        }
        Ok(t)
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &C)> {
        self.terms.iter()
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.flavor != o.flavor || self.arity != o.arity {
            return Err(Error::FlavorMismatch);
        }
        if self.n != o.n {
            return Err(Error::RankMismatch { expected: self.n, found: o.n });
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut t = self.clone();
        for (k, p) in &o.terms {
            add_into(&mut t.terms, k.clone(), p.clone());
        }
        Ok(t)
    }

    pub fn neg(&self) -> Self {
        TensorOp { terms: self.terms.iter().map(|(k, p)| (k.clone(), p.neg())).collect(), ..self.clone() }
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    /// `(δ_i ⊗ 1 ⊗ 1) · self`
    fn left_mul_generator(&self, c: &CartanData, i: usize) -> Self {
        let mut t = TensorOp { terms: BTreeMap::new(), ..self.clone() };
        for ((a, b, cc), p) in &self.terms {
            add_into(&mut t.terms, (a.clone(), b.clone(), cc.clone()), p.derivation_block(c, i, 0));
            if let Some(a2) = gen_times_basis(self.flavor, c, i, a) {
                add_into(&mut t.terms, (a2, b.clone(), cc.clone()), p.reflect_block(c, i, 0));
            }
        }
        t
    }

    pub fn mul(&self, c: &CartanData, o: &Self) -> Result<Self> {
        self.mul_budget(c, o, None)
    }

    /// Product, failing once the result exceeds `budget` terms.
    pub fn mul_budget(&self, c: &CartanData, o: &Self, budget: Option<usize>) -> Result<Self> {
        self.check(o)?;
        let mut by_slot1: BTreeMap<&WeylElement, Vec<(&WeylElement, &WeylElement, &C)>> = BTreeMap::new();
        for ((a, b, cc), p) in &self.terms {
            by_slot1.entry(a).or_default().push((b, cc, p));
        }
        let mut products: BTreeMap<(WeylElement, WeylElement), Option<WeylElement>> = BTreeMap::new();
        let mut hp = |x: &WeylElement, y: &WeylElement| -> Option<WeylElement> {
            if y.is_identity() {
                return Some(x.clone());
            }
            products.entry((x.clone(), y.clone())).or_insert_with(|| hecke_product(self.flavor, c, x, y)).clone()
        };
        let mut out = TensorOp { terms: BTreeMap::new(), ..self.clone() };
        for (a, rest) in by_slot1 {
            let mut z = o.clone();
            for &i in a.word().letters().iter().rev() {
                z = z.left_mul_generator(c, i);
            }
            for (b, cc, p) in rest {
                for ((a2, b2, c2), q) in &z.terms {
                    let Some(b3) = hp(b, b2) else { continue };
                    let Some(c3) = hp(cc, c2) else { continue };
                    add_into(&mut out.terms, (a2.clone(), b3, c3), p.mul(q));
                }
            }
            if let Some(limit) = budget {
                if out.terms.len() > limit {
                    return Err(Error::BudgetExceeded { terms: out.terms.len() });
                }
            }
        }
        Ok(out)
    }

    /// The slot-one operator paired with `δ_u ⊗ δ_v` (with `v = e` ignored
    /// for arity 2, where `u` indexes the second slot).
    pub fn slot1(&self, c: &CartanData, u: &WeylElement, v: &WeylElement) -> SmashElem<C> {
        let mut s = SmashElem::zero(self.flavor, c.rank()).expect("flavor checked at construction");
        for ((a, b, cc), p) in &self.terms {
            if b == u && cc == v {
                s = s
                    .add(&SmashElem::term(self.flavor, c, p.clone(), a.clone()).expect("flavor"))
                    .expect("same flavor");
            }
        }
        s
    }

    /// Acts on `f`, an element of the ring with `arity · n` variables, slot
    /// `k` acting on the `k`-th block.
    pub fn apply(&self, c: &CartanData, f: &C) -> C {
        let n = self.n;
        let total = f.nvars();
        assert_eq!(total, self.arity * n, "argument lives in the tensor power");
        let mut out = C::zero(total);
        for ((a, b, cc), p) in &self.terms {
            let mut g = f.clone();
            for (x, off) in [(cc, 2 * n), (b, n), (a, 0)] {
                for &i in x.word().letters().iter().rev() {
                    g = g.hecke_action(self.flavor, c, i, off);
                }
            }
            out = out.add(&p.embed(0, total).mul(&g));
        }
        out
    }
}

impl<C: CoeffRing> fmt::Debug for TensorOp<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}x{}[", self.flavor, self.arity)?;
        for (k, ((a, b, cc), p)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if self.arity == 2 {
                write!(f, "({p})δ[{a}]⊗δ[{b}]")?;
            } else {
                write!(f, "({p})δ[{a}]⊗δ[{b}]⊗δ[{cc}]")?;
            }
        }
        f.write_str("]")
    }
}
