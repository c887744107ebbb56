//! The character ring `Z[e^λ]`, λ in the root lattice, with the Weyl action,
//! ordinary and isobaric Demazure operators, and the associated graded map
//! to polynomials.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hpoly::{QPoly, Scalar};
use crate::root_weyl::{CartanData, Weight, WeylElement};

/// A finite integer combination of characters `e^λ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KElem {
    n: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl KElem {
    pub fn zero(n: usize) -> Self {
        KElem { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::exp(&Weight::zero(n))
    }

    pub fn from_i64(n: usize, k: i64) -> Self {
        let mut f = Self::zero(n);
        f.add_term(vec![0; n], BigInt::from(k));
        f
    }

    /// `e^λ`
    pub fn exp(lambda: &Weight) -> Self {
        let mut f = Self::zero(lambda.rank());
        f.add_term(lambda.0.clone(), BigInt::one());
        f
    }

    /// `e^{k α_i}`
    pub fn exp_root(n: usize, i: usize, k: i64) -> Self {
        let mut e = vec![0; n];
        e[i] = k;
        Self::exp(&Weight(e))
    }

    /// `1 − e^λ`
    pub fn one_minus_exp(lambda: &Weight) -> Self {
        &Self::one(lambda.rank()) - &Self::exp(lambda)
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<i64>, BigInt)>>(n: usize, it: I) -> Self {
        let mut f = Self::zero(n);
        for (e, c) in it {
            assert_eq!(e.len(), n, "exponent vector length");
            f.add_term(e, c);
        }
        f
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[i64], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, e: Vec<i64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.n);
        }
        KElem { n: self.n, terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect() }
    }

    /// Multiplies by `e^λ`.
    pub fn shift(&self, lambda: &[i64]) -> Self {
        KElem {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(lambda).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    fn map_exponents(&self, f: impl Fn(&[i64]) -> Vec<i64>) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(f(e), c.clone());
        }
        out
    }

    pub fn reflect_block(&self, c: &CartanData, i: usize, off: usize) -> Self {
        let row = c.row(i);
        self.map_exponents(|e| {
            let pair: i64 = row.iter().zip(&e[off..off + row.len()]).map(|(a, x)| a * x).sum();
            let mut v = e.to_vec();
            v[off + i] -= pair;
            v
        })
    }

    pub fn reflect(&self, c: &CartanData, i: usize) -> Self {
        self.reflect_block(c, i, 0)
    }

    pub fn weyl_act(&self, w: &WeylElement) -> Self {
        self.map_exponents(|e| w.act(&Weight(e.to_vec())).0)
    }

    /// Exact quotient by `1 − e^{−x_k}`, summing each line along axis `k`
    /// from the top.
    pub fn div_one_minus_exp_neg(&self, k: usize) -> Option<Self> {
        let mut fibers: BTreeMap<Vec<i64>, BTreeMap<i64, BigInt>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut key = e.clone();
            let t = key[k];
            key[k] = 0;
            fibers.entry(key).or_default().insert(t, c.clone());
        }
        let mut out = Self::zero(self.n);
        for (key, line) in fibers {
            let (&lo, _) = line.first_key_value().expect("nonempty fiber");
            let (&hi, _) = line.last_key_value().expect("nonempty fiber");
            let mut run = BigInt::zero();
            for t in (lo..=hi).rev() {
                if let Some(h) = line.get(&t) {
                    run += h;
                }
                if t > lo && !run.is_zero() {
                    let mut e = key.clone();
                    e[k] = t;
                    out.terms.insert(e, run.clone());
                }
            }
            if !run.is_zero() {
                return None;
            }
        }
        Some(out)
    }

    /// Ordinary Demazure operator `Ď_i f = (f − r_i f)/(1 − e^{−α_i})`.
    pub fn demazure_block(&self, c: &CartanData, i: usize, off: usize) -> Self {
        let num = self - &self.reflect_block(c, i, off);
        num.div_one_minus_exp_neg(off + i).expect("Demazure numerator is divisible")
    }

    pub fn demazure(&self, c: &CartanData, i: usize) -> Self {
        self.demazure_block(c, i, 0)
    }

    /// Isobaric Demazure operator `Ď̄_i f = (f − e^{−α_i} r_i f)/(1 − e^{−α_i})`.
    pub fn isobaric_demazure_block(&self, c: &CartanData, i: usize, off: usize) -> Self {
        let mut shift = vec![0; self.n];
        shift[off + i] = -1;
        let num = self - &self.reflect_block(c, i, off).shift(&shift);
        num.div_one_minus_exp_neg(off + i).expect("isobaric Demazure numerator is divisible")
    }

    pub fn isobaric_demazure(&self, c: &CartanData, i: usize) -> Self {
        self.isobaric_demazure_block(c, i, 0)
    }

    /// Exact Laurent quotient, `None` if `d` does not divide `self`.
    ///
    /// Leading terms are eliminated in lexicographic order; every quotient
    /// exponent must lie in the box cut out by the coordinate ranges of the
    /// dividend and divisor, which bounds the search.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.n));
        }
        let range = |f: &KElem, k: usize| {
            let lo = f.terms.keys().map(|e| e[k]).min().expect("nonzero");
            let hi = f.terms.keys().map(|e| e[k]).max().expect("nonzero");
            (lo, hi)
        };
        let bounds: Vec<(i64, i64)> = (0..self.n)
            .map(|k| {
                let (flo, fhi) = range(self, k);
                let (dlo, dhi) = range(d, k);
                (flo - dlo, fhi - dhi)
            })
            .collect();
        let (dl, dc) = d.terms.last_key_value().expect("nonzero");
        let (dl, dc) = (dl.clone(), dc.clone());
        let mut r = self.clone();
        let mut q = Self::zero(self.n);
        while let Some((l, c)) = r.terms.last_key_value() {
            let e: Vec<i64> = l.iter().zip(&dl).map(|(a, b)| a - b).collect();
            if e.iter().zip(&bounds).any(|(x, (lo, hi))| x < lo || x > hi) {
                return None;
            }
            let qc = c.try_div(&dc)?;
            r -= &d.shift(&e).scale(&qc);
            q.add_term(e, qc);
        }
        Some(q)
    }

    /// Value at a point where `e^{α_i}` takes the value `t[i]`.
    pub fn evaluate(&self, t: &[BigRational]) -> Result<BigRational> {
        if t.len() != self.n {
            return Err(Error::RankMismatch { expected: self.n, found: t.len() });
        }
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut v = BigRational::from_integer(c.clone());
            for (x, &k) in t.iter().zip(e) {
                if k == 0 {
                    continue;
                }
                if x.is_zero() {
                    return Err(Error::ZeroDenominator);
                }
                v *= num_traits::pow::Pow::pow(x, k as i32);
            }
            total += v;
        }
        Ok(total)
    }

    /// Image under `e^λ ↦ Σ_{k≤d} λ^k/k!`, all degrees up to `d`.
    pub fn truncated_expansion(&self, d: u32) -> QPoly {
        let n = self.n;
        let mut out = QPoly::zero(n);
        for (e, c) in &self.terms {
            let lam = QPoly::linear(e);
            let mut power = QPoly::one(n);
            let mut fact = BigInt::one();
            let coef = BigRational::from_integer(c.clone());
            for k in 0..=d {
                if k > 0 {
                    power = &power * &lam;
                    fact *= BigInt::from(k);
                }
                out += &power.scale(&(coef.clone() / BigRational::from_integer(fact.clone())));
            }
        }
        out
    }

    /// The degree-`d` component of the associated graded image. Meaningful
    /// when [`KElem::vanishes_below`] holds for `d`.
    pub fn associated_graded(&self, d: u32) -> QPoly {
        self.truncated_expansion(d).homogeneous_component(d)
    }

    /// Whether every component of degree below `d` vanishes.
    pub fn vanishes_below(&self, d: u32) -> bool {
        if d == 0 {
            return true;
        }
        let t = self.truncated_expansion(d - 1);
        t.is_zero()
    }
}

impl fmt::Display for KElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            let parts: Vec<String> = e.iter().map(|x| alloc::format!("{x}")).collect();
            write!(f, "e[{}]", parts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for KElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KElem({self})")
    }
}

impl AddAssign<&KElem> for KElem {
    fn add_assign(&mut self, o: &KElem) {
        for (e, c) in &o.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl SubAssign<&KElem> for KElem {
    fn sub_assign(&mut self, o: &KElem) {
        for (e, c) in &o.terms {
            self.add_term(e.clone(), -c);
        }
    }
}

impl Add for &KElem {
    type Output = KElem;
    fn add(self, o: &KElem) -> KElem {
        let mut f = self.clone();
        f += o;
        f
    }
}

impl Sub for &KElem {
    type Output = KElem;
    fn sub(self, o: &KElem) -> KElem {
        let mut f = self.clone();
        f -= o;
        f
    }
}

impl Neg for &KElem {
    type Output = KElem;
    fn neg(self) -> KElem {
        KElem { n: self.n, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Mul for &KElem {
    type Output = KElem;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, o: &KElem) -> KElem {
        let mut f = KElem::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                f.add_term(e1.iter().zip(e2).map(|(a, b)| a + b).collect(), c1 * c2);
            }
        }
        f
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_weyl::{element_of_word, Word};
    use alloc::string::ToString;

    fn ex(e: &[i64]) -> KElem {
        KElem::exp(&Weight(e.to_vec()))
    }

    #[test]
    fn weyl_action_examples() {
        let c = CartanData::type_a(2).unwrap();
        let r1 = element_of_word(&c, &Word::new(vec![0])).unwrap();
        assert_eq!(ex(&[1, 0]).weyl_act(&r1), ex(&[-1, 0]));
        assert_eq!(ex(&[0, 1]).weyl_act(&r1), ex(&[1, 1]));
        assert_eq!(KElem::one(2).weyl_act(&r1), KElem::one(2));
        assert_eq!(ex(&[0, 1]).reflect(&c, 0), ex(&[1, 1]));
    }

    #[test]
    fn demazure_examples() {
        let c = CartanData::type_a(1).unwrap();
        let one = KElem::one(1);
        assert!(one.demazure(&c, 0).is_zero());
        assert_eq!(ex(&[1]).demazure(&c, 0), &ex(&[1]) + &one);
        assert_eq!(ex(&[-1]).demazure(&c, 0), -&(&one + &ex(&[1])));
        assert_eq!(one.isobaric_demazure(&c, 0), one);
        assert_eq!(ex(&[1]).isobaric_demazure(&c, 0), &(&ex(&[1]) + &one) + &ex(&[-1]));
        assert_eq!(ex(&[-1]).isobaric_demazure(&c, 0), -&one);
    }

    #[test]
    fn associated_graded_examples() {
        let a1 = KElem::one_minus_exp(&Weight(vec![-1]));
        assert_eq!(a1.associated_graded(1).to_string(), "a1");
        assert!(a1.vanishes_below(1));
        let f = &ex(&[0, -1, 0]) * &KElem::one_minus_exp(&Weight(vec![-1, -1, -1]));
        assert_eq!(f.associated_graded(1).to_string(), "a1 + a2 + a3");
        assert!(f.vanishes_below(1));
        assert_eq!(ex(&[1, 0]).associated_graded(0).to_string(), "1");
        assert!(!ex(&[1, 0]).vanishes_below(1));
    }

    #[test]
    fn display_descending() {
        let f = &ex(&[0, -1, 0]) - &ex(&[-1, -2, -1]);
        assert_eq!(f.to_string(), "e[0,-1,0] - e[-1,-2,-1]");
        assert_eq!(KElem::zero(2).to_string(), "0");
        assert_eq!(ex(&[1, 0]).scale(&BigInt::from(-3)).to_string(), "-3*e[1,0]");
    }

    #[test]
    fn laurent_division() {
        let x = &ex(&[1, 0]) - &ex(&[0, -1]);
        let y = &(&ex(&[2, -3]) + &ex(&[0, 1])).scale(&BigInt::from(2)) - &KElem::one(2);
        let p = &x * &y;
        assert_eq!(p.div_exact(&x), Some(y.clone()));
        assert_eq!(p.div_exact(&y), Some(x.clone()));
        assert_eq!((&p + &ex(&[5, 5])).div_exact(&x), None);
        assert_eq!(p.div_one_minus_exp_neg(0), None);
    }

    #[test]
    fn evaluation() {
        let t = [BigRational::new(2.into(), 3.into()), BigRational::from_integer(5.into())];
        let f = &ex(&[1, -1]) + &ex(&[-2, 0]);
        let v = f.evaluate(&t).unwrap();
        assert_eq!(v, BigRational::new(2.into(), 15.into()) + BigRational::new(9.into(), 4.into()));
    }
}
