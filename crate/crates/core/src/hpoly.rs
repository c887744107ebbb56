//! Sparse multivariate polynomials in the simple roots.
//!
//! [`HPoly`] has integer coefficients and is the coefficient ring of the
//! cohomology formulas. [`QPoly`] has rational coefficients and holds
//! associated-graded images of K-theory classes.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::root_weyl::{CartanData, WeylElement};

pub trait Scalar: Clone + PartialEq + Signed + fmt::Display + fmt::Debug {
    fn from_i64(x: i64) -> Self;
    /// Exact quotient, if there is one.
    fn try_div(&self, d: &Self) -> Option<Self>;
}

impl Scalar for BigInt {
    fn from_i64(x: i64) -> Self {
        BigInt::from(x)
    }
    fn try_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }
}

impl Scalar for BigRational {
    fn from_i64(x: i64) -> Self {
        BigRational::from_integer(BigInt::from(x))
    }
    fn try_div(&self, d: &Self) -> Option<Self> {
        (!d.is_zero()).then(|| self / d)
    }
}

/// Exponent vector ordered by total degree, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono {
    deg: u32,
    exps: Vec<u32>,
}

impl Mono {
    pub fn new(exps: Vec<u32>) -> Self {
        Mono { deg: exps.iter().sum(), exps }
    }

    pub fn one(n: usize) -> Self {
        Mono { deg: 0, exps: vec![0; n] }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    fn mul(&self, o: &Mono) -> Mono {
        Mono { deg: self.deg + o.deg, exps: self.exps.iter().zip(&o.exps).map(|(a, b)| a + b).collect() }
    }

    fn div(&self, o: &Mono) -> Option<Mono> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&o.exps) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(Mono { deg: self.deg - o.deg, exps })
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poly<C> {
    n: usize,
    terms: BTreeMap<Mono, C>,
}

pub type HPoly = Poly<BigInt>;
pub type QPoly = Poly<BigRational>;

impl<C: Scalar> Poly<C> {
    pub fn zero(n: usize) -> Self {
        Poly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, C::one())
    }

    pub fn constant(n: usize, c: C) -> Self {
        let mut p = Self::zero(n);
        p.add_term(Mono::one(n), c);
        p
    }

    pub fn from_i64(n: usize, k: i64) -> Self {
        Self::constant(n, C::from_i64(k))
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(e, C::one())
    }

    pub fn monomial(exps: Vec<u32>, c: C) -> Self {
        let n = exps.len();
        let mut p = Self::zero(n);
        p.add_term(Mono::new(exps), c);
        p
    }

    /// `Σ coeffs[i] x_i`
    pub fn linear(coeffs: &[i64]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, &k) in coeffs.iter().enumerate() {
            if k != 0 {
                let mut e = vec![0; n];
                e[i] = 1;
                p.add_term(Mono::new(e), C::from_i64(k));
            }
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, C)>>(n: usize, it: I) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in it {
            assert_eq!(e.len(), n, "exponent vector length");
            p.add_term(Mono::new(e), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[u32], &C)> {
        self.terms.iter().map(|(m, c)| (m.exps(), c))
    }

    pub fn coeff(&self, exps: &[u32]) -> C {
        self.terms.get(&Mono::new(exps.to_vec())).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.terms.get(&Mono::one(self.n)).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading(&self) -> Option<(&Mono, &C)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<u32> {
        self.leading().map(|(m, _)| m.deg)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys();
        match it.next() {
            None => true,
            Some(m) => it.all(|x| x.deg == m.deg),
        }
    }

    pub fn homogeneous_component(&self, d: u32) -> Self {
        Poly {
            n: self.n,
            terms: self.terms.iter().filter(|(m, _)| m.deg == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn add_term(&mut self, m: Mono, c: C) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() = o.get().clone() + c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero(self.n);
        }
        Poly { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.clone(), c.clone() * k.clone())).collect() }
    }

    fn mul_term(&self, m: &Mono, k: &C) -> Self {
        Poly { n: self.n, terms: self.terms.iter().map(|(x, c)| (x.mul(m), c.clone() * k.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.n);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Substitutes `x_j ↦ images[j]`; the images fix the target ring.
    pub fn substitute(&self, images: &[Poly<C>]) -> Self {
        assert_eq!(images.len(), self.n, "one image per variable");
        let target = images.first().map_or(0, |p| p.n);
        let mut powers: Vec<Vec<Poly<C>>> = images.iter().map(|p| vec![Self::one(p.n), p.clone()]).collect();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (j, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[j].len() <= e {
                    let next = &powers[j][powers[j].len() - 1] * &images[j];
                    powers[j].push(next);
                }
                t = &t * &powers[j][e];
            }
            out += &t;
        }
        out
    }

    /// Places the variables at `off..off + n` of a ring with `total` variables.
    pub fn embed(&self, off: usize, total: usize) -> Self {
        assert!(off + self.n <= total);
        let mut p = Self::zero(total);
        for (m, c) in &self.terms {
            let mut e = vec![0; total];
            e[off..off + self.n].copy_from_slice(&m.exps);
            p.add_term(Mono::new(e), c.clone());
        }
        p
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        let mut p = Poly::zero(self.n);
        for (m, c) in &self.terms {
            p.add_term(m.clone(), f(c));
        }
        p
    }

    pub fn evaluate(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.n);
        let mut total = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.exps) {
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            total = total + t;
        }
        total
    }

    /// `r_i` acting on the block of variables starting at `off`.
    pub fn reflect_block(&self, c: &CartanData, i: usize, off: usize) -> Self {
        let rank = c.rank();
        let row = c.row(i);
        let xi = off + i;
        let mut out = Self::zero(self.n);
        for (m, coef) in &self.terms {
            let sign = if m.exps[xi] % 2 == 1 { -coef.clone() } else { coef.clone() };
            let mut partial: Vec<(Vec<u32>, C)> = vec![(m.exps.clone(), sign)];
            for j in 0..rank {
                let e = m.exps[off + j];
                if j == i || e == 0 || row[j] == 0 {
                    continue;
                }
                // x_j ↦ x_j − a_ij x_i
                let neg_a = -row[j];
                let mut next = Vec::with_capacity(partial.len() * (e as usize + 1));
                for (exps, cf) in &partial {
                    let mut binom: i64 = 1;
                    let mut apow: i64 = 1;
                    for k in 0..=e {
                        let mut ex = exps.clone();
                        ex[off + j] -= k;
                        ex[xi] += k;
                        next.push((ex, cf.clone() * C::from_i64(binom) * C::from_i64(apow)));
                        binom = binom * i64::from(e - k) / i64::from(k + 1);
                        apow *= neg_a;
                    }
                }
                partial = next;
            }
            for (e, cf) in partial {
                out.add_term(Mono::new(e), cf);
            }
        }
        out
    }

    pub fn reflect(&self, c: &CartanData, i: usize) -> Self {
        self.reflect_block(c, i, 0)
    }

    /// `w · p`, substituting `α_j ↦ w(α_j)`.
    pub fn weyl_act(&self, w: &WeylElement) -> Self {
        let n = self.n;
        let images: Vec<Self> = (0..n).map(|j| Self::linear(&w.root_image(j).0)).collect();
        self.substitute(&images)
    }

    /// Divides by the variable `x_i`, if every term contains it.
    pub fn div_var(&self, i: usize) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.exps[i] == 0 {
                return None;
            }
            let mut e = m.exps.clone();
            e[i] -= 1;
            terms.insert(Mono { deg: m.deg - 1, exps: e }, c.clone());
        }
        Some(Poly { n: self.n, terms })
    }

    /// `∂_i p = (p − r_i p)/α_i` on the block starting at `off`.
    pub fn divided_difference_block(&self, c: &CartanData, i: usize, off: usize) -> Self {
        let num = self - &self.reflect_block(c, i, off);
        num.div_var(off + i).expect("divided difference numerator is divisible by the root")
    }

    pub fn divided_difference(&self, c: &CartanData, i: usize) -> Self {
        self.divided_difference_block(c, i, 0)
    }

    /// Exact quotient by leading-term elimination, `None` if `d` does not
    /// divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (dm, dc) = d.leading()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut r = self.clone();
        let mut q = Self::zero(self.n);
        while let Some((m, c)) = r.leading() {
            let qm = m.div(&dm)?;
            let qc = c.try_div(&dc)?;
            r -= &d.mul_term(&qm, &qc);
            q.add_term(qm, qc);
        }
        Some(q)
    }

    /// Display with custom variable names.
    pub fn display_with<'a>(&'a self, names: &'a dyn Fn(usize) -> String) -> impl fmt::Display + 'a {
        PolyDisplay { p: self, names }
    }
}

struct PolyDisplay<'a, C> {
    p: &'a Poly<C>,
    names: &'a dyn Fn(usize) -> String,
}

impl<C: Scalar> fmt::Display for PolyDisplay<'_, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.p.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let vars: Vec<String> = m
                .exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(j, &e)| if e == 1 { (self.names)(j) } else { format!("{}^{}", (self.names)(j), e) })
                .collect();
            if vars.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{a}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

fn root_name(j: usize) -> String {
    format!("a{}", j + 1)
}

impl<C: Scalar> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&root_name))
    }
}

impl<C: Scalar> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl<C: Scalar> AddAssign<&Poly<C>> for Poly<C> {
    fn add_assign(&mut self, o: &Poly<C>) {
        for (m, c) in &o.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<C: Scalar> SubAssign<&Poly<C>> for Poly<C> {
    fn sub_assign(&mut self, o: &Poly<C>) {
        for (m, c) in &o.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<C: Scalar> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, o: &Poly<C>) -> Poly<C> {
        let mut p = self.clone();
        p += o;
        p
    }
}

impl<C: Scalar> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, o: &Poly<C>) -> Poly<C> {
        let mut p = self.clone();
        p -= o;
        p
    }
}

impl<C: Scalar> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl<C: Scalar> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, o: &Poly<C>) -> Poly<C> {
        let mut p = Poly::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                p.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        p
    }
}

impl HPoly {
    pub fn to_rational(&self) -> QPoly {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }

    /// `α_i` in rank `n`.
    pub fn root(n: usize, i: usize) -> Self {
        Self::var(n, i)
    }
}

impl QPoly {
    /// The integer polynomial, if every coefficient is integral.
    pub fn to_integer(&self) -> Option<HPoly> {
        let mut p = HPoly::zero(self.n);
        for (m, c) in &self.terms {
            if !c.is_integer() {
                return None;
            }
            p.add_term(m.clone(), c.to_integer());
        }
        Some(p)
    }
}
