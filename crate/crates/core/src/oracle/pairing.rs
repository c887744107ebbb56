use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::kring::KElem;
use crate::root_weyl::{reflect_weight, CartanData, Subword, Weight, Word};

/// A point of the torus: a nonzero rational value for each `e^{α_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSample {
    t: Vec<BigRational>,
}

impl RationalSample {
    /// Numerators and denominators are drawn from this range.
    pub const RANGE: core::ops::RangeInclusive<i64> = 2..=97;

    pub fn new(t: Vec<BigRational>) -> Result<Self> {
        if t.iter().any(Zero::is_zero) {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self { t })
    }

    pub fn from_ratios(r: &[(i64, i64)]) -> Result<Self> {
        if r.iter().any(|&(_, q)| q == 0) {
            return Err(Error::ZeroDenominator);
        }
        Self::new(r.iter().map(|&(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q))).collect())
    }

    pub fn values(&self) -> &[BigRational] {
        &self.t
    }

    pub fn rank(&self) -> usize {
        self.t.len()
    }

    /// The value of `e^λ`.
    pub fn exp(&self, lambda: &Weight) -> BigRational {
        let mut v = BigRational::one();
        for (x, &k) in self.t.iter().zip(lambda.coords()) {
            if k != 0 {
                v *= num_traits::pow::Pow::pow(x, k as i32);
            }
        }
        v
    }

    pub fn evaluate(&self, f: &KElem) -> Result<BigRational> {
        f.evaluate(&self.t)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sheaf {
    /// The structure sheaf of a sub-Bott-Samelson manifold.
    Structure,
    /// Its ideal sheaf, the alternating sum over smaller ones.
    Ideal,
}

/// `(∏_{j∈J, j≤i} r_{q_j}) α_{q_i}`, the tangent weight at `J` along
/// position `i`.
pub fn tangent_weight(c: &CartanData, q: &Word, j: &Subword, i: usize) -> Result<Weight> {
    let letters = q.letters();
    let mut beta = Weight::simple_root(c.rank(), letters[i]);
    for pos in j.positions().rev().filter(|&p| p <= i) {
        beta = reflect_weight(c, letters[pos], &beta)?;
    }
    Ok(beta)
}

fn submasks(r: &Subword) -> impl Iterator<Item = Subword> + '_ {
    let mask = r.mask();
    let mut next = Some(mask);
    core::iter::from_fn(move || {
        let s = next?;
        next = if s == 0 { None } else { Some((s - 1) & mask) };
        Some(Subword::new(r.len(), s).expect("submask of a valid mask"))
    })
}

/// The fixed-point sum for `⟨γ, [O_{BS^R}]⟩` or `⟨γ, [I_{BS^R}]⟩`, where
/// `gamma` gives the restrictions `γ|_J` for subwords `J` of `q`.
pub fn woods_hole_pair(
    c: &CartanData,
    q: &Word,
    gamma: impl Fn(&Subword) -> Result<KElem>,
    r: &Subword,
    sample: &RationalSample,
    sheaf: Sheaf,
) -> Result<BigRational> {
    q.check(c)?;
    r.check(q)?;
    if sample.rank() != c.rank() {
        return Err(Error::RankMismatch { expected: c.rank(), found: sample.rank() });
    }
    let mut total = BigRational::zero();
    for j in submasks(r) {
        let g = gamma(&j)?;
        if g.is_zero() {
            continue;
        }
        let mut num = sample.evaluate(&g)?;
        let mut den = BigRational::one();
        for i in r.positions() {
            let e = sample.exp(&tangent_weight(c, q, &j, i)?);
            den *= BigRational::one() - &e;
            if sheaf == Sheaf::Ideal && !j.contains(i) {
                num *= e;
            }
        }
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        total += num / den;
    }
    Ok(total)
}

/// `⟨γ, [I_{BS^R}]⟩` as `Σ_{S⊆R} (−1)^{|R∖S|} ⟨γ, [O_{BS^S}]⟩`.
pub fn ideal_pair_alternating(
    c: &CartanData,
    q: &Word,
    gamma: impl Fn(&Subword) -> Result<KElem>,
    r: &Subword,
    sample: &RationalSample,
) -> Result<BigRational> {
    let mut total = BigRational::zero();
    for s in submasks(r) {
        let v = woods_hole_pair(c, q, &gamma, &s, sample, Sheaf::Structure)?;
        if (r.count() - s.count()).is_multiple_of(2) {
            total += v;
        } else {
            total -= v;
        }
    }
    Ok(total)
}

/// All pairings `⟨γ_V, sheaf_R⟩` for subwords `V, R` of `q`, rows `V` and
/// columns `R` in mask order. `gamma(V, J)` is the restriction `γ_V|_J`.
pub fn pairing_matrix(
    c: &CartanData,
    q: &Word,
    gamma: impl Fn(&Subword, &Subword) -> Result<KElem>,
    sample: &RationalSample,
    sheaf: Sheaf,
) -> Result<Vec<Vec<BigRational>>> {
    q.check(c)?;
    if sample.rank() != c.rank() {
        return Err(Error::RankMismatch { expected: c.rank(), found: sample.rank() });
    }
    let subs: Vec<Subword> = Subword::all(q.len()).collect();
    let mut exps = Vec::with_capacity(subs.len());
    for j in &subs {
        let row = (0..q.len()).map(|i| Ok(sample.exp(&tangent_weight(c, q, j, i)?))).collect::<Result<Vec<_>>>()?;
        exps.push(row);
    }
    let mut weight = alloc::vec![alloc::vec![BigRational::zero(); subs.len()]; subs.len()];
    for r in &subs {
        for j in submasks(r) {
            let e = &exps[j.mask() as usize];
            let mut num = BigRational::one();
            let mut den = BigRational::one();
            for i in r.positions() {
                den *= BigRational::one() - &e[i];
                if sheaf == Sheaf::Ideal && !j.contains(i) {
                    num *= &e[i];
                }
            }
            if den.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            weight[r.mask() as usize][j.mask() as usize] = num / den;
        }
    }
    subs.iter()
        .map(|v| {
            let vals = subs
                .iter()
                .map(|j| {
                    let g = gamma(v, j)?;
                    if g.is_zero() {
                        Ok(None)
                    } else {
                        sample.evaluate(&g).map(Some)
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(subs
                .iter()
                .map(|r| {
                    let row = &weight[r.mask() as usize];
                    submasks(r)
                        .filter_map(|j| vals[j.mask() as usize].as_ref().map(|x| x * &row[j.mask() as usize]))
                        .sum()
                })
                .collect())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Value;
    use crate::schubert::{bs_restriction, bs_structure_constant, PointClass, Theory};

    fn restr(c: &CartanData, q: &Word, v: &Subword, class: PointClass) -> impl Fn(&Subword) -> Result<KElem> {
        let (c, q, v) = (c.clone(), q.clone(), *v);
        move |j: &Subword| match bs_restriction(&c, &q, &v, j, class)? {
            Value::K(k) => Ok(k),
            Value::H(_) => unreachable!(),
        }
    }

    fn samples(n: usize) -> Vec<RationalSample> {
        [(2, 3), (5, 7), (11, 4), (3, 13), (17, 5), (6, 19)]
            .windows(n)
            .map(|w| RationalSample::from_ratios(w).unwrap())
            .collect()
    }

    #[test]
    fn empty_word() {
        let c = CartanData::type_a(2).unwrap();
        let q = Word::default();
        let s = &samples(2)[0];
        let one = |_: &Subword| Ok(KElem::one(2));
        assert!(woods_hole_pair(&c, &q, one, &Subword::empty(0), s, Sheaf::Structure).unwrap().is_one());
    }

    #[test]
    fn duality_and_rational_sum() {
        for c in [CartanData::type_a(2).unwrap(), CartanData::type_b(2).unwrap()] {
            let q = Word::new(alloc::vec![0, 1, 0, 1]);
            for s in samples(2).iter().take(3) {
                for v in Subword::all(q.len()) {
                    for w in Subword::all(q.len()) {
                        let circ =
                            woods_hole_pair(&c, &q, restr(&c, &q, &v, PointClass::TauCirc), &w, s, Sheaf::Structure);
                        assert_eq!(circ.unwrap().is_one(), v == w);
                        let tau = restr(&c, &q, &v, PointClass::Tau);
                        if v.is_subset(&w) {
                            assert!(woods_hole_pair(&c, &q, &tau, &w, s, Sheaf::Structure).unwrap().is_one());
                        }
                        let ideal = woods_hole_pair(&c, &q, &tau, &w, s, Sheaf::Ideal).unwrap();
                        assert_eq!(ideal, ideal_pair_alternating(&c, &q, &tau, &w, s).unwrap());
                        assert_eq!(ideal.is_one(), v == w);
                        assert_eq!(ideal.is_zero(), v != w);
                    }
                }
            }
        }
    }

    #[test]
    fn structure_constants_are_pairings() {
        let c = CartanData::type_a(2).unwrap();
        let q = Word::new(alloc::vec![0, 1, 0]);
        let s = &samples(2)[1];
        for (class, theory, sheaf) in [
            (PointClass::TauCirc, Theory::KStructure, Sheaf::Structure),
            (PointClass::Tau, Theory::KIdeal, Sheaf::Ideal),
        ] {
            for r in Subword::all(3) {
                for t in Subword::all(3) {
                    let (fr, ft) = (restr(&c, &q, &r, class), restr(&c, &q, &t, class));
                    let prod = |j: &Subword| Ok(&fr(j)? * &ft(j)?);
                    for v in Subword::all(3) {
                        let d = bs_structure_constant(&c, &q, &r, &t, &v, theory).unwrap();
                        let d = s.evaluate(d.as_k().unwrap()).unwrap();
                        assert_eq!(woods_hole_pair(&c, &q, prod, &v, s, sheaf).unwrap(), d, "{r} {t} {v}");
                    }
                }
            }
        }
    }

    #[test]
    fn matrix_agrees_with_single_pairings() {
        let c = CartanData::type_b(2).unwrap();
        let q = Word::new(alloc::vec![1, 0, 0, 1]);
        let s = &samples(2)[2];
        for (class, sheaf) in [(PointClass::TauCirc, Sheaf::Structure), (PointClass::Tau, Sheaf::Ideal)] {
            let g = |v: &Subword, j: &Subword| restr(&c, &q, v, class)(j);
            let m = pairing_matrix(&c, &q, g, s, sheaf).unwrap();
            for (a, row) in m.iter().enumerate() {
                for (b, x) in row.iter().enumerate() {
                    let v = Subword::new(4, a as u64).unwrap();
                    let w = Subword::new(4, b as u64).unwrap();
                    assert_eq!(*x, woods_hole_pair(&c, &q, restr(&c, &q, &v, class), &w, s, sheaf).unwrap());
                    assert_eq!(x.is_one(), a == b);
                }
            }
        }
    }

    #[test]
    fn zero_denominators_are_reported() {
        let c = CartanData::type_a(1).unwrap();
        let q = Word::new(alloc::vec![0]);
        let s = RationalSample::from_ratios(&[(1, 1)]).unwrap();
        let one = |_: &Subword| Ok(KElem::one(1));
        assert_eq!(woods_hole_pair(&c, &q, one, &Subword::full(1), &s, Sheaf::Structure), Err(Error::ZeroDenominator));
        assert!(RationalSample::from_ratios(&[(0, 3)]).is_err());
    }
}
