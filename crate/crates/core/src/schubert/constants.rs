use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;

use super::{eval_h, eval_k, HStep, KStep};
use crate::error::{Error, Result};
use crate::hpoly::HPoly;
use crate::kring::KElem;
use crate::ring::Value;
use crate::root_weyl::{
    bruhat_leq, demazure_product, element_of_word, subwords_by_product, subwords_with_product, CartanData, Subword,
    SubwordMode, WeylElement, Word,
};

/// The two equivalent cohomology formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HVariant {
    /// Letters outside `P ∪ R` contribute `∂ r`.
    Ddr,
    /// Letters outside `P ∪ R` contribute `r(−∂)`.
    Rdd,
}

/// Basis of `K_T(G/B)`: ideal sheaves (`ξ`, constants `a`) or structure
/// sheaves (`ξ∘`, constants `a∘`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KBasis {
    Ideal,
    Structure,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theory {
    H,
    KIdeal,
    KStructure,
}

impl Theory {
    pub fn k_basis(self) -> Option<KBasis> {
        match self {
            Theory::H => None,
            Theory::KIdeal => Some(KBasis::Ideal),
            Theory::KStructure => Some(KBasis::Structure),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Theory::H => "H",
            Theory::KIdeal => "K-ideal",
            Theory::KStructure => "K-structure",
        }
    }

    pub(crate) fn zero(self, n: usize) -> Value {
        match self {
            Theory::H => Value::H(HPoly::zero(n)),
            _ => Value::K(KElem::zero(n)),
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theory {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "h" | "cohomology" => Ok(Theory::H),
            "k-ideal" | "ideal" | "k" => Ok(Theory::KIdeal),
            "k-structure" | "structure" | "k0" => Ok(Theory::KStructure),
            _ => Err(Error::Precondition(alloc::format!("unknown theory {s:?}"))),
        }
    }
}

fn parity_sign(k: usize) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

fn c_sum(c: &CartanData, q: &Word, ps: &[Subword], rs: &[Subword], variant: HVariant) -> HPoly {
    let mut total = HPoly::zero(c.rank());
    for p in ps {
        for r in rs {
            let steps = (0..q.len()).map(|pos| {
                let step = match (p.contains(pos), r.contains(pos)) {
                    (true, true) => HStep::AlphaR,
                    (false, false) => match variant {
                        HVariant::Ddr => HStep::DR,
                        HVariant::Rdd => HStep::RNegD,
                    },
                    _ => HStep::R,
                };
                (pos, step)
            });
            total += &eval_h(c, q, steps);
        }
    }
    total
}

fn a_sum(c: &CartanData, q: &Word, ps: &[Subword], rs: &[Subword], basis: KBasis, sign: usize) -> KElem {
    let mut total = KElem::zero(c.rank());
    for p in ps {
        for r in rs {
            let steps = (0..q.len()).map(|pos| {
                let step = match (p.contains(pos), r.contains(pos), basis) {
                    (true, true, _) => KStep::BR,
                    (false, false, KBasis::Ideal) => KStep::EPosRNegD,
                    (false, false, KBasis::Structure) => KStep::ENegRNegIso,
                    (_, _, KBasis::Ideal) => KStep::R,
                    (_, _, KBasis::Structure) => KStep::ENegR,
                };
                (pos, step)
            });
            let term = eval_k(c, q, steps);
            match basis {
                KBasis::Ideal => total += &term.scale(&parity_sign(q.len() + p.count() + r.count())),
                KBasis::Structure => total += &term,
            }
        }
    }
    match basis {
        KBasis::Ideal => total.scale(&parity_sign(sign)),
        KBasis::Structure => total,
    }
}

fn reduced_element(c: &CartanData, q: &Word) -> Result<WeylElement> {
    let w = element_of_word(c, q)?;
    if w.length() != q.len() {
        return Err(Error::NotReduced);
    }
    Ok(w)
}

fn check_elements(c: &CartanData, xs: &[&WeylElement]) -> Result<()> {
    for x in xs {
        if x.rank() != c.rank() {
            return Err(Error::RankMismatch { expected: c.rank(), found: x.rank() });
        }
    }
    Ok(())
}

/// `c_{uv}^w` from a reduced word `q` for `w`.
pub fn structure_constant_h_word(
    c: &CartanData,
    u: &WeylElement,
    v: &WeylElement,
    q: &Word,
    variant: HVariant,
) -> Result<HPoly> {
    check_elements(c, &[u, v])?;
    let w = reduced_element(c, q)?;
    if u.length() + v.length() < w.length() || !bruhat_leq(c, u, &w) || !bruhat_leq(c, v, &w) {
        return Ok(HPoly::zero(c.rank()));
    }
    let ps = subwords_with_product(c, q, u, SubwordMode::Reduced)?;
    let rs = subwords_with_product(c, q, v, SubwordMode::Reduced)?;
    Ok(c_sum(c, q, &ps, &rs, variant))
}

/// `c_{uv}^w` using the canonical reduced word of `w`.
pub fn structure_constant_h(
    c: &CartanData,
    u: &WeylElement,
    v: &WeylElement,
    w: &WeylElement,
    variant: HVariant,
) -> HPoly {
    structure_constant_h_word(c, u, v, w.word(), variant).expect("canonical words are reduced")
}

/// `a_{uv}^w` or `a∘_{uv}^w` from any word `q` whose Demazure product is `w`.
pub fn structure_constant_k_word(
    c: &CartanData,
    u: &WeylElement,
    v: &WeylElement,
    q: &Word,
    basis: KBasis,
) -> Result<KElem> {
    check_elements(c, &[u, v])?;
    let w = demazure_product(c, q)?;
    if !bruhat_leq(c, u, &w) || !bruhat_leq(c, v, &w) {
        return Ok(KElem::zero(c.rank()));
    }
    let ps = subwords_with_product(c, q, u, SubwordMode::Demazure)?;
    let rs = subwords_with_product(c, q, v, SubwordMode::Demazure)?;
    let sign = u.length() + v.length() + w.length();
    Ok(a_sum(c, q, &ps, &rs, basis, sign))
}

pub fn structure_constant_k(c: &CartanData, u: &WeylElement, v: &WeylElement, w: &WeylElement, basis: KBasis) -> KElem {
    structure_constant_k_word(c, u, v, w.word(), basis).expect("canonical words are valid")
}

pub fn structure_constant(c: &CartanData, u: &WeylElement, v: &WeylElement, w: &WeylElement, theory: Theory) -> Value {
    match theory.k_basis() {
        None => Value::H(structure_constant_h(c, u, v, w, HVariant::Ddr)),
        Some(b) => Value::K(structure_constant_k(c, u, v, w, b)),
    }
}

fn restriction_h_sum(c: &CartanData, q: &Word, rs: &[Subword]) -> HPoly {
    let mut total = HPoly::zero(c.rank());
    for r in rs {
        let steps = (0..q.len()).map(|pos| (pos, if r.contains(pos) { HStep::AlphaR } else { HStep::R }));
        total += &eval_h(c, q, steps);
    }
    total
}

fn restriction_k_sum(c: &CartanData, q: &Word, rs: &[Subword], vlen: usize, basis: KBasis) -> KElem {
    let mut total = KElem::zero(c.rank());
    for r in rs {
        let steps = (0..q.len()).map(|pos| {
            let step = match (r.contains(pos), basis) {
                (true, _) => KStep::BR,
                (false, KBasis::Ideal) => KStep::R,
                (false, KBasis::Structure) => KStep::ENegR,
            };
            (pos, step)
        });
        let term = eval_k(c, q, steps);
        match basis {
            KBasis::Ideal => total += &term.scale(&parity_sign(r.count() + vlen)),
            KBasis::Structure => total += &term,
        }
    }
    total
}

/// `S_v|_w` from a reduced word `q` for `w`.
pub fn restriction_h_word(c: &CartanData, v: &WeylElement, q: &Word) -> Result<HPoly> {
    check_elements(c, &[v])?;
    reduced_element(c, q)?;
    let rs = subwords_with_product(c, q, v, SubwordMode::Reduced)?;
    Ok(restriction_h_sum(c, q, &rs))
}

pub fn restriction_h(c: &CartanData, v: &WeylElement, w: &WeylElement) -> HPoly {
    restriction_h_word(c, v, w.word()).expect("canonical words are reduced")
}

/// `ξ_v|_w` or `ξ∘_v|_w` from any word `q` with Demazure product `w`.
pub fn restriction_k_word(c: &CartanData, v: &WeylElement, q: &Word, basis: KBasis) -> Result<KElem> {
    check_elements(c, &[v])?;
    let rs = subwords_with_product(c, q, v, SubwordMode::Demazure)?;
    Ok(restriction_k_sum(c, q, &rs, v.length(), basis))
}

pub fn restriction_k(c: &CartanData, v: &WeylElement, w: &WeylElement, basis: KBasis) -> KElem {
    restriction_k_word(c, v, w.word(), basis).expect("canonical words are valid")
}

pub fn restriction(c: &CartanData, v: &WeylElement, w: &WeylElement, theory: Theory) -> Value {
    match theory.k_basis() {
        None => Value::H(restriction_h(c, v, w)),
        Some(b) => Value::K(restriction_k(c, v, w, b)),
    }
}

/// Subwords of one ambient word grouped by product, for computing many
/// constants with the same `w`.
pub struct WordIndex {
    q: Word,
    w: WeylElement,
    reduced: BTreeMap<WeylElement, Vec<Subword>>,
    demazure: BTreeMap<WeylElement, Vec<Subword>>,
}

impl WordIndex {
    pub fn new(c: &CartanData, q: &Word) -> Result<Self> {
        let w = demazure_product(c, q)?;
        let reduced =
            if w.length() == q.len() { subwords_by_product(c, q, SubwordMode::Reduced)? } else { BTreeMap::new() };
        let demazure = subwords_by_product(c, q, SubwordMode::Demazure)?;
        Ok(WordIndex { q: q.clone(), w, reduced, demazure })
    }

    pub fn word(&self) -> &Word {
        &self.q
    }

    pub fn element(&self) -> &WeylElement {
        &self.w
    }

    pub fn is_reduced(&self) -> bool {
        self.w.length() == self.q.len()
    }

    /// Elements below `w` in Bruhat order, in length-lex order.
    pub fn interval(&self) -> impl Iterator<Item = &WeylElement> {
        self.demazure.keys()
    }

    pub fn subwords(&self, u: &WeylElement, mode: SubwordMode) -> &[Subword] {
        let map = match mode {
            SubwordMode::Reduced => &self.reduced,
            SubwordMode::Demazure => &self.demazure,
        };
        map.get(u).map_or(&[], Vec::as_slice)
    }

    pub fn c(&self, c: &CartanData, u: &WeylElement, v: &WeylElement, variant: HVariant) -> Result<HPoly> {
        if !self.is_reduced() {
            return Err(Error::NotReduced);
        }
        if u.length() + v.length() < self.w.length() {
            return Ok(HPoly::zero(c.rank()));
        }
        let ps = self.subwords(u, SubwordMode::Reduced);
        let rs = self.subwords(v, SubwordMode::Reduced);
        Ok(c_sum(c, &self.q, ps, rs, variant))
    }

    pub fn a(&self, c: &CartanData, u: &WeylElement, v: &WeylElement, basis: KBasis) -> KElem {
        let ps = self.subwords(u, SubwordMode::Demazure);
        let rs = self.subwords(v, SubwordMode::Demazure);
        a_sum(c, &self.q, ps, rs, basis, u.length() + v.length() + self.w.length())
    }

    pub fn value(&self, c: &CartanData, u: &WeylElement, v: &WeylElement, theory: Theory) -> Result<Value> {
        Ok(match theory.k_basis() {
            None => Value::H(self.c(c, u, v, HVariant::Ddr)?),
            Some(b) => Value::K(self.a(c, u, v, b)),
        })
    }
}
