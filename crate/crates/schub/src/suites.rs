//! Verification suites. Each check counts its cases and keeps the first few
//! failures; a suite report is the list of its checks.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rayon::prelude::*;
use schub_core::hecke_ops::{check_braid, check_square, OperatorKind, SquareClass};
use schub_core::kring::KElem;
use schub_core::oracle::{calibrate, oracle_restriction_h, pairing_matrix, DoubleSchubert, Localizer, Sheaf};
use schub_core::ring::Value;
use schub_core::root_weyl::perm::{element_from_perm, element_to_perm};
use schub_core::root_weyl::{element_of_word, enumerate_group, reduced_words, subwords_with_product, SubwordMode};
use schub_core::schubert::{
    bs_restriction, bs_structure_constant, recursion_c, restriction_h, restriction_k, HVariant, KBasis, PointClass,
    RecursionSolver, Theory, WordIndex,
};
use schub_core::{CartanData, HPoly, Subword, WeylElement, Word};

use crate::error::{CliError, Result};
use crate::sample::{stream_rng, with_resample};

/// Largest group a suite will enumerate.
pub const GROUP_LIMIT: usize = 10_000;
const KEEP_FAILURES: usize = 10;

#[derive(Clone, Debug, Default)]
pub struct Tally {
    pub cases: u64,
    pub failures: u64,
    pub examples: Vec<String>,
}

impl Tally {
    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < KEEP_FAILURES {
                self.examples.push(what());
            }
        }
    }

    pub fn merge(mut self, o: Tally) -> Tally {
        self.cases += o.cases;
        self.failures += o.failures;
        let room = KEEP_FAILURES.saturating_sub(self.examples.len());
        self.examples.extend(o.examples.into_iter().take(room));
        self
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
    pub examples: Vec<String>,
    pub millis: u128,
    /// Non-gating checks are reported but never fail a suite.
    pub gating: bool,
    pub note: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "name": self.name,
            "passed": self.passed(),
            "gating": self.gating,
            "cases": self.cases,
            "failures": self.failures,
            "examples": self.examples,
            "millis": self.millis as u64,
            "note": self.note,
        })
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match (self.passed(), self.gating) {
            (true, _) => "PASS",
            (false, true) => "FAIL",
            (false, false) => "INFO",
        };
        write!(f, "{status} {} ({} cases, {} ms)", self.name, self.cases, self.millis)?;
        if let Some(n) = &self.note {
            write!(f, " {n}")?;
        }
        for e in &self.examples {
            write!(f, "\n    {e}")?;
        }
        Ok(())
    }
}

pub fn run_check(name: impl Into<String>, f: impl FnOnce() -> Result<Tally>) -> Check {
    let start = Instant::now();
    let tally = f().unwrap_or_else(|e| Tally { cases: 1, failures: 1, examples: vec![e.to_string()] });
    Check {
        name: name.into(),
        cases: tally.cases,
        failures: tally.failures,
        examples: tally.examples,
        millis: start.elapsed().as_millis(),
        gating: true,
        note: None,
    }
}

fn group(c: &CartanData) -> Result<Vec<WeylElement>> {
    Ok(enumerate_group(c, GROUP_LIMIT)?)
}

fn triple(u: &WeylElement, v: &WeylElement, w: &WeylElement) -> String {
    format!("u=[{}] v=[{}] w=[{}]", u.word(), v.word(), w.word())
}

fn a(n: usize) -> CartanData {
    CartanData::type_a(n).expect("built-in type")
}

fn b(n: usize) -> CartanData {
    CartanData::type_b(n).expect("built-in type")
}

fn elem(c: &CartanData, letters: &[usize]) -> WeylElement {
    element_of_word(c, &Word::new(letters.to_vec())).expect("valid letters")
}

fn perm(c: &CartanData, p: &[usize]) -> Result<WeylElement> {
    Ok(element_from_perm(c, p)?)
}

/// The worked examples, compared as printed values.
pub fn golden_examples() -> Result<Tally> {
    let mut t = Tally::default();
    let mut expect = |what: &str, got: String, want: &str| {
        t.record(got == want, || format!("{what}: got {got}, want {want}"));
    };
    let c2 = a(2);
    let w0 = elem(&c2, &[0, 1, 0]);
    let h = |c: &CartanData, u: &WeylElement, v: &WeylElement, w: &WeylElement| {
        schub_core::schubert::structure_constant_h(c, u, v, w, HVariant::Ddr).to_string()
    };
    expect("A2 c(r1, r1r2, w0)", h(&c2, &elem(&c2, &[0]), &elem(&c2, &[0, 1]), &w0), "1");
    expect("A2 c(r1, r2r1, w0)", h(&c2, &elem(&c2, &[0]), &elem(&c2, &[1, 0]), &w0), "0");
    let c3 = a(3);
    let (u, v, w) = (perm(&c3, &[1, 4, 3, 2])?, perm(&c3, &[3, 2, 1, 4])?, perm(&c3, &[3, 4, 2, 1])?);
    expect("A3 c([1432],[3214],[3421])", h(&c3, &u, &v, &w), "a1 + a2 + a3");
    let q = Word::new(vec![0, 1, 2, 0, 1]);
    let golden_a = "e[0,-1,0] - e[-1,-2,-1]";
    let a_q = schub_core::schubert::structure_constant_k_word(&c3, &u, &v, &q, KBasis::Ideal)?;
    expect("A3 a([1432],[3214],[3421]) on 1 2 3 1 2", a_q.to_string(), golden_a);
    let a_w = schub_core::schubert::structure_constant_k(&c3, &u, &v, &w, KBasis::Ideal);
    expect("A3 a([1432],[3214],[3421])", a_w.to_string(), golden_a);
    let (u, v, w) = (perm(&c2, &[3, 1, 2])?, perm(&c2, &[1, 3, 2])?, perm(&c2, &[3, 2, 1])?);
    expect("recursion c([312],[132],[321]) on r1", recursion_c(&c2, &u, &v, &w, 0)?.to_string(), "1");
    expect("recursion c([312],[132],[321]) on r2", recursion_c(&c2, &u, &v, &w, 1)?.to_string(), "1");
    let (u, v, w) = (perm(&c2, &[2, 1, 3])?, perm(&c2, &[1, 3, 2])?, perm(&c2, &[2, 3, 1])?);
    expect("recursion c([213],[132],[231])", recursion_c(&c2, &u, &v, &w, 0)?.to_string(), "1");
    expect("recursion c([213],[132],[231]) memoized", RecursionSolver::new(&c2).solve(&u, &v, &w).to_string(), "1");
    let r1 = elem(&c2, &[0]);
    expect("A2 S_r1 at r1r2", restriction_h(&c2, &r1, &elem(&c2, &[0, 1])).to_string(), "a1");
    expect("A2 S_r1 at r2r1", restriction_h(&c2, &r1, &elem(&c2, &[1, 0])).to_string(), "a1 + a2");
    let c1 = a(1);
    let s = restriction_k(&c1, &WeylElement::identity(&c1), &elem(&c1, &[0]), KBasis::Structure);
    expect("A1 structure-sheaf class of e at r1", s.to_string(), "e[-1]");
    Ok(t)
}

fn expected_square(kind: OperatorKind) -> SquareClass {
    match kind {
        OperatorKind::L | OperatorKind::D => SquareClass::Zero,
        OperatorKind::Lambda | OperatorKind::LambdaCirc => SquareClass::Idempotent,
        OperatorKind::J | OperatorKind::Xi | OperatorKind::XiCirc => SquareClass::Involution,
    }
}

/// Squares of every operator kind at every generator of `c`.
pub fn operator_squares(c: &CartanData) -> Result<Tally> {
    let mut t = Tally::default();
    for kind in OperatorKind::ALL {
        for i in 0..c.rank() {
            let got = check_square(c, i, kind)?;
            t.record(got == expected_square(kind), || format!("{kind}_{} squares to {got:?}", i + 1));
        }
    }
    Ok(t)
}

/// Braid relations of `kinds` for every pair of generators of `c`.
pub fn operator_braids(c: &CartanData, kinds: &[OperatorKind]) -> Result<Tally> {
    let jobs: Vec<(OperatorKind, usize, usize)> = kinds
        .iter()
        .flat_map(|&k| (0..c.rank()).flat_map(move |i| (i + 1..c.rank()).map(move |j| (k, i, j))))
        .collect();
    jobs.par_iter()
        .map(|&(k, i, j)| {
            let mut t = Tally::default();
            let ok = check_braid(c, i, j, k)?;
            t.record(ok, || format!("{k} braid fails for generators {} {}", i + 1, j + 1));
            Ok(t)
        })
        .try_reduce(Tally::default, |x, y| Ok(x.merge(y)))
}

/// Squares and braids: `L` in A2 and B2, `Λ`, `Λ∘` in A2, every kind when
/// the generators commute.
pub fn operator_identities() -> Result<Tally> {
    let mut t = Tally::default();
    for c in [a(2), b(2)] {
        t = t.merge(operator_squares(&c)?);
    }
    t = t.merge(operator_braids(&a(2), &OperatorKind::ALL)?);
    t = t.merge(operator_braids(&b(2), &[OperatorKind::L])?);
    let a1a1 = CartanData::from_rows(&[vec![2, 0], vec![0, 2]])?;
    t = t.merge(operator_braids(&a1a1, &OperatorKind::ALL)?);
    Ok(t)
}

/// The braid relation for `L` in G2 under a term budget. Exceeding the
/// budget is reported, not failed.
#[cfg(feature = "g2")]
pub fn g2_braid_attempt(budget: usize) -> Check {
    use schub_core::hecke_ops::{check_braid_budget, BraidOutcome};
    let start = Instant::now();
    let out = check_braid_budget(&CartanData::g2(), 0, 1, OperatorKind::L, Some(budget));
    let (cases, failures, note) = match out {
        Ok(BraidOutcome::Holds { terms }) => (1, 0, format!("holds, {terms} terms")),
        Ok(BraidOutcome::Fails { left_terms, right_terms }) => {
            (1, 1, format!("fails, {left_terms} vs {right_terms} terms"))
        }
        Ok(BraidOutcome::BudgetExceeded { terms }) => (0, 0, format!("budget of {terms} terms exceeded")),
        Err(e) => (1, 1, e.to_string()),
    };
    Check {
        name: "G2 braid relation for L".into(),
        cases,
        failures,
        examples: vec![],
        millis: start.elapsed().as_millis(),
        gating: false,
        note: Some(note),
    }
}

/// `c` from subword sums against the localization solve and the recursion,
/// on every triple of the group.
pub fn oracle_h(c: &CartanData) -> Result<Tally> {
    let g = group(c)?;
    let loc = Localizer::new(c, &g, |v, x| restriction_h(c, v, x));
    let idx: Vec<WordIndex> =
        loc.group().iter().map(|w| WordIndex::new(c, w.word())).collect::<schub_core::Result<_>>()?;
    loc.group()
        .par_iter()
        .map(|u| {
            let mut rec = RecursionSolver::new(c);
            let mut t = Tally::default();
            for v in loc.group() {
                let sol = loc.solve(u, v)?;
                for (k, w) in loc.group().iter().enumerate() {
                    let direct = idx[k].c(c, u, v, HVariant::Ddr)?;
                    let ok = sol[k] == direct && rec.solve(u, v, w) == direct;
                    t.record(ok, || format!("{}: {direct} / {}", triple(u, v, w), sol[k]));
                }
            }
            Ok(t)
        })
        .try_reduce(Tally::default, |x, y| Ok(x.merge(y)))
}

/// `a` and `a∘` against the localization solve on every triple.
pub fn oracle_k(c: &CartanData) -> Result<Tally> {
    let g = group(c)?;
    let mut t = Tally::default();
    for basis in [KBasis::Ideal, KBasis::Structure] {
        let loc = Localizer::new(c, &g, |v, x| restriction_k(c, v, x, basis));
        let idx: Vec<WordIndex> =
            loc.group().iter().map(|w| WordIndex::new(c, w.word())).collect::<schub_core::Result<_>>()?;
        let part = loc
            .group()
            .par_iter()
            .map(|u| {
                let mut t = Tally::default();
                for v in loc.group() {
                    let sol = loc.solve(u, v)?;
                    for (k, w) in loc.group().iter().enumerate() {
                        let direct = idx[k].a(c, u, v, basis);
                        t.record(sol[k] == direct, || format!("{basis:?} {}: {direct} / {}", triple(u, v, w), sol[k]));
                    }
                }
                Ok::<_, CliError>(t)
            })
            .try_reduce(Tally::default, |x, y| Ok(x.merge(y)))?;
        t = t.merge(part);
    }
    Ok(t)
}

/// Restrictions of double Schubert polynomials against the subword formula,
/// under the calibrated convention.
pub fn double_schubert(c: &CartanData) -> Result<Tally> {
    if !c.is_type_a() {
        return Err(CliError::Usage("double Schubert polynomials need type A".into()));
    }
    let conv = calibrate(c)?;
    let g = group(c)?;
    let mut ds = DoubleSchubert::new(c.rank() + 1);
    let mut t = Tally::default();
    for v in &g {
        for w in &g {
            let got = oracle_restriction_h(&mut ds, &element_to_perm(v), &element_to_perm(w), conv)?;
            let want = restriction_h(c, v, w);
            t.record(got == want, || format!("v=[{}] w=[{}]: {got} / {want}", v.word(), w.word()));
        }
    }
    Ok(t)
}

fn degenerates(c: &CartanData, u: &WeylElement, v: &WeylElement, w: &WeylElement, t: &mut Tally) {
    let Some(d) = (u.length() + v.length()).checked_sub(w.length()) else {
        return;
    };
    let d = d as u32;
    let h = schub_core::schubert::structure_constant_h(c, u, v, w, HVariant::Ddr).to_rational();
    for basis in [KBasis::Ideal, KBasis::Structure] {
        let k = schub_core::schubert::structure_constant_k(c, u, v, w, basis);
        let ok = k.vanishes_below(d) && k.associated_graded(d) == h;
        t.record(ok, || format!("{basis:?} {}: gr = {} / c = {h}", triple(u, v, w), k.associated_graded(d)));
    }
}

/// `gr(a) = gr(a∘) = c` on every triple, or on `random` seeded triples.
pub fn degeneration(c: &CartanData, random: Option<(usize, u64)>) -> Result<Tally> {
    let g = group(c)?;
    let triples: Vec<(usize, usize, usize)> = match random {
        None => {
            let n = g.len();
            (0..n).flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k)))).collect()
        }
        Some((count, seed)) => {
            let mut rng = stream_rng(seed, 0);
            (0..count)
                .map(|_| (rng.gen_range(0..g.len()), rng.gen_range(0..g.len()), rng.gen_range(0..g.len())))
                .collect()
        }
    };
    Ok(triples
        .par_iter()
        .map(|&(i, j, k)| {
            let mut t = Tally::default();
            degenerates(c, &g[i], &g[j], &g[k], &mut t);
            t
        })
        .reduce(Tally::default, Tally::merge))
}

/// Every coefficient of every `c` is nonnegative.
pub fn positivity(c: &CartanData) -> Result<Tally> {
    let g = group(c)?;
    g.par_iter()
        .map(|w| {
            let idx = WordIndex::new(c, w.word())?;
            let mut t = Tally::default();
            for u in &g {
                for v in &g {
                    let h = idx.c(c, u, v, HVariant::Ddr)?;
                    let ok = h.terms().all(|(_, k)| !k.is_negative());
                    t.record(ok, || format!("{}: {h}", triple(u, v, w)));
                }
            }
            Ok(t)
        })
        .try_reduce(Tally::default, |x, y| Ok(x.merge(y)))
}

fn as_k(v: Value) -> KElem {
    match v {
        Value::K(k) => k,
        Value::H(_) => unreachable!("K-theory class"),
    }
}

/// `c`, `a`, `a∘` as sums of Bott-Samelson constants over the canonical
/// word of `w`.
pub fn bott_samelson_sums(c: &CartanData) -> Result<Tally> {
    let g = group(c)?;
    let n = c.rank();
    g.par_iter()
        .map(|w| {
            let q = w.word().clone();
            let full = Subword::full(q.len());
            let idx = WordIndex::new(c, &q)?;
            let mut t = Tally::default();
            for u in &g {
                for v in &g {
                    let mut h = HPoly::zero(n);
                    for r in subwords_with_product(c, &q, u, SubwordMode::Reduced)? {
                        for s in subwords_with_product(c, &q, v, SubwordMode::Reduced)? {
                            if let Value::H(x) = bs_structure_constant(c, &q, &r, &s, &full, Theory::H)? {
                                h += &x;
                            }
                        }
                    }
                    let want = idx.c(c, u, v, HVariant::Ddr)?;
                    t.record(h == want, || format!("H {}: {h} / {want}", triple(u, v, w)));
                    let (mut a, mut a0) = (KElem::zero(n), KElem::zero(n));
                    for r in subwords_with_product(c, &q, u, SubwordMode::Demazure)? {
                        for s in subwords_with_product(c, &q, v, SubwordMode::Demazure)? {
                            let d = as_k(bs_structure_constant(c, &q, &r, &s, &full, Theory::KIdeal)?);
                            if (r.count() + s.count() + u.length() + v.length()) % 2 == 0 {
                                a += &d;
                            } else {
                                a -= &d;
                            }
                            a0 += &as_k(bs_structure_constant(c, &q, &r, &s, &full, Theory::KStructure)?);
                        }
                    }
                    let (wa, wa0) = (idx.a(c, u, v, KBasis::Ideal), idx.a(c, u, v, KBasis::Structure));
                    t.record(a == wa, || format!("a {}: {a} / {wa}", triple(u, v, w)));
                    t.record(a0 == wa0, || format!("a0 {}: {a0} / {wa0}", triple(u, v, w)));
                }
            }
            Ok(t)
        })
        .try_reduce(Tally::default, |x, y| Ok(x.merge(y)))
}

/// Every word over the generators of `c` of length at most `max_len`.
pub fn all_words(c: &CartanData, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::default()];
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..max_len {
        layer = layer.iter().flat_map(|p| (0..c.rank()).map(move |i| [p.as_slice(), &[i]].concat())).collect();
        out.extend(layer.iter().cloned().map(Word::new));
    }
    out
}

fn tail(s: &Subword) -> Subword {
    Subword::new(s.len() - 1, s.mask() >> 1).expect("shorter mask")
}

/// Restrictions of `τ` and `τ∘` at subwords starting with the first letter,
/// expressed through the word with that letter removed.
pub fn restriction_relations(c: &CartanData, max_len: usize) -> Result<Tally> {
    let n = c.rank();
    let mut t = Tally::default();
    for q in all_words(c, max_len).into_iter().filter(|q| !q.is_empty()) {
        let alpha = q.letters()[0];
        let q0 = Word::new(q.letters()[1..].to_vec());
        let b = &KElem::one(n) - &KElem::exp_root(n, alpha, -1);
        let em = KElem::exp_root(n, alpha, -1);
        for class in [PointClass::Tau, PointClass::TauCirc] {
            let restr = |q: &Word, u: &Subword, j: &Subword| bs_restriction(c, q, u, j, class).map(as_k);
            for u in Subword::all(q.len()) {
                for j in Subword::all(q.len()).filter(|j| j.contains(0)) {
                    let (u0, j0) = (tail(&u), tail(&j));
                    let got = restr(&q, &u, &j)?;
                    let expect = match (u.contains(0), class) {
                        (true, _) => &b * &restr(&q0, &u0, &j0)?.reflect(c, alpha),
                        (false, PointClass::TauCirc) => &em * &restr(&q0, &u0, &j0)?.reflect(c, alpha),
                        (false, _) => restr(&q0, &u0, &j0)?.reflect(c, alpha),
                    };
                    t.record(got == expect, || format!("{class:?} Q=[{q}] U={u} J={j}: {got} / {expect}"));
                }
            }
        }
    }
    Ok(t)
}

fn lookup(table: &[Vec<KElem>]) -> impl Fn(&Subword, &Subword) -> schub_core::Result<KElem> + '_ {
    move |v, j| Ok(table[v.mask() as usize][j.mask() as usize].clone())
}

fn restriction_table(c: &CartanData, q: &Word, class: PointClass) -> Result<Vec<Vec<KElem>>> {
    Subword::all(q.len())
        .map(|v| Subword::all(q.len()).map(|j| Ok(as_k(bs_restriction(c, q, &v, &j, class)?))).collect())
        .collect()
}

/// Fixed-point pairings of the point classes against structure and ideal
/// sheaves at `samples` seeded rational points per word:
/// `⟨τ∘_V, O_W⟩ = ⟨τ_V, I_W⟩ = [V=W]` and `⟨τ_V, O_W⟩ = 1` for `V ⊆ W`.
pub fn woods_hole(c: &CartanData, max_len: usize, samples: usize, seed: u64) -> Result<Tally> {
    let words = all_words(c, max_len);
    words
        .par_iter()
        .enumerate()
        .map(|(wi, q)| {
            let circ = restriction_table(c, q, PointClass::TauCirc)?;
            let tau = restriction_table(c, q, PointClass::Tau)?;
            let mut t = Tally::default();
            for s in 0..samples {
                let mut rng = stream_rng(seed, ((wi as u64) << 20) | s as u64);
                let (m0, mi, ms) = with_resample(&mut rng, c.rank(), |x| {
                    Ok((
                        pairing_matrix(c, q, lookup(&circ), x, Sheaf::Structure)?,
                        pairing_matrix(c, q, lookup(&tau), x, Sheaf::Ideal)?,
                        pairing_matrix(c, q, lookup(&tau), x, Sheaf::Structure)?,
                    ))
                })?;
                let subs: Vec<Subword> = Subword::all(q.len()).collect();
                let mut ok = true;
                for (a, v) in subs.iter().enumerate() {
                    for (b, w) in subs.iter().enumerate() {
                        let delta = if a == b { BigRational::one() } else { BigRational::zero() };
                        ok &= m0[a][b] == delta && mi[a][b] == delta;
                        if v.is_subset(w) {
                            ok &= ms[a][b].is_one();
                        }
                    }
                }
                t.record(ok, || format!("Q=[{q}] sample {s}"));
            }
            Ok(t)
        })
        .try_reduce(Tally::default, |x, y| Ok(x.merge(y)))
}

/// `c` and `a` agree across all reduced words of each `w`, and `a`, `a∘`
/// also on a non-reduced word with the same Demazure product.
pub fn word_independence(c: &CartanData) -> Result<Tally> {
    let g = group(c)?;
    g.par_iter()
        .map(|w| {
            let mut t = Tally::default();
            let base = WordIndex::new(c, w.word())?;
            let mut others: Vec<WordIndex> =
                reduced_words(c, w).iter().map(|q| WordIndex::new(c, q)).collect::<schub_core::Result<_>>()?;
            let padded = if w.length() == 0 { Word::default() } else { w.word().with_doubled(0) };
            let padded = WordIndex::new(c, &padded)?;
            others.push(padded);
            for u in &g {
                for v in &g {
                    let (h, ka, ks) = (
                        base.c(c, u, v, HVariant::Ddr)?,
                        base.a(c, u, v, KBasis::Ideal),
                        base.a(c, u, v, KBasis::Structure),
                    );
                    for o in &others {
                        let mut ok = o.a(c, u, v, KBasis::Ideal) == ka && o.a(c, u, v, KBasis::Structure) == ks;
                        if o.is_reduced() {
                            ok &= o.c(c, u, v, HVariant::Ddr)? == h && o.c(c, u, v, HVariant::Rdd)? == h;
                        }
                        t.record(ok, || format!("{} on [{}]", triple(u, v, w), o.word()));
                    }
                }
            }
            Ok(t)
        })
        .try_reduce(Tally::default, |x, y| Ok(x.merge(y)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Examples,
    Oracle,
    Woodshole,
    Braid,
    Degeneration,
    Positivity,
    BottSamelson,
    Words,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 9] =
        ["examples", "oracle", "woodshole", "braid", "degeneration", "positivity", "bott-samelson", "words", "all"];

    pub fn name(self) -> &'static str {
        Self::NAMES[self as usize]
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        use Suite::*;
        let all = [Examples, Oracle, Woodshole, Braid, Degeneration, Positivity, BottSamelson, Words, All];
        all.into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}, expected one of {}", Self::NAMES.join(", ")))
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Overrides the built-in choice of types.
    pub cartan: Option<CartanData>,
    pub seed: u64,
    pub samples: usize,
    pub max_len: usize,
    pub random_triples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { cartan: None, seed: 0, samples: 20, max_len: 5, random_triples: 200 }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub suite: Suite,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().filter(|c| c.gating).all(Check::passed)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "suite": self.suite.name(),
            "seed": self.seed,
            "passed": self.passed(),
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
        })
    }
}

fn label(c: &CartanData) -> String {
    c.name().map_or_else(|| format!("rank {} GCM", c.rank()), str::to_string)
}

fn types_or(opts: &VerifyOptions, defaults: Vec<CartanData>) -> Vec<CartanData> {
    opts.cartan.clone().map_or(defaults, |c| vec![c])
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Report {
    let mut checks = Vec::new();
    let want = |s: Suite| suite == s || suite == Suite::All;
    if want(Suite::Examples) {
        checks.push(run_check("worked examples", golden_examples));
    }
    if want(Suite::Braid) {
        match &opts.cartan {
            None => checks.push(run_check("operator squares and braids", operator_identities)),
            Some(c) => {
                checks.push(run_check(format!("operator squares in {}", label(c)), || operator_squares(c)));
                checks
                    .push(run_check(format!("braids of L in {}", label(c)), || operator_braids(c, &[OperatorKind::L])));
            }
        }
        #[cfg(feature = "g2")]
        checks.push(g2_braid_attempt(200_000));
    }
    if want(Suite::Oracle) {
        for c in types_or(opts, vec![a(3)]) {
            checks.push(run_check(format!("c = localization = recursion in {}", label(&c)), || oracle_h(&c)));
            if c.is_type_a() {
                checks
                    .push(run_check(format!("double Schubert restrictions in {}", label(&c)), || double_schubert(&c)));
            }
        }
        for c in types_or(opts, vec![a(2)]) {
            checks.push(run_check(format!("a, a0 = localization in {}", label(&c)), || oracle_k(&c)));
        }
    }
    if want(Suite::Degeneration) {
        match &opts.cartan {
            Some(c) => checks.push(run_check(format!("gr(a) = gr(a0) = c in {}", label(c)), || degeneration(c, None))),
            None => {
                checks.push(run_check("gr(a) = gr(a0) = c in A2", || degeneration(&a(2), None)));
                let r = (opts.random_triples, opts.seed);
                checks.push(run_check(format!("gr(a) = gr(a0) = c on {} random A3 triples", r.0), || {
                    degeneration(&a(3), Some(r))
                }));
            }
        }
    }
    if want(Suite::Positivity) {
        for c in types_or(opts, vec![a(3), b(2)]) {
            checks.push(run_check(format!("nonnegative coefficients in {}", label(&c)), || positivity(&c)));
        }
    }
    if want(Suite::BottSamelson) {
        for c in types_or(opts, vec![a(2)]) {
            checks.push(run_check(format!("Bott-Samelson sums in {}", label(&c)), || bott_samelson_sums(&c)));
            checks.push(run_check(format!("point restriction relations in {}", label(&c)), || {
                restriction_relations(&c, 4)
            }));
        }
    }
    if want(Suite::Woodshole) {
        for c in types_or(opts, vec![a(2), b(2)]) {
            let name = format!("fixed-point pairings in {}, words up to {}", label(&c), opts.max_len);
            checks.push(run_check(name, || woods_hole(&c, opts.max_len, opts.samples, opts.seed)));
        }
    }
    if want(Suite::Words) {
        for c in types_or(opts, vec![a(3)]) {
            checks.push(run_check(format!("word independence in {}", label(&c)), || word_independence(&c)));
        }
    }
    Report { suite, seed: opts.seed, checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_checks_pass() {
        for t in [golden_examples(), operator_squares(&a(2)), oracle_k(&a(2)), restriction_relations(&a(2), 3)] {
            let t = t.unwrap();
            assert!(t.cases > 0 && t.failures == 0, "{:?}", t.examples);
        }
        let t = woods_hole(&b(2), 3, 2, 5).unwrap();
        assert_eq!(t.cases, all_words(&b(2), 3).len() as u64 * 2);
        assert_eq!(t.failures, 0);
    }

    #[test]
    fn tally_keeps_few_examples() {
        let mut t = Tally::default();
        for k in 0..25 {
            t.record(k % 2 == 0, || k.to_string());
        }
        assert_eq!((t.cases, t.failures, t.examples.len()), (25, 12, KEEP_FAILURES));
        let m = t.clone().merge(t);
        assert_eq!((m.cases, m.examples.len()), (50, KEEP_FAILURES));
    }

    #[test]
    fn suite_names() {
        for n in Suite::NAMES {
            assert_eq!(n.parse::<Suite>().unwrap().name(), n);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
