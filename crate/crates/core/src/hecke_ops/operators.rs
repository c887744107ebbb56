use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{SmashElem, TensorOp};
use crate::error::{Error, Result};
use crate::hpoly::HPoly;
use crate::kring::KElem;
use crate::ring::{CoeffRing, Flavor, Value};
use crate::root_weyl::{subwords_by_product, CartanData, SubwordMode, WeylElement, Word};
use crate::schubert::{restriction_h_word, restriction_k_word, KBasis};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    /// `r⊗1 + α r⊗∂`
    J,
    /// `r⊗1 − (1−e^{−α}) r⊗Ď`
    Xi,
    /// `e^{−α} r⊗1 + (1−e^{−α}) r⊗Ď̄`
    XiCirc,
    /// `∂r⊗1⊗1 + r⊗∂⊗1 + r⊗1⊗∂ + α r⊗∂⊗∂`
    L,
    /// `e^{α} r Ď⊗1⊗1 + r⊗Ď⊗1 + r⊗1⊗Ď − (1−e^{−α}) r⊗Ď⊗Ď`
    Lambda,
    /// `e^{−α} r(−Ď̄)⊗1⊗1 + e^{−α} r⊗Ď̄⊗1 + e^{−α} r⊗1⊗Ď̄ + (1−e^{−α}) r⊗Ď̄⊗Ď̄`
    LambdaCirc,
    /// `−∂⊗1 + r⊗∂`
    D,
}

impl OperatorKind {
    pub const ALL: [OperatorKind; 7] = [
        OperatorKind::J,
        OperatorKind::Xi,
        OperatorKind::XiCirc,
        OperatorKind::L,
        OperatorKind::Lambda,
        OperatorKind::LambdaCirc,
        OperatorKind::D,
    ];

    pub fn flavor(self) -> Flavor {
        match self {
            OperatorKind::J | OperatorKind::L | OperatorKind::D => Flavor::NilH,
            OperatorKind::Xi | OperatorKind::Lambda => Flavor::DemazureK,
            OperatorKind::XiCirc | OperatorKind::LambdaCirc => Flavor::IsobaricK,
        }
    }

    pub fn arity(self) -> usize {
        match self {
            OperatorKind::L | OperatorKind::Lambda | OperatorKind::LambdaCirc => 3,
            _ => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OperatorKind::J => "J",
            OperatorKind::Xi => "Xi",
            OperatorKind::XiCirc => "Xi0",
            OperatorKind::L => "L",
            OperatorKind::Lambda => "Lambda",
            OperatorKind::LambdaCirc => "Lambda0",
            OperatorKind::D => "D",
        }
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OperatorKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        OperatorKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Precondition(alloc::format!("unknown operator kind {s:?}")))
    }
}

/// A tensor operator over either coefficient ring.
#[derive(Clone, PartialEq, Debug)]
pub enum AnyOp {
    H(TensorOp<HPoly>),
    K(TensorOp<KElem>),
}

impl AnyOp {
    pub fn num_terms(&self) -> usize {
        match self {
            AnyOp::H(t) => t.num_terms(),
            AnyOp::K(t) => t.num_terms(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num_terms() == 0
    }

    pub fn mul_budget(&self, c: &CartanData, o: &AnyOp, budget: Option<usize>) -> Result<AnyOp> {
        match (self, o) {
            (AnyOp::H(x), AnyOp::H(y)) => x.mul_budget(c, y, budget).map(AnyOp::H),
            (AnyOp::K(x), AnyOp::K(y)) => x.mul_budget(c, y, budget).map(AnyOp::K),
            _ => Err(Error::FlavorMismatch),
        }
    }

    pub fn mul(&self, c: &CartanData, o: &AnyOp) -> Result<AnyOp> {
        self.mul_budget(c, o, None)
    }

    fn identity_like(&self, c: &CartanData) -> Result<AnyOp> {
        Ok(match self {
            AnyOp::H(t) => AnyOp::H(TensorOp::identity(t.flavor(), t.arity(), c)?),
            AnyOp::K(t) => AnyOp::K(TensorOp::identity(t.flavor(), t.arity(), c)?),
        })
    }
}

fn kind_identity(c: &CartanData, kind: OperatorKind) -> Result<AnyOp> {
    Ok(match kind.flavor() {
        Flavor::NilH => AnyOp::H(TensorOp::identity(kind.flavor(), kind.arity(), c)?),
        _ => AnyOp::K(TensorOp::identity(kind.flavor(), kind.arity(), c)?),
    })
}

fn pure<C: CoeffRing>(s: &SmashElem<C>, arity: usize, b: &WeylElement, cc: &WeylElement) -> Result<TensorOp<C>> {
    TensorOp::pure(s, arity, b.clone(), cc.clone())
}

fn sum<C: CoeffRing>(parts: Vec<TensorOp<C>>) -> Result<TensorOp<C>> {
    let mut it = parts.into_iter();
    let mut acc = it.next().expect("at least one summand");
    for p in it {
        acc = acc.add(&p)?;
    }
    Ok(acc)
}

fn build_h(c: &CartanData, i: usize, kind: OperatorKind) -> Result<TensorOp<HPoly>> {
    let f = Flavor::NilH;
    let n = c.rank();
    let e = WeylElement::identity(c);
    let s = WeylElement::generator(c, i)?;
    let r = SmashElem::<HPoly>::reflection(f, c, i)?;
    let d = SmashElem::<HPoly>::delta(f, c, i)?;
    let alpha = HPoly::var(n, i);
    match kind {
        OperatorKind::J => sum(alloc::vec![pure(&r, 2, &e, &e)?, pure(&r.scale_left(&alpha), 2, &s, &e)?]),
        OperatorKind::D => sum(alloc::vec![pure(&d.neg(), 2, &e, &e)?, pure(&r, 2, &s, &e)?]),
        OperatorKind::L => sum(alloc::vec![
            pure(&d.mul(c, &r)?, 3, &e, &e)?,
            pure(&r, 3, &s, &e)?,
            pure(&r, 3, &e, &s)?,
            pure(&r.scale_left(&alpha), 3, &s, &s)?,
        ]),
        _ => Err(Error::FlavorMismatch),
    }
}

fn build_k(c: &CartanData, i: usize, kind: OperatorKind) -> Result<TensorOp<KElem>> {
    let f = kind.flavor();
    let n = c.rank();
    let e = WeylElement::identity(c);
    let s = WeylElement::generator(c, i)?;
    let r = SmashElem::<KElem>::reflection(f, c, i)?;
    let d = SmashElem::<KElem>::delta(f, c, i)?;
    let exp_pos = KElem::exp_root(n, i, 1);
    let exp_neg = KElem::exp_root(n, i, -1);
    let b = &KElem::one(n) - &exp_neg;
    match kind {
        OperatorKind::Xi => sum(alloc::vec![pure(&r, 2, &e, &e)?, pure(&r.scale_left(&b).neg(), 2, &s, &e)?]),
        OperatorKind::XiCirc => {
            sum(alloc::vec![pure(&r.scale_left(&exp_neg), 2, &e, &e)?, pure(&r.scale_left(&b), 2, &s, &e)?])
        }
        OperatorKind::Lambda => sum(alloc::vec![
            pure(&r.mul(c, &d)?.scale_left(&exp_pos), 3, &e, &e)?,
            pure(&r, 3, &s, &e)?,
            pure(&r, 3, &e, &s)?,
            pure(&r.scale_left(&b).neg(), 3, &s, &s)?,
        ]),
        OperatorKind::LambdaCirc => {
            let er = r.scale_left(&exp_neg);
            sum(alloc::vec![
                pure(&er.mul(c, &d.neg())?, 3, &e, &e)?,
                pure(&er, 3, &s, &e)?,
                pure(&er, 3, &e, &s)?,
                pure(&r.scale_left(&b), 3, &s, &s)?,
            ])
        }
        _ => Err(Error::FlavorMismatch),
    }
}

/// The single-letter operator of the given kind for generator `i`.
pub fn build_operator(c: &CartanData, i: usize, kind: OperatorKind) -> Result<AnyOp> {
    c.check_index(i)?;
    match kind.flavor() {
        Flavor::NilH => build_h(c, i, kind).map(AnyOp::H),
        _ => build_k(c, i, kind).map(AnyOp::K),
    }
}

/// `∏_{q∈Q} X^{α_q}` in word order.
pub fn operator_word_product(c: &CartanData, q: &Word, kind: OperatorKind) -> Result<AnyOp> {
    operator_word_product_budget(c, q, kind, None)
}

pub fn operator_word_product_budget(
    c: &CartanData,
    q: &Word,
    kind: OperatorKind,
    budget: Option<usize>,
) -> Result<AnyOp> {
    q.check(c)?;
    let mut acc = kind_identity(c, kind)?;
    for &i in q.letters() {
        acc = acc.mul_budget(c, &build_operator(c, i, kind)?, budget)?;
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SquareClass {
    Zero,
    Idempotent,
    Involution,
    Fail,
}

pub fn check_square(c: &CartanData, i: usize, kind: OperatorKind) -> Result<SquareClass> {
    let x = build_operator(c, i, kind)?;
    let sq = x.mul(c, &x)?;
    Ok(if sq.is_zero() {
        SquareClass::Zero
    } else if sq == x {
        SquareClass::Idempotent
    } else if sq == x.identity_like(c)? {
        SquareClass::Involution
    } else {
        SquareClass::Fail
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BraidOutcome {
    Holds { terms: usize },
    Fails { left_terms: usize, right_terms: usize },
    BudgetExceeded { terms: usize },
}

fn alternating(i: usize, j: usize, m: usize) -> Word {
    Word::new((0..m).map(|k| if k % 2 == 0 { i } else { j }).collect())
}

/// Compares `X^i X^j X^i ⋯` with `X^j X^i X^j ⋯`, `m_ij` factors each.
pub fn check_braid_budget(
    c: &CartanData,
    i: usize,
    j: usize,
    kind: OperatorKind,
    budget: Option<usize>,
) -> Result<BraidOutcome> {
    c.check_index(i)?;
    c.check_index(j)?;
    if i == j {
        return Err(Error::Precondition("braid relation needs distinct generators".into()));
    }
    let m = c.braid_order(i, j).ok_or_else(|| Error::Precondition("r_i r_j has infinite order".into()))?;
    let run = |w: Word| match operator_word_product_budget(c, &w, kind, budget) {
        Ok(x) => Ok(Ok(x)),
        Err(Error::BudgetExceeded { terms }) => Ok(Err(terms)),
        Err(e) => Err(e),
    };
    let left = match run(alternating(i, j, m))? {
        Ok(x) => x,
        Err(terms) => return Ok(BraidOutcome::BudgetExceeded { terms }),
    };
    let right = match run(alternating(j, i, m))? {
        Ok(x) => x,
        Err(terms) => return Ok(BraidOutcome::BudgetExceeded { terms }),
    };
    Ok(if left == right {
        BraidOutcome::Holds { terms: left.num_terms() }
    } else {
        BraidOutcome::Fails { left_terms: left.num_terms(), right_terms: right.num_terms() }
    })
}

pub fn check_braid(c: &CartanData, i: usize, j: usize, kind: OperatorKind) -> Result<bool> {
    Ok(matches!(check_braid_budget(c, i, j, kind, None)?, BraidOutcome::Holds { .. }))
}

/// `J_w`, `Ξ_w` or `Ξ∘_w` assembled from point restrictions:
/// `Σ_v (S_v|_w) w⊗∂_v`, `Σ_v (−1)^{ℓ(v)} (ξ_v|_w) w⊗Ď_v`,
/// `Σ_v (ξ∘_v|_w) w⊗Ď̄_v`.
pub fn closed_form(c: &CartanData, w: &WeylElement, kind: OperatorKind) -> Result<AnyOp> {
    let q = w.word();
    let interval: Vec<WeylElement> = subwords_by_product(c, q, SubwordMode::Demazure)?.into_keys().collect();
    let e = WeylElement::identity(c);
    match kind {
        OperatorKind::J => {
            let ww = SmashElem::<HPoly>::weyl(Flavor::NilH, c, w)?;
            let mut acc = TensorOp::zero(Flavor::NilH, 2, c)?;
            for v in &interval {
                let coef = restriction_h_word(c, v, q)?;
                acc = acc.add(&pure(&ww.scale_left(&coef), 2, v, &e)?)?;
            }
            Ok(AnyOp::H(acc))
        }
        OperatorKind::Xi | OperatorKind::XiCirc => {
            let (flavor, basis) = if kind == OperatorKind::Xi {
                (Flavor::DemazureK, KBasis::Ideal)
            } else {
                (Flavor::IsobaricK, KBasis::Structure)
            };
            let ww = SmashElem::<KElem>::weyl(flavor, c, w)?;
            let mut acc = TensorOp::zero(flavor, 2, c)?;
            for v in &interval {
                let mut coef = restriction_k_word(c, v, q, basis)?;
                if kind == OperatorKind::Xi && v.length() % 2 == 1 {
                    coef = -&coef;
                }
                acc = acc.add(&pure(&ww.scale_left(&coef), 2, v, &e)?)?;
            }
            Ok(AnyOp::K(acc))
        }
        _ => Err(Error::Precondition(alloc::format!("no closed form for {kind}"))),
    }
}

/// The slot-one coefficient of `δ_u ⊗ δ_v` applied to `1`.
pub fn coefficient_extract(c: &CartanData, t: &AnyOp, u: &WeylElement, v: &WeylElement) -> Value {
    match t {
        AnyOp::H(t) => Value::H(t.slot1(c, u, v).act_on_one()),
        AnyOp::K(t) => Value::K(t.slot1(c, u, v).act_on_one()),
    }
}
