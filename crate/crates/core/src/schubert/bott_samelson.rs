use core::str::FromStr;

use super::{eval_h, eval_k, HStep, KStep, Theory};
use crate::error::{Error, Result};
use crate::hpoly::HPoly;
use crate::kring::KElem;
use crate::ring::Value;
use crate::root_weyl::{CartanData, Subword, Word};

/// Bott-Samelson classes: `T` in cohomology, `τ` and `τ∘` in K-theory.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointClass {
    T,
    Tau,
    TauCirc,
}

impl FromStr for PointClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "t" | "h" => Ok(PointClass::T),
            "tau" | "k-ideal" => Ok(PointClass::Tau),
            "tau0" | "k-structure" => Ok(PointClass::TauCirc),
            _ => Err(Error::Precondition(alloc::format!("unknown class {s:?}"))),
        }
    }
}

fn check(q: &Word, masks: &[&Subword]) -> Result<()> {
    masks.iter().try_for_each(|m| m.check(q))
}

/// `b_{RS}^J`, `d_{RS}^J` or `d∘_{RS}^J`, with the subword `J` as ambient
/// word. Zero unless `J ⊇ R ∪ S`.
pub fn bs_structure_constant(
    c: &CartanData,
    q: &Word,
    r: &Subword,
    s: &Subword,
    j: &Subword,
    theory: Theory,
) -> Result<Value> {
    q.check(c)?;
    check(q, &[r, s, j])?;
    if !r.is_subset(j) || !s.is_subset(j) {
        return Ok(theory.zero(c.rank()));
    }
    let class = |pos: usize| (r.contains(pos), s.contains(pos));
    Ok(match theory.k_basis() {
        None => Value::H(eval_h(
            c,
            q,
            j.positions().map(|pos| {
                let step = match class(pos) {
                    (true, true) => HStep::AlphaR,
                    (false, false) => HStep::DR,
                    _ => HStep::R,
                };
                (pos, step)
            }),
        )),
        Some(basis) => {
            let ideal = basis == super::KBasis::Ideal;
            Value::K(eval_k(
                c,
                q,
                j.positions().map(|pos| {
                    let step = match (class(pos), ideal) {
                        ((true, true), _) => KStep::BR,
                        ((false, false), true) => KStep::EPosRNegD,
                        ((false, false), false) => KStep::ENegRNegIso,
                        (_, true) => KStep::R,
                        (_, false) => KStep::ENegR,
                    };
                    (pos, step)
                }),
            ))
        }
    })
}

/// Restriction of `T_J`, `τ_J` or `τ∘_J` to the fixed point `L`.
pub fn bs_restriction(c: &CartanData, q: &Word, j: &Subword, l: &Subword, class: PointClass) -> Result<Value> {
    q.check(c)?;
    check(q, &[j, l])?;
    let n = c.rank();
    if !j.is_subset(l) {
        return Ok(match class {
            PointClass::T => Value::H(HPoly::zero(n)),
            _ => Value::K(KElem::zero(n)),
        });
    }
    Ok(match class {
        PointClass::T => {
            Value::H(eval_h(c, q, l.positions().map(|m| (m, if j.contains(m) { HStep::AlphaR } else { HStep::R }))))
        }
        PointClass::Tau => {
            Value::K(eval_k(c, q, l.positions().map(|m| (m, if j.contains(m) { KStep::BR } else { KStep::R }))))
        }
        PointClass::TauCirc => {
            Value::K(eval_k(c, q, l.positions().map(|m| (m, if j.contains(m) { KStep::BR } else { KStep::ENegR }))))
        }
    })
}
