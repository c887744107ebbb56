use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ring::{CoeffRing, Value};
use crate::root_weyl::{bruhat_leq, CartanData, WeylElement};
use crate::schubert::{restriction_h, restriction_k, Theory};

/// A table of restrictions `S_v|_x` over a finite group, from which
/// structure constants are recovered by triangular elimination.
#[derive(Clone, Debug)]
pub struct Localizer<C> {
    group: Vec<WeylElement>,
    index: BTreeMap<WeylElement, usize>,
    // table[v][x] = S_v|_x, only for v ≤ x
    table: Vec<Vec<Option<C>>>,
}

impl<C: CoeffRing> Localizer<C> {
    pub fn new(c: &CartanData, group: &[WeylElement], restrict: impl Fn(&WeylElement, &WeylElement) -> C) -> Self {
        let mut group = group.to_vec();
        group.sort();
        let index = group.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        let table = group
            .iter()
            .map(|v| {
                group
                    .iter()
                    .map(|x| {
                        if !bruhat_leq(c, v, x) {
                            return None;
                        }
                        Some(restrict(v, x)).filter(|r| !r.is_zero())
                    })
                    .collect()
            })
            .collect();
        Self { group, index, table }
    }

    pub fn group(&self) -> &[WeylElement] {
        &self.group
    }

    pub fn position(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Coefficients of `S_u S_v` in the basis `S_w`, indexed like
    /// [`Localizer::group`].
    pub fn solve(&self, u: &WeylElement, v: &WeylElement) -> Result<Vec<C>> {
        let missing = || Error::Precondition("element outside the group".into());
        let iu = self.position(u).ok_or_else(missing)?;
        let iv = self.position(v).ok_or_else(missing)?;
        let n = u.rank();
        let mut coef: Vec<C> = Vec::with_capacity(self.group.len());
        for x in 0..self.group.len() {
            let mut rhs = match (&self.table[iu][x], &self.table[iv][x]) {
                (Some(a), Some(b)) => a.mul(b),
                _ => C::zero(n),
            };
            for (w, cw) in coef.iter().enumerate() {
                if cw.is_zero() {
                    continue;
                }
                if let Some(r) = &self.table[w][x] {
                    rhs = rhs.sub(&cw.mul(r));
                }
            }
            let cx = if rhs.is_zero() {
                C::zero(n)
            } else {
                let pivot = self.table[x][x].as_ref().ok_or_else(|| Error::Precondition("singular pivot".into()))?;
                rhs.div_exact(pivot).ok_or_else(|| Error::Inexact(alloc::format!("{rhs} / {pivot}")))?
            };
            coef.push(cx);
        }
        Ok(coef)
    }
}

/// `w ↦ c_{uv}^w` (or `a`, `a∘`) over `group`, using restriction values only.
pub fn localization_solve(
    c: &CartanData,
    u: &WeylElement,
    v: &WeylElement,
    theory: Theory,
    group: &[WeylElement],
) -> Result<BTreeMap<WeylElement, Value>> {
    let pairs = |vals: Vec<Value>, loc_group: &[WeylElement]| loc_group.iter().cloned().zip(vals).collect();
    Ok(match theory.k_basis() {
        None => {
            let loc = Localizer::new(c, group, |v, x| restriction_h(c, v, x));
            pairs(loc.solve(u, v)?.into_iter().map(Value::H).collect(), loc.group())
        }
        Some(basis) => {
            let loc = Localizer::new(c, group, |v, x| restriction_k(c, v, x, basis));
            pairs(loc.solve(u, v)?.into_iter().map(Value::K).collect(), loc.group())
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_weyl::perm::element_from_perm;
    use crate::root_weyl::{element_of_word, enumerate_group, Word};
    use alloc::string::ToString;

    #[test]
    fn examples() {
        let c = CartanData::type_a(2).unwrap();
        let g = enumerate_group(&c, 10).unwrap();
        let w = |l: &[usize]| element_of_word(&c, &Word::new(l.to_vec())).unwrap();
        let sol = localization_solve(&c, &w(&[0]), &w(&[0, 1]), Theory::H, &g).unwrap();
        assert_eq!(sol[&w(&[0, 1, 0])].to_string(), "1");
        let e = WeylElement::identity(&c);
        for v in &g {
            let sol = localization_solve(&c, &e, v, Theory::KIdeal, &g).unwrap();
            for (x, val) in &sol {
                assert_eq!(val.is_zero(), x != v);
            }
        }
        let c = CartanData::type_a(3).unwrap();
        let g = enumerate_group(&c, 30).unwrap();
        let p = |p: &[usize]| element_from_perm(&c, p).unwrap();
        let sol = localization_solve(&c, &p(&[1, 4, 3, 2]), &p(&[3, 2, 1, 4]), Theory::KIdeal, &g).unwrap();
        assert_eq!(sol[&p(&[3, 4, 2, 1])].to_string(), "e[0,-1,0] - e[-1,-2,-1]");
        let sol = localization_solve(&c, &p(&[1, 4, 3, 2]), &p(&[3, 2, 1, 4]), Theory::H, &g).unwrap();
        assert_eq!(sol[&p(&[3, 4, 2, 1])].to_string(), "a1 + a2 + a3");
    }
}
