use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hpoly::HPoly;
use crate::root_weyl::perm::{check_perm, element_to_perm};
use crate::root_weyl::{enumerate_group, CartanData};
use crate::schubert::restriction_h;

/// Double Schubert polynomials of `S_m` in `x_1..x_m, y_1..y_m`, stored as
/// variables `0..m` and `m..2m`.
#[derive(Clone, Debug)]
pub struct DoubleSchubert {
    m: usize,
    memo: BTreeMap<Vec<usize>, HPoly>,
}

impl DoubleSchubert {
    pub fn new(m: usize) -> Self {
        Self { m, memo: BTreeMap::new() }
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn x(&self, i: usize) -> HPoly {
        HPoly::var(2 * self.m, i)
    }

    pub fn y(&self, j: usize) -> HPoly {
        HPoly::var(2 * self.m, self.m + j)
    }

    fn staircase(&self) -> HPoly {
        let mut p = HPoly::one(2 * self.m);
        for i in 0..self.m {
            for j in 0..self.m - 1 - i {
                p = &p * &(&self.x(i) - &self.y(j));
            }
        }
        p
    }

    /// `∂_i` in the `x` variables.
    fn x_divided_difference(&self, f: &HPoly, i: usize) -> HPoly {
        let images: Vec<HPoly> = (0..2 * self.m)
            .map(|k| match k {
                k if k == i => self.x(i + 1),
                k if k == i + 1 => self.x(i),
                k => HPoly::var(2 * self.m, k),
            })
            .collect();
        let num = f - &f.substitute(&images);
        num.div_exact(&(&self.x(i) - &self.x(i + 1))).expect("antisymmetric numerator is divisible")
    }

    /// The double Schubert polynomial of `v`, given in one-line notation.
    pub fn get(&mut self, v: &[usize]) -> Result<HPoly> {
        check_perm(v)?;
        if v.len() != self.m {
            return Err(Error::RankMismatch { expected: self.m, found: v.len() });
        }
        Ok(self.get_unchecked(v))
    }

    fn get_unchecked(&mut self, v: &[usize]) -> HPoly {
        if let Some(p) = self.memo.get(v) {
            return p.clone();
        }
        let p = match (0..self.m.saturating_sub(1)).find(|&i| v[i] < v[i + 1]) {
            None => self.staircase(),
            Some(i) => {
                let mut up = v.to_vec();
                up.swap(i, i + 1);
                let above = self.get_unchecked(&up);
                self.x_divided_difference(&above, i)
            }
        };
        self.memo.insert(v.to_vec(), p.clone());
        p
    }
}

/// How a double Schubert polynomial is specialized at a permutation.
///
/// `inverse` substitutes `x_i ↦ y_{w⁻¹(i)}` instead of `x_i ↦ y_{w(i)}`;
/// `ascending_roots` reads `α_i = y_{i+1} − y_i` instead of `y_i − y_{i+1}`.
/// [`calibrate`] finds that the restrictions of this crate match
/// `x_i ↦ y_{w(i)}` with ascending roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Convention {
    pub inverse: bool,
    pub ascending_roots: bool,
}

impl Convention {
    pub const ALL: [Convention; 4] = [
        Convention { inverse: false, ascending_roots: true },
        Convention { inverse: false, ascending_roots: false },
        Convention { inverse: true, ascending_roots: true },
        Convention { inverse: true, ascending_roots: false },
    ];
}

fn invert(p: &[usize]) -> Vec<usize> {
    let mut q = alloc::vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        q[x - 1] = i + 1;
    }
    q
}

/// Restriction of the class of `v` to the fixed point `w`, both in one-line
/// notation, as a polynomial in the simple roots.
pub fn oracle_restriction_h(ds: &mut DoubleSchubert, v: &[usize], w: &[usize], conv: Convention) -> Result<HPoly> {
    let m = ds.size();
    check_perm(w)?;
    if w.len() != m {
        return Err(Error::RankMismatch { expected: m, found: w.len() });
    }
    let s = ds.get(v)?;
    let w = if conv.inverse { invert(w) } else { w.to_vec() };
    // roots α_1..α_{m-1} in variables 0..m-1, a translation parameter t last
    let sign = if conv.ascending_roots { 1 } else { -1 };
    let y_image = |k: usize| {
        let mut coeffs = alloc::vec![0i64; m];
        coeffs[m - 1] = 1;
        for c in coeffs.iter_mut().take(k) {
            *c = sign;
        }
        HPoly::linear(&coeffs)
    };
    let images: Vec<HPoly> = (0..2 * m).map(|k| if k < m { y_image(w[k] - 1) } else { y_image(k - m) }).collect();
    let r = s.substitute(&images);
    let mut out = HPoly::zero(m - 1);
    for (e, c) in r.terms() {
        if e[m - 1] != 0 {
            return Err(Error::Inexact(alloc::format!("restriction of {v:?} at {w:?} is not translation invariant")));
        }
        out.add_term(crate::hpoly::Mono::new(e[..m - 1].to_vec()), c.clone());
    }
    Ok(out)
}

/// The first convention under which the oracle agrees with
/// [`restriction_h`] on every pair of the group of the type-`A` datum `c`.
pub fn calibrate(c: &CartanData) -> Result<Convention> {
    if !c.is_type_a() {
        return Err(Error::Precondition("calibration needs type A".into()));
    }
    let group = enumerate_group(c, 720)?;
    let mut ds = DoubleSchubert::new(c.rank() + 1);
    'conv: for conv in Convention::ALL {
        for v in &group {
            for w in &group {
                let got = oracle_restriction_h(&mut ds, &element_to_perm(v), &element_to_perm(w), conv);
                if got.ok().as_ref() != Some(&restriction_h(c, v, w)) {
                    continue 'conv;
                }
            }
        }
        return Ok(conv);
    }
    Err(Error::Precondition("no convention matches".into()))
}
