use alloc::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hpoly::HPoly;
use crate::root_weyl::{CartanData, WeylElement};

type Key = (WeylElement, WeylElement, WeylElement);

/// Memoized solver for the left-descent recursion
///
/// `c_{uv}^w = (∂_α r_α) c_{uv}^{w̄} + [ū<u] c_{ūv}^{w̄} + [v̄<v] c_{uv̄}^{w̄}
///            + [ū<u][v̄<v] α c_{ūv̄}^{w̄}`, with `s̄ = r_α s`,
///
/// bottoming out at `c_{uv}^e = [u=e][v=e]`. Uses only the Weyl group and
/// divided differences.
pub struct RecursionSolver<'a> {
    c: &'a CartanData,
    memo: BTreeMap<Key, HPoly>,
}

impl<'a> RecursionSolver<'a> {
    pub fn new(c: &'a CartanData) -> Self {
        RecursionSolver { c, memo: BTreeMap::new() }
    }

    /// Recurses on the smallest left descent of `w` at every level.
    pub fn solve(&mut self, u: &WeylElement, v: &WeylElement, w: &WeylElement) -> HPoly {
        let n = self.c.rank();
        if w.is_identity() {
            return if u.is_identity() && v.is_identity() { HPoly::one(n) } else { HPoly::zero(n) };
        }
        let key = (u.clone(), v.clone(), w.clone());
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let alpha = w.word().letters()[0];
        let p = self.step(u, v, w, alpha);
        self.memo.insert(key, p.clone());
        p
    }

    /// One recursion step on the given left descent `alpha` of `w`:
    /// `c_{uv}^w = ∂_α r_α c_{uv}^{w̄} + r_α(c_{ūv}^{w̄} + c_{uv̄}^{w̄}) + α r_α c_{ūv̄}^{w̄}`,
    /// the last three only when the bar shortens.
    pub fn solve_with(&mut self, u: &WeylElement, v: &WeylElement, w: &WeylElement, alpha: usize) -> Result<HPoly> {
        self.c.check_index(alpha)?;
        if !w.is_left_descent(alpha) {
            return Err(Error::Precondition("r_α w must be shorter than w".into()));
        }
        Ok(self.step(u, v, w, alpha))
    }

    fn step(&mut self, u: &WeylElement, v: &WeylElement, w: &WeylElement, alpha: usize) -> HPoly {
        let c = self.c;
        let n = c.rank();
        let wb = w.left_mul_gen(c, alpha);
        let mut total = self.solve(u, v, &wb).reflect(c, alpha).divided_difference(c, alpha);
        let u_down = u.is_left_descent(alpha).then(|| u.left_mul_gen(c, alpha));
        let v_down = v.is_left_descent(alpha).then(|| v.left_mul_gen(c, alpha));
        let mut rest = HPoly::zero(n);
        if let Some(ub) = &u_down {
            rest += &self.solve(ub, v, &wb);
        }
        if let Some(vb) = &v_down {
            rest += &self.solve(u, vb, &wb);
        }
        if let (Some(ub), Some(vb)) = (&u_down, &v_down) {
            rest += &(&HPoly::var(n, alpha).reflect(c, alpha) * &self.solve(ub, vb, &wb));
        }
        total += &rest.reflect(c, alpha);
        total
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }
}

pub fn recursion_c(c: &CartanData, u: &WeylElement, v: &WeylElement, w: &WeylElement, alpha: usize) -> Result<HPoly> {
    RecursionSolver::new(c).solve_with(u, v, w, alpha)
}
