use alloc::vec;
use alloc::vec::Vec;

use super::CartanData;

/// Square integer matrix, row-major. Column `j` of a Weyl element's matrix
/// holds the coordinates of `w(α_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Mat {
    n: usize,
    d: Vec<i64>,
}

impl Mat {
    pub fn identity(n: usize) -> Self {
        let mut d = vec![0; n * n];
        for i in 0..n {
            d[i * n + i] = 1;
        }
        Mat { n, d }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.d[r * self.n + c]
    }

    pub fn is_identity(&self) -> bool {
        let n = self.n;
        self.d.iter().enumerate().all(|(k, &x)| x == i64::from(k / n == k % n))
    }

    /// `self ← self · r_i`
    pub fn right_gen(&mut self, c: &CartanData, i: usize) {
        let n = self.n;
        let col: Vec<i64> = (0..n).map(|r| self.d[r * n + i]).collect();
        let row = c.row(i);
        for (j, &a) in row.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (r, &x) in col.iter().enumerate() {
                self.d[r * n + j] -= a * x;
            }
        }
    }

    /// `self ← r_i · self`
    pub fn left_gen(&mut self, c: &CartanData, i: usize) {
        let n = self.n;
        let row = c.row(i);
        let mut new = vec![0i64; n];
        for (l, &a) in row.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, x) in new.iter_mut().enumerate() {
                *x += a * self.d[l * n + j];
            }
        }
        for (j, x) in new.iter().enumerate() {
            self.d[i * n + j] -= x;
        }
    }

    /// Whether column `i` is a negative root.
    #[inline]
    pub fn col_negative(&self, i: usize) -> bool {
        let n = self.n;
        (0..n).any(|r| self.d[r * n + i] < 0)
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        let n = self.n;
        let mut d = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.d[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    d[i * n + j] += a * o.d[k * n + j];
                }
            }
        }
        Mat { n, d }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let n = self.n;
        (0..n).map(|r| (0..n).map(|k| self.d[r * n + k] * v[k]).sum()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.n).map(|r| self.get(r, j)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.d.chunks(self.n).map(|r| r.to_vec()).collect()
    }
}
