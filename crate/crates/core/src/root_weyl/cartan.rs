use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};

/// A generalized Cartan matrix, `a_ij = ⟨α_i∨, α_j⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanData {
    rank: usize,
    entries: Vec<i64>,
    name: Option<String>,
}

impl CartanData {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let rank = rows.len();
        if rank == 0 {
            return Err(Error::InvalidCartan("rank must be positive".into()));
        }
        let mut entries = Vec::with_capacity(rank * rank);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::InvalidCartan(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    rank
                )));
            }
            entries.extend_from_slice(row);
        }
        let c = CartanData { rank, entries, name: None };
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<()> {
        let n = self.rank;
        for i in 0..n {
            if self.entry(i, i) != 2 {
                return Err(Error::InvalidCartan(format!("diagonal entry {} is not 2", i + 1)));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let (x, y) = (self.entry(i, j), self.entry(j, i));
                if x > 0 {
                    return Err(Error::InvalidCartan(format!("entry ({}, {}) is positive", i + 1, j + 1)));
                }
                if (x == 0) != (y == 0) {
                    return Err(Error::InvalidCartan(format!("zero pattern not symmetric at ({}, {})", i + 1, j + 1)));
                }
            }
        }
        Ok(())
    }

    fn build(rank: usize, name: String, edges: &[(usize, usize, i64)]) -> Self {
        let mut entries = vec![0; rank * rank];
        for i in 0..rank {
            entries[i * rank + i] = 2;
        }
        for &(i, j, v) in edges {
            entries[i * rank + j] = v;
        }
        CartanData { rank, entries, name: Some(name) }
    }

    fn chain(n: usize) -> Vec<(usize, usize, i64)> {
        let mut e = Vec::new();
        for i in 0..n.saturating_sub(1) {
            e.push((i, i + 1, -1));
            e.push((i + 1, i, -1));
        }
        e
    }

    pub fn type_a(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidCartan("A_n needs n >= 1".into()));
        }
        Ok(Self::build(n, format!("A{n}"), &Self::chain(n)))
    }

    /// `B_n` with the short simple root last.
    pub fn type_b(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidCartan("B_n needs n >= 2".into()));
        }
        let mut e = Self::chain(n);
        for x in e.iter_mut() {
            if x.0 == n - 1 && x.1 == n - 2 {
                x.2 = -2;
            }
        }
        Ok(Self::build(n, format!("B{n}"), &e))
    }

    /// `C_n` with the long simple root last.
    pub fn type_c(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidCartan("C_n needs n >= 2".into()));
        }
        let mut e = Self::chain(n);
        for x in e.iter_mut() {
            if x.0 == n - 2 && x.1 == n - 1 {
                x.2 = -2;
            }
        }
        Ok(Self::build(n, format!("C{n}"), &e))
    }

    pub fn type_d(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidCartan("D_n needs n >= 3".into()));
        }
        let mut e = Self::chain(n - 1);
        e.push((n - 3, n - 1, -1));
        e.push((n - 1, n - 3, -1));
        Ok(Self::build(n, format!("D{n}"), &e))
    }

    /// `G_2` with the short simple root first.
    pub fn g2() -> Self {
        Self::build(2, "G2".into(), &[(0, 1, -3), (1, 0, -1)])
    }

    /// Parses tags such as `A3`, `B2`, `D4`, `G2` (case-insensitive, an
    /// optional `_` between letter and rank).
    pub fn from_type_name(tag: &str) -> Result<Self> {
        let t = tag.trim();
        let mut chars = t.chars();
        let letter = chars.next().ok_or_else(|| Error::InvalidCartan("empty type tag".into()))?.to_ascii_uppercase();
        let rest = chars.as_str().trim_start_matches('_');
        let n: usize = rest.parse().map_err(|_| Error::InvalidCartan(format!("cannot parse rank in {t:?}")))?;
        match letter {
            'A' => Self::type_a(n),
            'B' => Self::type_b(n),
            'C' => Self::type_c(n),
            'D' => Self::type_d(n),
            'G' if n == 2 => Ok(Self::g2()),
            _ => Err(Error::InvalidCartan(format!("unsupported type {t:?}"))),
        }
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.rank + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.rank..(i + 1) * self.rank]
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn is_type_a(&self) -> bool {
        Self::type_a(self.rank).is_ok_and(|a| a.entries == self.entries)
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, rank: self.rank })
        }
    }

    /// Order of `r_i r_j`, or `None` when it is infinite.
    pub fn braid_order(&self, i: usize, j: usize) -> Option<usize> {
        if i == j {
            return Some(1);
        }
        match self.entry(i, j) * self.entry(j, i) {
            0 => Some(2),
            1 => Some(3),
            2 => Some(4),
            3 => Some(6),
            _ => None,
        }
    }
}

impl fmt::Display for CartanData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = &self.name {
            return f.write_str(n);
        }
        for i in 0..self.rank {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            if i > 0 {
                f.write_str("; ")?;
            }
            f.write_str(&row.join(" "))?;
        }
        Ok(())
    }
}

/// A root-lattice vector in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    pub fn simple_root(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Weight(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// `⟨α_i∨, λ⟩`
    pub fn pairing(&self, c: &CartanData, i: usize) -> i64 {
        c.row(i).iter().zip(&self.0).map(|(a, x)| a * x).sum()
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&x| x <= 0)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

pub fn reflect_weight(c: &CartanData, i: usize, lambda: &Weight) -> Result<Weight> {
    c.check_index(i)?;
    if lambda.rank() != c.rank() {
        return Err(Error::RankMismatch { expected: c.rank(), found: lambda.rank() });
    }
    let mut out = lambda.clone();
    out.0[i] -= lambda.pairing(c, i);
    Ok(out)
}
