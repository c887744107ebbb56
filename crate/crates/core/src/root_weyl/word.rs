use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use super::weyl::bruhat_leq_inv;
use super::{CartanData, Mat, WeylElement};
use crate::error::{Error, Result};

/// Longest ambient word a [`Subword`] mask can describe.
pub const MAX_WORD_LEN: usize = 64;

/// A finite sequence of zero-based generator indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    /// From one-based letters, as typed by users.
    pub fn from_one_based(c: &CartanData, letters: &[usize]) -> Result<Self> {
        let mut out = Vec::with_capacity(letters.len());
        for &l in letters {
            if l == 0 || l > c.rank() {
                return Err(Error::IndexOutOfRange { index: l.wrapping_sub(1), rank: c.rank() });
            }
            out.push(l - 1);
        }
        Ok(Word(out))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn check(&self, c: &CartanData) -> Result<()> {
        self.0.iter().try_for_each(|&i| c.check_index(i))
    }

    pub fn is_reduced(&self, c: &CartanData) -> Result<bool> {
        Ok(super::element_of_word(c, self)?.length() == self.len())
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word(v)
    }

    /// The word with the letter at `pos` repeated in place.
    pub fn with_doubled(&self, pos: usize) -> Word {
        let mut v = self.0.clone();
        v.insert(pos, v[pos]);
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", l + 1)?;
        }
        Ok(())
    }
}

/// A set of positions in an ambient word. Bit `p` of the mask is position
/// `p`; the display lists positions left to right, e.g. `11010`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subword {
    len: usize,
    mask: u64,
}

impl Subword {
    pub fn new(len: usize, mask: u64) -> Result<Self> {
        if len > MAX_WORD_LEN {
            return Err(Error::WordTooLong { len, max: MAX_WORD_LEN });
        }
        if len < 64 && mask >> len != 0 {
            return Err(Error::Precondition("mask has bits beyond the word length".into()));
        }
        Ok(Subword { len, mask })
    }

    pub fn empty(len: usize) -> Self {
        Subword { len, mask: 0 }
    }

    pub fn full(len: usize) -> Self {
        let mask = if len >= 64 { u64::MAX } else { (1u64 << len) - 1 };
        Subword { len, mask }
    }

    pub fn from_positions(len: usize, positions: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &p in positions {
            if p >= len {
                return Err(Error::Precondition("position beyond the word length".into()));
            }
            mask |= 1 << p;
        }
        Subword::new(len, mask)
    }

    /// Parses a 0/1 string such as `11010`; spaces are ignored.
    pub fn parse(s: &str) -> Result<Self> {
        let bits: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut mask = 0u64;
        for (p, ch) in bits.iter().enumerate() {
            match ch {
                '1' => mask |= 1 << p.min(63),
                '0' | '-' => {}
                _ => return Err(Error::Precondition(alloc::format!("bad mask character {ch:?}"))),
            }
        }
        Subword::new(bits.len(), mask)
    }

    /// Every subword of a word of length `len`, in ascending mask order.
    pub fn all(len: usize) -> impl Iterator<Item = Subword> {
        assert!(len < 64, "too many subwords to enumerate");
        (0..1u64 << len).map(move |mask| Subword { len, mask })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn count(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    #[inline]
    pub fn contains(&self, pos: usize) -> bool {
        self.mask >> pos & 1 == 1
    }

    pub fn positions(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        (0..self.len).filter(move |&p| self.contains(p))
    }

    pub fn is_subset(&self, o: &Subword) -> bool {
        self.mask & !o.mask == 0
    }

    pub fn union(&self, o: &Subword) -> Subword {
        Subword { len: self.len, mask: self.mask | o.mask }
    }

    pub fn intersection(&self, o: &Subword) -> Subword {
        Subword { len: self.len, mask: self.mask & o.mask }
    }

    pub fn without(&self, pos: usize) -> Subword {
        Subword { len: self.len, mask: self.mask & !(1 << pos) }
    }

    pub fn first(&self) -> Option<usize> {
        (self.mask != 0).then(|| self.mask.trailing_zeros() as usize)
    }

    pub fn letters(&self, q: &Word) -> Word {
        Word(self.positions().map(|p| q.0[p]).collect())
    }

    pub fn check(&self, q: &Word) -> Result<()> {
        if self.len == q.len() {
            Ok(())
        } else {
            Err(Error::MaskLength { expected: q.len(), found: self.len })
        }
    }
}

impl fmt::Display for Subword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in 0..self.len {
            f.write_str(if self.contains(p) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubwordMode {
    /// Reduced subwords with ordinary product.
    Reduced,
    /// Arbitrary subwords with Demazure product.
    Demazure,
}

struct Dfs<'a> {
    c: &'a CartanData,
    q: &'a [usize],
    mode: SubwordMode,
    target: Option<(&'a Mat, &'a [usize])>,
}

impl Dfs<'_> {
    fn run(&self, pos: usize, mask: u64, m: &Mat, inv: &Mat, len: usize, out: &mut dyn FnMut(u64, &Mat)) {
        if let Some((_, tw)) = self.target {
            if len + (self.q.len() - pos) < tw.len() {
                return;
            }
        }
        if pos == self.q.len() {
            match self.target {
                Some((t, _)) if t != m => {}
                _ => out(mask, m),
            }
            return;
        }
        self.run(pos + 1, mask, m, inv, len, out);
        let i = self.q[pos];
        let bit = mask | 1 << pos;
        if m.col_negative(i) {
            if self.mode == SubwordMode::Demazure {
                self.run(pos + 1, bit, m, inv, len, out);
            }
            return;
        }
        let mut m2 = m.clone();
        m2.right_gen(self.c, i);
        let mut inv2 = inv.clone();
        inv2.left_gen(self.c, i);
        if let Some((_, tw)) = self.target {
            if !bruhat_leq_inv(self.c, inv2.clone(), len + 1, tw) {
                return;
            }
        }
        self.run(pos + 1, bit, &m2, &inv2, len + 1, out);
    }
}

fn check_word(c: &CartanData, q: &Word) -> Result<()> {
    q.check(c)?;
    if q.len() > MAX_WORD_LEN {
        return Err(Error::WordTooLong { len: q.len(), max: MAX_WORD_LEN });
    }
    Ok(())
}

/// Subwords of `q` whose product (ordinary and reduced, or Demazure) is
/// `target`, in ascending mask order.
pub fn subwords_with_product(
    c: &CartanData,
    q: &Word,
    target: &WeylElement,
    mode: SubwordMode,
) -> Result<Vec<Subword>> {
    check_word(c, q)?;
    let dfs = Dfs { c, q: q.letters(), mode, target: Some((target.mat(), target.word().letters())) };
    let id = Mat::identity(c.rank());
    let mut masks = Vec::new();
    dfs.run(0, 0, &id, &id, 0, &mut |m, _| masks.push(m));
    masks.sort_unstable();
    Ok(masks.into_iter().map(|mask| Subword { len: q.len(), mask }).collect())
}

/// All subwords of `q` grouped by product, each group in ascending mask
/// order. In reduced mode only reduced subwords appear.
pub fn subwords_by_product(c: &CartanData, q: &Word, mode: SubwordMode) -> Result<BTreeMap<WeylElement, Vec<Subword>>> {
    check_word(c, q)?;
    let dfs = Dfs { c, q: q.letters(), mode, target: None };
    let id = Mat::identity(c.rank());
    let mut groups: BTreeMap<Mat, Vec<u64>> = BTreeMap::new();
    dfs.run(0, 0, &id, &id, 0, &mut |mask, m| groups.entry(m.clone()).or_default().push(mask));
    let mut out = BTreeMap::new();
    for (_, mut masks) in groups {
        masks.sort_unstable();
        let first = Subword { len: q.len(), mask: masks[0] };
        let w = super::demazure_product(c, &first.letters(q))?;
        out.insert(w, masks.into_iter().map(|mask| Subword { len: q.len(), mask }).collect());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_weyl::element_of_word;
    use alloc::string::ToString;
    use alloc::vec;

    fn strs(v: &[Subword]) -> Vec<alloc::string::String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn reduced_subwords_of_121() {
        let c = CartanData::type_a(2).unwrap();
        let q = Word::new(vec![0, 1, 0]);
        let r1 = element_of_word(&c, &Word::new(vec![0])).unwrap();
        let got = subwords_with_product(&c, &q, &r1, SubwordMode::Reduced).unwrap();
        assert_eq!(strs(&got), ["100", "001"]);
        let r1r2 = element_of_word(&c, &Word::new(vec![0, 1])).unwrap();
        let got = subwords_with_product(&c, &q, &r1r2, SubwordMode::Reduced).unwrap();
        assert_eq!(strs(&got), ["110"]);
    }

    #[test]
    fn demazure_subwords() {
        let c = CartanData::type_a(3).unwrap();
        let q = Word::new(vec![0, 1, 2, 0, 1]);
        let t = element_of_word(&c, &Word::new(vec![0, 1, 0])).unwrap();
        let got = subwords_with_product(&c, &q, &t, SubwordMode::Demazure).unwrap();
        assert_eq!(strs(&got), ["11010", "01011", "11011"]);
    }

    #[test]
    fn grouping_matches_targeted_search() {
        let c = CartanData::type_b(2).unwrap();
        let q = Word::new(vec![0, 1, 0, 1, 0]);
        for mode in [SubwordMode::Reduced, SubwordMode::Demazure] {
            let groups = subwords_by_product(&c, &q, mode).unwrap();
            for (w, masks) in &groups {
                assert_eq!(&subwords_with_product(&c, &q, w, mode).unwrap(), masks);
            }
            let total: usize = groups.values().map(Vec::len).sum();
            if mode == SubwordMode::Demazure {
                assert_eq!(total, 32);
            }
        }
    }

    #[test]
    fn mask_parsing_and_ops() {
        let s = Subword::parse("1 1 0 1 0").unwrap();
        assert_eq!(s.to_string(), "11010");
        assert_eq!(s.mask(), 0b01011);
        assert_eq!(s.positions().collect::<Vec<_>>(), [0, 1, 3]);
        assert_eq!(s.first(), Some(0));
        assert!(Subword::parse("10x").is_err());
        assert!(Subword::parse("01").unwrap().is_subset(&Subword::parse("11").unwrap()));
    }
}
