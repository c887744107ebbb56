use alloc::collections::{BTreeMap, BTreeSet};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};

use super::{CartanData, Mat, Weight, Word};
use crate::error::{Error, Result};

/// An element of the Weyl group, stored as its matrix on the root lattice
/// together with its inverse and its lex-least reduced word.
///
/// Cloning is cheap. Equality is equality of matrices; the order sorts by
/// length and then by canonical word, i.e. length-lex.
#[derive(Clone)]
pub struct WeylElement(Arc<Inner>);

struct Inner {
    mat: Mat,
    inv: Mat,
    word: Word,
}

impl WeylElement {
    pub(crate) fn from_mats(c: &CartanData, mat: Mat, inv: Mat) -> Self {
        let mut cur = inv.clone();
        let mut word = Vec::new();
        'outer: loop {
            for i in 0..c.rank() {
                if cur.col_negative(i) {
                    word.push(i);
                    cur.right_gen(c, i);
                    continue 'outer;
                }
            }
            break;
        }
        debug_assert!(cur.is_identity());
        WeylElement(Arc::new(Inner { mat, inv, word: Word::new(word) }))
    }

    pub fn identity(c: &CartanData) -> Self {
        let m = Mat::identity(c.rank());
        WeylElement(Arc::new(Inner { mat: m.clone(), inv: m, word: Word::default() }))
    }

    pub fn generator(c: &CartanData, i: usize) -> Result<Self> {
        c.check_index(i)?;
        Ok(Self::identity(c).right_mul_gen(c, i))
    }

    /// Builds the element from a word already known to be valid.
    pub(crate) fn of_letters(c: &CartanData, letters: &[usize]) -> Self {
        let mut m = Mat::identity(c.rank());
        let mut inv = Mat::identity(c.rank());
        for &q in letters {
            m.right_gen(c, q);
            inv.left_gen(c, q);
        }
        Self::from_mats(c, m, inv)
    }

    pub(crate) fn mat(&self) -> &Mat {
        &self.0.mat
    }

    pub(crate) fn inv_mat(&self) -> &Mat {
        &self.0.inv
    }

    pub fn rank(&self) -> usize {
        self.0.mat.n()
    }

    pub fn length(&self) -> usize {
        self.0.word.len()
    }

    /// The lexicographically least reduced word.
    pub fn word(&self) -> &Word {
        &self.0.word
    }

    pub fn is_identity(&self) -> bool {
        self.length() == 0
    }

    pub fn matrix(&self) -> Vec<Vec<i64>> {
        self.0.mat.rows()
    }

    pub fn mul(&self, c: &CartanData, o: &WeylElement) -> WeylElement {
        Self::from_mats(c, self.0.mat.mul(&o.0.mat), o.0.inv.mul(&self.0.inv))
    }

    pub fn inverse(&self, c: &CartanData) -> WeylElement {
        Self::from_mats(c, self.0.inv.clone(), self.0.mat.clone())
    }

    /// `r_i · self`
    pub fn left_mul_gen(&self, c: &CartanData, i: usize) -> WeylElement {
        let mut m = self.0.mat.clone();
        m.left_gen(c, i);
        let mut inv = self.0.inv.clone();
        inv.right_gen(c, i);
        Self::from_mats(c, m, inv)
    }

    /// `self · r_i`
    pub fn right_mul_gen(&self, c: &CartanData, i: usize) -> WeylElement {
        let mut m = self.0.mat.clone();
        m.right_gen(c, i);
        let mut inv = self.0.inv.clone();
        inv.left_gen(c, i);
        Self::from_mats(c, m, inv)
    }

    /// `ℓ(r_i w) < ℓ(w)`
    pub fn is_left_descent(&self, i: usize) -> bool {
        self.0.inv.col_negative(i)
    }

    /// `ℓ(w r_i) < ℓ(w)`
    pub fn is_right_descent(&self, i: usize) -> bool {
        self.0.mat.col_negative(i)
    }

    pub fn act(&self, lambda: &Weight) -> Weight {
        Weight(self.0.mat.apply(&lambda.0))
    }

    /// `w(α_j)`
    pub fn root_image(&self, j: usize) -> Weight {
        Weight(self.0.mat.column(j))
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.0, &o.0) || self.0.mat == o.0.mat
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.0.mat.hash(h)
    }
}

impl Ord for WeylElement {
    fn cmp(&self, o: &Self) -> Ordering {
        self.length().cmp(&o.length()).then_with(|| self.0.word.cmp(&o.0.word)).then_with(|| self.0.mat.cmp(&o.0.mat))
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W({self})")
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            f.write_str("e")
        } else {
            write!(f, "{}", self.0.word)
        }
    }
}

pub fn element_of_word(c: &CartanData, q: &Word) -> Result<WeylElement> {
    q.check(c)?;
    Ok(WeylElement::of_letters(c, q.letters()))
}

/// Product with letters that would shorten the element absorbed.
pub fn demazure_product(c: &CartanData, q: &Word) -> Result<WeylElement> {
    q.check(c)?;
    let mut m = Mat::identity(c.rank());
    let mut inv = Mat::identity(c.rank());
    for &i in q.letters() {
        if !m.col_negative(i) {
            m.right_gen(c, i);
            inv.left_gen(c, i);
        }
    }
    Ok(WeylElement::from_mats(c, m, inv))
}

/// Bruhat test by descending along the canonical word of `w`.
pub fn bruhat_leq(c: &CartanData, u: &WeylElement, w: &WeylElement) -> bool {
    if u.length() > w.length() {
        return false;
    }
    bruhat_leq_inv(c, u.inv_mat().clone(), u.length(), w.word().letters())
}

pub(crate) fn bruhat_leq_inv(c: &CartanData, mut uinv: Mat, mut ulen: usize, w: &[usize]) -> bool {
    if ulen > w.len() {
        return false;
    }
    for (k, &s) in w.iter().enumerate() {
        if ulen == 0 {
            return true;
        }
        if ulen > w.len() - k {
            return false;
        }
        if uinv.col_negative(s) {
            uinv.right_gen(c, s);
            ulen -= 1;
        }
    }
    ulen == 0
}

/// All reduced words of `w` in lexicographic order.
pub fn reduced_words(c: &CartanData, w: &WeylElement) -> Vec<Word> {
    fn go(c: &CartanData, inv: &Mat, left: usize, prefix: &mut Vec<usize>, out: &mut Vec<Word>) {
        if left == 0 {
            out.push(Word::new(prefix.clone()));
            return;
        }
        for i in 0..c.rank() {
            if inv.col_negative(i) {
                let mut next = inv.clone();
                next.right_gen(c, i);
                prefix.push(i);
                go(c, &next, left - 1, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(c, w.inv_mat(), w.length(), &mut Vec::new(), &mut out);
    out
}

/// Every element of a finite Weyl group, in length-lex order. Fails when the
/// group has more than `limit` elements.
pub fn enumerate_group(c: &CartanData, limit: usize) -> Result<Vec<WeylElement>> {
    let e = WeylElement::identity(c);
    let mut seen: BTreeSet<Mat> = BTreeSet::new();
    seen.insert(e.mat().clone());
    let mut layer = alloc::vec![e];
    let mut all = Vec::new();
    while !layer.is_empty() {
        let mut next = BTreeMap::new();
        for w in &layer {
            for i in 0..c.rank() {
                if !w.is_left_descent(i) {
                    let x = w.left_mul_gen(c, i);
                    if seen.insert(x.mat().clone()) {
                        next.insert(x.clone(), ());
                    }
                }
            }
        }
        all.append(&mut layer);
        if all.len() > limit {
            return Err(Error::GroupTooLarge { limit });
        }
        layer = next.into_keys().collect();
    }
    all.sort();
    if all.len() > limit {
        return Err(Error::GroupTooLarge { limit });
    }
    Ok(all)
}
