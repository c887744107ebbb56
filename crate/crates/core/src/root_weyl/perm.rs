//! One-line permutation notation for type `A_n`, where `r_i` swaps the
//! values in positions `i` and `i + 1` and products compose as functions.

use alloc::vec::Vec;

use super::{element_of_word, CartanData, WeylElement, Word};
use crate::error::{Error, Result};

/// One-line notation, values `1..=m`, of the product of `q` in `S_m`.
pub fn word_to_perm(q: &Word, m: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (1..=m).collect();
    for &i in q.letters() {
        p.swap(i, i + 1);
    }
    p
}

pub fn check_perm(p: &[usize]) -> Result<()> {
    let mut seen = alloc::vec![false; p.len()];
    for &x in p {
        if x == 0 || x > p.len() || seen[x - 1] {
            return Err(Error::Precondition(alloc::format!("not a permutation of 1..{}", p.len())));
        }
        seen[x - 1] = true;
    }
    Ok(())
}

/// A reduced word for a permutation given in one-line notation.
pub fn perm_to_word(p: &[usize]) -> Result<Word> {
    check_perm(p)?;
    let mut p = p.to_vec();
    let mut strips = Vec::new();
    'outer: loop {
        for i in 0..p.len().saturating_sub(1) {
            if p[i] > p[i + 1] {
                p.swap(i, i + 1);
                strips.push(i);
                continue 'outer;
            }
        }
        break;
    }
    strips.reverse();
    Ok(Word::new(strips))
}

pub fn element_from_perm(c: &CartanData, p: &[usize]) -> Result<WeylElement> {
    if !c.is_type_a() || p.len() != c.rank() + 1 {
        return Err(Error::Precondition(alloc::format!(
            "permutations of length {} need type A{}",
            p.len(),
            p.len().saturating_sub(1)
        )));
    }
    element_of_word(c, &perm_to_word(p)?)
}

pub fn element_to_perm(w: &WeylElement) -> Vec<usize> {
    word_to_perm(w.word(), w.rank() + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_line_notation() {
        assert_eq!(word_to_perm(&Word::new(alloc::vec![0, 1, 2, 0, 1]), 4), [3, 4, 2, 1]);
        assert_eq!(word_to_perm(&Word::new(alloc::vec![1, 2, 1]), 4), [1, 4, 3, 2]);
        assert_eq!(word_to_perm(&Word::new(alloc::vec![0, 1, 0]), 4), [3, 2, 1, 4]);
        let c = CartanData::type_a(3).unwrap();
        for p in [[3, 4, 2, 1], [1, 4, 3, 2], [2, 1, 3, 4]] {
            let w = element_from_perm(&c, &p).unwrap();
            assert_eq!(element_to_perm(&w), p);
        }
        assert!(element_from_perm(&c, &[1, 2, 3]).is_err());
        assert!(perm_to_word(&[1, 1, 2]).is_err());
    }
}
