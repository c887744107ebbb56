//! Parsing of words, permutations, subword masks and GCM files.

use schub_core::root_weyl::perm::element_from_perm;
use schub_core::{CartanData, Subword, WeylElement, Word};

use crate::error::{CliError, ParseError, Result};

fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.char_indices().filter(|&(i, ch)| !is_sep(ch) && text[..i].chars().next_back().is_none_or(is_sep)).map(
        move |(i, _)| {
            let rest = &text[i..];
            let end = rest.find(is_sep).unwrap_or(rest.len());
            (text[..i].chars().count() + 1, &rest[..end])
        },
    )
}

fn is_sep(ch: char) -> bool {
    ch.is_whitespace() || ch == ','
}

fn err(source: &str, line: usize, column: usize, expected: impl Into<String>, found: &str) -> ParseError {
    let found = if found.is_empty() { "end of input".to_string() } else { format!("{found:?}") };
    ParseError { source: source.to_string(), line, column, expected: expected.into(), found }
}

/// A word of 1-based generator indices, e.g. `"1 2 1"`. The empty string
/// and `"e"` denote the empty word.
pub fn parse_word(c: &CartanData, source: &str, text: &str) -> Result<Word> {
    if text.trim() == "e" {
        return Ok(Word::default());
    }
    let n = c.rank();
    let mut letters = Vec::new();
    for (col, tok) in tokens(text) {
        match tok.parse::<usize>() {
            Ok(k) if (1..=n).contains(&k) => letters.push(k - 1),
            _ => return Err(err(source, 1, col, format!("a generator index in 1..={n}"), tok).into()),
        }
    }
    Ok(Word::new(letters))
}

/// One-line notation: `"1432"` or `"1 4 3 2"`.
pub fn parse_perm(source: &str, text: &str) -> Result<Vec<usize>> {
    let toks: Vec<(usize, &str)> = tokens(text).collect();
    let digits = |col: usize, tok: &str| -> Result<Vec<usize>> {
        tok.chars()
            .enumerate()
            .map(|(k, ch)| {
                ch.to_digit(10)
                    .filter(|&d| d > 0)
                    .map(|d| d as usize)
                    .ok_or_else(|| err(source, 1, col + k, "a digit 1-9", &ch.to_string()).into())
            })
            .collect()
    };
    let p = match toks.as_slice() {
        [] => return Err(err(source, 1, 1, "a permutation in one-line notation", "").into()),
        [(col, tok)] => digits(*col, tok)?,
        _ => toks
            .iter()
            .map(|&(col, tok)| {
                tok.parse::<usize>()
                    .ok()
                    .filter(|&k| k > 0)
                    .ok_or_else(|| CliError::from(err(source, 1, col, "a positive integer", tok)))
            })
            .collect::<Result<_>>()?,
    };
    Ok(p)
}

pub fn element_of_perm(c: &CartanData, source: &str, text: &str) -> Result<WeylElement> {
    let p = parse_perm(source, text)?;
    Ok(element_from_perm(c, &p)?)
}

/// A subword mask such as `"10110"`, one character per letter of `q`.
pub fn parse_mask(q: &Word, source: &str, text: &str) -> Result<Subword> {
    let text = text.trim();
    let mut mask = 0u64;
    let mut len = 0;
    for (k, (at, ch)) in text.char_indices().enumerate() {
        match ch {
            '1' => mask |= 1 << k,
            '0' => {}
            _ => return Err(err(source, 1, k + 1, "'0' or '1'", &ch.to_string()).into()),
        }
        len += 1;
        if len > q.len() {
            return Err(err(source, 1, k + 1, format!("a mask of length {}", q.len()), &text[at..]).into());
        }
    }
    if len < q.len() {
        return Err(err(source, 1, len + 1, format!("a mask of length {}", q.len()), "").into());
    }
    Ok(Subword::new(len, mask)?)
}

/// A generalized Cartan matrix: the size `n` on the first line, then `n`
/// rows of `n` integers. Blank lines and text after `#` are ignored.
pub fn parse_gcm(source: &str, text: &str) -> Result<CartanData> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("")))
        .filter(|(_, l)| !l.trim().is_empty());
    let last_line = text.lines().count().max(1);
    let (ln, first) = lines.next().ok_or_else(|| err(source, last_line, 1, "the matrix size", ""))?;
    let toks: Vec<_> = tokens(first).collect();
    let n = match toks.as_slice() {
        [(_, tok)] => tok.parse::<usize>().ok().filter(|&n| n > 0),
        _ => None,
    }
    .ok_or_else(|| {
        let (col, tok) = toks.first().copied().unwrap_or((1, ""));
        err(source, ln, col, "the matrix size as a single positive integer", tok)
    })?;
    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let (ln, line) = lines.next().ok_or_else(|| err(source, last_line, 1, format!("row {} of {n}", r + 1), ""))?;
        let mut row = Vec::with_capacity(n);
        let mut end_col = 1;
        for (col, tok) in tokens(line) {
            if row.len() == n {
                return Err(err(source, ln, col, "end of row", tok).into());
            }
            let x = tok.parse::<i64>().map_err(|_| err(source, ln, col, "an integer", tok))?;
            row.push(x);
            end_col = col + tok.chars().count();
        }
        if row.len() < n {
            return Err(err(source, ln, end_col, format!("{n} entries"), "").into());
        }
        rows.push(row);
    }
    if let Some((ln, line)) = lines.next() {
        let (col, tok) = tokens(line).next().unwrap_or((1, line));
        return Err(err(source, ln, col, "end of file", tok).into());
    }
    Ok(CartanData::from_rows(&rows)?)
}
