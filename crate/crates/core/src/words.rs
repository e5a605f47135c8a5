//! Finite words over alphabets of size at most 3.
//!
//! Symbols are the integers `0..size`. Words serialize as ASCII digit strings
//! ("0110"), the empty word as "" (also accepted/printed as "ε" in human
//! output).

use std::fmt;

use crate::error::{Error, Result};

/// An alphabet {0, .., size-1} with 1 <= size <= 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet(u8);

impl Alphabet {
    pub const UNARY: Alphabet = Alphabet(1);
    pub const BINARY: Alphabet = Alphabet(2);
    pub const TERNARY: Alphabet = Alphabet(3);

    pub fn of_size(size: usize) -> Result<Alphabet> {
        if (1..=3).contains(&size) {
            Ok(Alphabet(size as u8))
        } else {
            Err(Error::BadAlphabetSize(size))
        }
    }

    pub fn size(self) -> usize {
        self.0 as usize
    }

    pub fn symbols(self) -> impl Iterator<Item = u8> {
        0..self.0
    }

    pub fn contains(self, symbol: u8) -> bool {
        symbol < self.0
    }
}

/// A finite word: a symbol sequence tagged with its alphabet.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    alphabet: Alphabet,
    symbols: Vec<u8>,
}

impl Word {
    pub fn new(alphabet: Alphabet, symbols: Vec<u8>) -> Result<Word> {
        for &s in &symbols {
            if !alphabet.contains(s) {
                return Err(Error::SymbolOutOfRange { symbol: s, size: alphabet.size() });
            }
        }
        Ok(Word { alphabet, symbols })
    }

    pub fn empty(alphabet: Alphabet) -> Word {
        Word { alphabet, symbols: Vec::new() }
    }

    /// Parses an ASCII digit string; "" and "ε" denote the empty word.
    pub fn parse(alphabet: Alphabet, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() || text == "ε" {
            return Ok(Word::empty(alphabet));
        }
        let mut symbols = Vec::with_capacity(text.len());
        for c in text.chars() {
            let d = c
                .to_digit(10)
                .ok_or_else(|| Error::Parse(format!("invalid symbol {c:?} in word {text:?}")))?;
            symbols.push(d as u8);
        }
        Word::new(alphabet, symbols)
    }

    pub fn parse_binary(text: &str) -> Result<Word> {
        Word::parse(Alphabet::BINARY, text)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// True if the word uses exactly one distinct letter (and is non-empty).
    pub fn is_unary(&self) -> bool {
        match self.symbols.first() {
            None => false,
            Some(&first) => self.symbols.iter().all(|&s| s == first),
        }
    }

    /// True if the word contains at least two distinct letters.
    pub fn is_bi_literal(&self) -> bool {
        !self.is_empty() && !self.is_unary()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "\"ε\"")
        } else {
            write!(f, "\"{self}\"")
        }
    }
}

/// Swaps 0 and 1. Rejects words over non-binary alphabets.
pub fn complement(w: &Word) -> Result<Word> {
    if w.alphabet != Alphabet::BINARY {
        return Err(Error::NonBinaryAlphabet);
    }
    Ok(Word {
        alphabet: Alphabet::BINARY,
        symbols: complement_slice(&w.symbols),
    })
}

pub(crate) fn complement_slice(symbols: &[u8]) -> Vec<u8> {
    symbols.iter().map(|&s| 1 - s).collect()
}

/// The distinct contiguous factors of `w` of length `len`, sorted.
pub fn factor_set(w: &Word, len: usize) -> Vec<Word> {
    let mut out: Vec<Word> = distinct_factors_of_length(w.symbols(), len)
        .into_iter()
        .map(|s| Word { alphabet: w.alphabet, symbols: s.to_vec() })
        .collect();
    out.sort();
    out
}

pub(crate) fn distinct_factors_of_length(symbols: &[u8], len: usize) -> Vec<&[u8]> {
    if len > symbols.len() {
        return Vec::new();
    }
    let mut seen: Vec<&[u8]> = symbols.windows(len.max(1)).collect();
    if len == 0 {
        return vec![&symbols[0..0]];
    }
    seen.sort();
    seen.dedup();
    seen
}

/// Substring test on raw symbol slices.
pub(crate) fn contains_slice(haystack: &[u8], needle: &[u8]) -> bool {
    if needle.is_empty() {
        return true;
    }
    if needle.len() > haystack.len() {
        return false;
    }
    haystack.windows(needle.len()).any(|w| w == needle)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(s: &str) -> Word {
        Word::parse_binary(s).unwrap()
    }

    #[test]
    fn complement_swaps_bits() {
        assert_eq!(complement(&bw("0010")).unwrap(), bw("1101"));
        assert_eq!(complement(&bw("")).unwrap(), bw(""));
    }

    #[test]
    fn complement_is_an_involution() {
        let w = bw("011101");
        assert_eq!(complement(&complement(&w).unwrap()).unwrap(), w);
    }

    #[test]
    fn complement_rejects_ternary() {
        let w = Word::parse(Alphabet::TERNARY, "012").unwrap();
        assert_eq!(complement(&w), Err(Error::NonBinaryAlphabet));
    }

    #[test]
    fn factor_set_basics() {
        assert_eq!(factor_set(&bw("0101"), 2), vec![bw("01"), bw("10")]);
        assert_eq!(factor_set(&bw("0101"), 0), vec![bw("")]);
        assert_eq!(factor_set(&bw("01"), 5), Vec::<Word>::new());
    }

    #[test]
    fn word_rejects_foreign_symbols() {
        assert!(Word::parse(Alphabet::BINARY, "012").is_err());
        assert!(Word::new(Alphabet::UNARY, vec![0, 1]).is_err());
    }

    #[test]
    fn unary_and_bi_literal() {
        assert!(bw("000").is_unary());
        assert!(!bw("010").is_unary());
        assert!(bw("010").is_bi_literal());
        assert!(!bw("").is_unary());
        assert!(!bw("").is_bi_literal());
    }

    #[test]
    fn parse_accepts_epsilon_forms() {
        assert_eq!(Word::parse_binary("ε").unwrap(), bw(""));
        assert_eq!(Word::parse_binary("").unwrap(), bw(""));
    }
}
