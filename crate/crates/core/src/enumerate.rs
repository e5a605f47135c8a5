//! Prefix-tree enumeration of repetition-free and factor-avoiding words.
//!
//! Freeness and avoidance are both factorial properties, so a word is
//! enumerated only if every prefix qualifies; the prefix tree prunes as soon
//! as the newest letter creates a violation ending at it.

use crate::error::{Error, Result};
use crate::rational::Ratio;
use crate::words::{Alphabet, Word};

/// True when appending kept the word (β⁺, min_period)-free: checks every
/// repetition that ends at the final position.
pub(crate) fn last_letter_free(symbols: &[u8], beta: Ratio, min_period: usize) -> bool {
    let n = symbols.len();
    let num = *beta.numer() as u64;
    let den = *beta.denom() as u64;
    for p in min_period..n {
        // best possible length ending here for period p is n; prune period loop
        if (n as u64) * den <= num * p as u64 {
            break;
        }
        let k_min = ((p as u64 * (num - den)) / den + 1) as usize;
        if p + k_min > n {
            continue;
        }
        let mut k = 0usize;
        while k < n - p && symbols[n - 1 - k] == symbols[n - 1 - k - p] {
            k += 1;
            if k >= k_min {
                return false;
            }
        }
    }
    true
}

/// Walks the prefix tree of (β⁺, min_period)-free words over `alphabet` up to
/// `max_len`, in lexicographic (pre-)order. `on_word` sees every free word
/// including ε; `on_leaf` sees words that cannot be extended or that reached
/// `max_len`.
pub(crate) fn walk_free_tree(
    alphabet: Alphabet,
    beta: Ratio,
    min_period: usize,
    max_len: usize,
    on_word: &mut dyn FnMut(&[u8]),
    on_leaf: &mut dyn FnMut(&[u8]),
) {
    let mut word: Vec<u8> = Vec::with_capacity(max_len);
    on_word(&word);
    walk_free_rec(alphabet, beta, min_period, max_len, &mut word, on_word, on_leaf);
}

fn walk_free_rec(
    alphabet: Alphabet,
    beta: Ratio,
    min_period: usize,
    max_len: usize,
    word: &mut Vec<u8>,
    on_word: &mut dyn FnMut(&[u8]),
    on_leaf: &mut dyn FnMut(&[u8]),
) {
    if word.len() == max_len {
        on_leaf(word);
        return;
    }
    let mut extended = false;
    for s in alphabet.symbols() {
        word.push(s);
        if last_letter_free(word, beta, min_period) {
            extended = true;
            on_word(word);
            walk_free_rec(alphabet, beta, min_period, max_len, word, on_word, on_leaf);
        }
        word.pop();
    }
    if !extended {
        on_leaf(word);
    }
}

/// All β⁺-free words of length exactly `len`, in lexicographic order.
pub fn enumerate_free(alphabet: Alphabet, beta: Ratio, len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    walk_free_tree(
        alphabet,
        beta,
        1,
        len,
        &mut |w| {
            if w.len() == len {
                out.push(Word::new(alphabet, w.to_vec()).unwrap());
            }
        },
        &mut |_| {},
    );
    out
}

/// The set of all binary words (including ε) avoiding every element of `F`
/// as a factor, in lexicographic order. Errors if some word of length `cap`
/// still avoids `F`, which signals that the avoidance language is (or may
/// be) infinite.
pub fn enumerate_avoiding(forbidden: &[Word], cap: usize) -> Result<Vec<Word>> {
    if forbidden.is_empty() {
        return Err(Error::EmptyInput("forbidden set"));
    }
    let max_f = forbidden.iter().map(Word::len).max().unwrap();
    if forbidden.iter().any(Word::is_empty) {
        return Err(Error::EmptyInput("forbidden set contains ε"));
    }
    assert!(cap >= max_f, "cap must cover the longest forbidden factor");
    let forbidden: Vec<&[u8]> = forbidden.iter().map(Word::symbols).collect();
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(cap);
    avoid_rec(&forbidden, cap, &mut word, &mut out)?;
    Ok(out)
}

fn avoid_rec(
    forbidden: &[&[u8]],
    cap: usize,
    word: &mut Vec<u8>,
    out: &mut Vec<Word>,
) -> Result<()> {
    if word.len() == cap {
        return Err(Error::AvoidanceNotFinite {
            cap,
            witness: word.iter().map(|s| s.to_string()).collect(),
        });
    }
    out.push(Word::new(Alphabet::BINARY, word.clone()).unwrap());
    for s in 0..2u8 {
        word.push(s);
        // prefix already avoids F, so only suffixes can be new violations
        let clean = forbidden
            .iter()
            .all(|f| f.len() > word.len() || &word[word.len() - f.len()..] != *f);
        if clean {
            avoid_rec(forbidden, cap, word, out)?;
        }
        word.pop();
    }
    Ok(())
}
