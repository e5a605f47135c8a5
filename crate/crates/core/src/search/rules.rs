//! Backtrack rules for the length-6 unavoidability search.

use super::{DfsEngine, RuleSet};
use crate::error::{Error, Result};
use crate::imaged::split_images;
use crate::words::Word;

pub const RULE_NAMES: [&str; 3] = ["r1", "r2", "r3"];

/// A preprocessed rule word: its letters, letter counts and the 6-bit codes
/// of the word and its complement.
pub(crate) struct RuleWord {
    letters: Vec<u8>,
    n0: usize,
    n1: usize,
    code: usize,
    complement_code: usize,
}

pub(crate) struct RuleData {
    words: Vec<RuleWord>,
}

impl RuleData {
    pub fn prepare(rule_words: &[Word]) -> Result<RuleData> {
        let mut words = Vec::with_capacity(rule_words.len());
        for w in rule_words {
            if w.len() != 6 || !w.is_bi_literal() {
                return Err(Error::Parse(format!(
                    "rule words must be bi-literal and of length 6, got {w}"
                )));
            }
            let letters = w.symbols().to_vec();
            let n1 = letters.iter().filter(|&&s| s == 1).count();
            let code = code6(&letters);
            words.push(RuleWord {
                n0: letters.len() - n1,
                n1,
                code,
                complement_code: code ^ 0b111111,
                letters,
            });
        }
        Ok(RuleData { words })
    }
}

fn code6(window: &[u8]) -> usize {
    window.iter().fold(0usize, |v, &s| (v << 1) | s as usize)
}

pub(crate) struct RuleEngine<'a> {
    rules: RuleSet,
    data: &'a RuleData,
    word: Vec<u8>,
    /// Length of the run of equal letters ending at each depth.
    run_len: Vec<usize>,
    /// Multiset of length-6 windows, keyed by 6-bit code.
    window_counts: [u32; 64],
}

impl<'a> RuleEngine<'a> {
    pub fn new(data: &'a RuleData, rules: RuleSet) -> RuleEngine<'a> {
        RuleEngine { rules, data, word: Vec::new(), run_len: Vec::new(), window_counts: [0; 64] }
    }

    fn last_window_code(&self) -> usize {
        code6(&self.word[self.word.len() - 6..])
    }

    /// R3: some suffix of the word parses as m(f) with |m(0)|+|m(1)| >= 3,
    /// for a rule word f such that f or its complement occurs in the word.
    /// Parsing against f alone covers the complement case: swapping the two
    /// images of m turns a parse of the complement into a parse of f.
    fn rule3_fires(&self) -> bool {
        let n = self.word.len();
        for rw in &self.data.words {
            if self.window_counts[rw.code] == 0 && self.window_counts[rw.complement_code] == 0 {
                continue;
            }
            let mut a = 1;
            while rw.n0 * a + rw.n1 <= n {
                let mut b = 1;
                while rw.n0 * a + rw.n1 * b <= n {
                    let len = rw.n0 * a + rw.n1 * b;
                    if a + b >= 3
                        && split_images(&rw.letters, &self.word[n - len..], a, b).is_some()
                    {
                        return true;
                    }
                    b += 1;
                }
                a += 1;
            }
        }
        false
    }
}

impl DfsEngine for RuleEngine<'_> {
    fn push(&mut self, letter: u8) -> Option<&'static str> {
        let run = match self.word.last() {
            Some(&prev) if prev == letter => self.run_len.last().unwrap() + 1,
            _ => 1,
        };
        self.word.push(letter);
        self.run_len.push(run);
        if self.word.len() >= 6 {
            self.window_counts[self.last_window_code()] += 1;
        }

        if self.rules.r1 && run >= 4 {
            return Some("r1");
        }
        if self.rules.r2
            && self.word.len() >= 6
            && self.window_counts[self.last_window_code() ^ 0b111111] > 0
        {
            return Some("r2");
        }
        if self.rules.r3 && self.rule3_fires() {
            return Some("r3");
        }
        None
    }

    fn pop(&mut self) {
        if self.word.len() >= 6 {
            self.window_counts[self.last_window_code()] -= 1;
        }
        self.word.pop();
        self.run_len.pop();
    }
}
