//! Repetition detection with exact fractional exponents.
//!
//! A repetition is a factor of length strictly greater than one of its
//! periods; its exponent is length/period. A word is (β⁺,n)-free when it
//! contains no repetition with period at least n and exponent strictly
//! greater than β. Exponent exactly β is legal.

use crate::rational::Ratio;
use crate::words::Word;

/// A located repetition: `word[start..start+length]` has period `period`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RepetitionWitness {
    pub start: usize,
    pub period: usize,
    pub length: usize,
}

impl RepetitionWitness {
    pub fn exponent(&self) -> Ratio {
        Ratio::new(self.length as i64, self.period as i64)
    }

    /// Re-checks the witness invariants against a word.
    pub fn holds_in(&self, symbols: &[u8]) -> bool {
        self.length > self.period
            && self.period >= 1
            && self.start + self.length <= symbols.len()
            && (self.start..self.start + self.length - self.period)
                .all(|i| symbols[i] == symbols[i + self.period])
    }
}

/// First repetition (period ascending, then start ascending) with period at
/// least `min_period` and exponent strictly above `beta`, or `None` if the
/// word is (β⁺, min_period)-free. The comparison `(p+k)/p > beta` is done in
/// integers.
pub fn find_repetition(w: &Word, beta: Ratio, min_period: usize) -> Option<RepetitionWitness> {
    find_repetition_in(w.symbols(), beta, min_period)
}

pub fn find_repetition_in(
    symbols: &[u8],
    beta: Ratio,
    min_period: usize,
) -> Option<RepetitionWitness> {
    assert!(beta > Ratio::from_integer(1), "beta must exceed 1");
    assert!(min_period >= 1, "min_period must be at least 1");
    let n = symbols.len();
    let num = *beta.numer() as u64;
    let den = *beta.denom() as u64;
    if n < 2 {
        return None;
    }
    // A factor of length at most n with period p has exponent at most n/p,
    // so periods with num*p >= n*den can never violate freeness.
    let p_cap = usize::min(n - 1, ((n as u64 * den) / num) as usize + 1);
    for p in min_period..=p_cap {
        // Smallest overhang k with (p+k)*den > num*p.
        let k_min = ((p as u64 * (num - den)) / den + 1) as usize;
        if p + k_min > n {
            continue;
        }
        let mut run = 0usize;
        let mut first_start = None;
        for i in (0..n - p).rev() {
            run = if symbols[i] == symbols[i + p] { run + 1 } else { 0 };
            if run >= k_min {
                first_start = Some(i);
            }
        }
        if let Some(start) = first_start {
            let mut k = 0;
            while start + p + k < n && symbols[start + k] == symbols[start + p + k] {
                k += 1;
            }
            return Some(RepetitionWitness { start, period: p, length: p + k });
        }
    }
    None
}

/// (β⁺,n)-freeness: no repetition with period >= n and exponent > β.
pub fn is_free(w: &Word, beta: Ratio, min_period: usize) -> bool {
    find_repetition(w, beta, min_period).is_none()
}

pub fn is_free_slice(symbols: &[u8], beta: Ratio, min_period: usize) -> bool {
    find_repetition_in(symbols, beta, min_period).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::words::Word;

    fn bw(s: &str) -> Word {
        Word::parse_binary(s).unwrap()
    }

    #[test]
    fn power_of_single_letter() {
        let w = find_repetition(&bw("0000"), ratio(7, 4), 1).unwrap();
        assert_eq!((w.period, w.length), (1, 4));
        assert_eq!(w.exponent(), ratio(4, 1));
    }

    #[test]
    fn exponent_exactly_beta_is_free() {
        // The period-4 factor of 0110011 has exponent exactly 7/4.
        assert_eq!(find_repetition(&bw("0110011"), ratio(7, 4), 4), None);
    }

    #[test]
    fn small_period_caught_when_allowed() {
        let w = find_repetition(&bw("0110011"), ratio(7, 4), 1).unwrap();
        assert_eq!((w.start, w.period, w.length), (1, 1, 2));
        assert_eq!(w.exponent(), ratio(2, 1));
    }

    #[test]
    fn freeness_examples() {
        assert!(is_free(&bw("010"), ratio(7, 4), 1));
        assert!(!is_free(&bw("00"), ratio(7, 4), 1));
        let t = Word::parse(crate::words::Alphabet::TERNARY, "0120").unwrap();
        assert!(is_free(&t, ratio(7, 4), 1));
    }

    #[test]
    fn witness_invariants_hold() {
        let word = bw("0010010");
        let w = find_repetition(&word, ratio(3, 2), 1).unwrap();
        assert!(w.holds_in(word.symbols()));
        assert!(w.length as i64 * w.exponent().denom() > w.exponent().numer() * 0); // exponent positive
        // exactness: length * den > num * period
        assert!(w.length as i64 * 2 > 3 * w.period as i64);
    }

    #[test]
    fn empty_and_single_letter_words_are_free() {
        assert!(is_free(&bw(""), ratio(7, 4), 1));
        assert!(is_free(&bw("1"), ratio(7, 4), 1));
    }
}
