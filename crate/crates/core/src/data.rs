//! Bundled input data for the four verification pipelines: the two uniform
//! morphisms and the word lists each pipeline consumes. Everything here is
//! dumpable through the CLI so it can be diffed against its source.

use crate::morphism::Morphism;
use crate::words::Word;

fn binary_words(texts: &[&str]) -> Vec<Word> {
    texts.iter().map(|t| Word::parse_binary(t).unwrap()).collect()
}

/// Inputs for the length-7 avoidance pipeline (`verify thm2`).
pub mod thm2 {
    use super::*;

    /// Images of the 37-uniform ternary-to-binary morphism.
    pub const IMAGES: [&str; 3] = [
        "0001110101001100011101000110101001101",
        "0001110101000110100110001110100110101",
        "0001110100110001110101000110101001101",
    ];

    /// Factors that images of free ternary words never contain.
    pub const FORBIDDEN: [&str; 5] = ["0000", "1111", "0010", "1011", "010101"];

    /// The candidate morphisms surviving the length/exclusion arguments,
    /// in m(0)/m(1) notation.
    pub const MORPHISM_CANDIDATES: [&str; 10] =
        ["0/01", "0/10", "1/01", "1/10", "01/0", "01/1", "10/0", "10/1", "01/10", "10/01"];

    /// The candidate length-7 factors: contain 00 and 11, neither 0101 nor
    /// 1010.
    pub const FACTOR_CANDIDATES: [&str; 12] = [
        "0001101", "0001110", "0011000", "0011101", "0100011", "0100110", "0110001", "1000110",
        "1000111", "1001100", "1001101", "1100011",
    ];

    pub fn morphism() -> Morphism {
        Morphism::parse_compact(&IMAGES.join("/")).unwrap()
    }

    pub fn forbidden() -> Vec<Word> {
        binary_words(&FORBIDDEN)
    }

    pub fn morphism_candidates() -> Vec<Morphism> {
        MORPHISM_CANDIDATES.iter().map(|t| Morphism::parse_compact(t).unwrap()).collect()
    }

    pub fn factor_candidates() -> Vec<Word> {
        binary_words(&FACTOR_CANDIDATES)
    }
}

/// Inputs for the length-6 unavoidability search (`verify thm3`).
pub mod thm3 {
    use super::*;

    /// The sixteen length-6 words driving backtrack rule R3.
    pub const RULE_WORDS: [&str; 16] = [
        "010101", "001100", "001001", "011011", "001010", "010100", "011101", "010001", "011100",
        "001110", "011000", "000110", "010111", "000101", "010110", "011010",
    ];

    pub fn rule_words() -> Vec<Word> {
        binary_words(&RULE_WORDS)
    }
}

/// Inputs for the 36-imaged-factor pipeline (`verify thm4`) and the matching
/// lower-bound search (`verify thm5`).
pub mod thm4 {
    use super::*;

    /// Shared prefix of all three 342-symbol images.
    pub const SHARED_PREFIX: &str =
        "000110000110001100011000011000110001100001100001100011000110000110001100011000011000";

    /// Images of the 342-uniform ternary-to-binary morphism.
    pub const IMAGES: [&str; 3] = [
        "00011000011000110001100001100011000110000110000110001100011000011000110001100001100011\
         00011000011000011000110001100001100011000110000110000110001100011000011000110001100001\
         10001100011000011000011000110001100001100011000110000110000110001100011000011000110001\
         100001100001100011000110000110000110001100011000011000110001100001100001100011000110",
        "00011000011000110001100001100011000110000110000110001100011000011000110001100001100001\
         10001100011000011000011000110001100001100011000110000110000110001100011000011000110001\
         10000110001100011000011000011000110001100001100011000110000110000110001100011000011000\
         110001100001100011000110000110000110001100011000011000110001100001100001100011000110",
        "00011000011000110001100001100011000110000110000110001100011000011000110001100001100001\
         10001100011000011000011000110001100001100011000110000110000110001100011000011000011000\
         11000110000110001100011000011000011000110001100001100011000110000110000110001100011000\
         011000110001100001100011000110000110000110001100011000011000110001100001100001100011",
    ];

    /// Factors that images of free ternary words never contain.
    pub const FORBIDDEN: [&str; 5] = ["010", "101", "111", "1001", "00000"];

    /// Factors shown non-imaged by the bounded candidate-image search.
    pub const NON_IMAGED: [&str; 7] =
        ["00011000", "0110001", "1000110", "1000011", "1100001", "0000110", "0110000"];

    /// The 36 words avoiding FORBIDDEN ∪ NON_IMAGED; every imaged factor of
    /// the morphic words lies in this set.
    pub const IMAGED_SET: [&str; 36] = [
        "", "0", "00", "000", "0000", "00001", "000011", "0001", "00011", "000110", "0001100",
        "001", "0011", "00110", "001100", "0011000", "01", "011", "0110", "01100", "011000", "1",
        "10", "100", "1000", "10000", "100001", "10001", "100011", "11", "110", "1100", "11000",
        "110000", "110001", "1100011",
    ];

    pub fn morphism() -> Morphism {
        Morphism::parse_compact(&IMAGES.join("/")).unwrap()
    }

    pub fn forbidden() -> Vec<Word> {
        binary_words(&FORBIDDEN)
    }

    pub fn non_imaged_candidates() -> Vec<Word> {
        binary_words(&NON_IMAGED)
    }

    /// FORBIDDEN ∪ NON_IMAGED, the full avoidance set.
    pub fn avoid_set() -> Vec<Word> {
        let mut out = forbidden();
        out.extend(non_imaged_candidates());
        out
    }

    pub fn imaged_set() -> Vec<Word> {
        IMAGED_SET.iter().map(|t| Word::parse_binary(t).unwrap()).collect()
    }
}
