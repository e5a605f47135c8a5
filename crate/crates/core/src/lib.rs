//! Core library of the imaged-factor verification toolkit.
//!
//! A factor f of a word w is *imaged* when some admissible morphism m (non-
//! erasing, distinct from the identity) maps it onto another factor of w.
//! This crate provides the word/morphism machinery, the factor oracle for
//! morphic word families, the imaged-factor decision procedures, and the
//! exhaustive searches behind four verification pipelines:
//!
//! * `thm2` — binary words avoiding every imaged factor of length 7 exist;
//! * `thm3` — imaged factors of length 6 are unavoidable;
//! * `thm4` — binary words with at most 36 imaged factors exist;
//! * `thm5` — every infinite binary word has at least 36 imaged factors.

pub mod data;
pub mod enumerate;
pub mod error;
pub mod imaged;
pub mod morphism;
pub mod oracle;
pub mod rational;
pub mod repetition;
pub mod report;
pub mod search;
pub mod theorems;
pub mod transfer;
pub mod words;

pub use enumerate::{enumerate_avoiding, enumerate_free};
pub use error::{Error, Result};
pub use imaged::{derive_sf, imaged_in_finite, imaged_in_oracle, parse_as_image, ImagedWitness};
pub use morphism::{Morphism, MorphismClass};
pub use oracle::{FactorOracle, SquareInventory};
pub use rational::{parse_ratio, ratio, Ratio};
pub use repetition::{find_repetition, is_free, RepetitionWitness};
pub use report::{StageReport, TheoremReport};
pub use search::{
    max_word_without_big_squares, thm3_search, thm5_search, RuleSet, SearchConfig, SearchOutcome,
    SearchReport,
};
pub use theorems::{verify_thm2, verify_thm4};
pub use transfer::{sync_bound, verify_transfer, TransferCounterexample, TransferReport};
pub use words::{complement, factor_set, Alphabet, Word};
