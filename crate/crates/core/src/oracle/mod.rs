//! Factor membership for the union language: factors of images of all
//! α⁺-free source words under a fixed uniform morphism, up to a query cap.
//!
//! A factor of length at most `max_len` of any image spans at most
//! `ceil(max_len/q) + 1` consecutive image blocks, and the spanned pre-image
//! window is itself α⁺-free. Indexing the images of every maximal free word
//! of length at most that window therefore answers membership exactly, for
//! finite and infinite pre-images alike.

mod sam;

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::rational::Ratio;
use crate::words::{complement_slice, contains_slice, Alphabet, Word};
use num_traits::One;
use sam::{Sam, NONE};

const SEPARATOR: u8 = 3;

pub struct FactorOracle {
    morphism: Morphism,
    alpha: Ratio,
    max_len: usize,
    window: usize,
    pre_images: Vec<Word>,
    images: Vec<Vec<u8>>,
    block_starts: Vec<usize>,
    sam: Sam,
}

/// Roots of the squares uu occurring in the oracle language, sorted by
/// (length, content).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareInventory {
    roots: Vec<Word>,
    max_period: usize,
}

impl SquareInventory {
    pub fn roots(&self) -> &[Word] {
        &self.roots
    }

    pub fn max_period(&self) -> usize {
        self.max_period
    }

    pub fn roots_of_length(&self, len: usize) -> Vec<&Word> {
        self.roots.iter().filter(|w| w.len() == len).collect()
    }

    pub fn max_root_len(&self) -> usize {
        self.roots.iter().map(Word::len).max().unwrap_or(0)
    }
}

impl FactorOracle {
    /// Indexes every factor of length <= `max_len` of images of α⁺-free
    /// words under `m`.
    pub fn build(m: &Morphism, alpha: Ratio, max_len: usize) -> Result<FactorOracle> {
        let q = m.uniform_width().ok_or(Error::NotUniform)?;
        if !(Ratio::one() < alpha && alpha < Ratio::from_integer(2)) {
            return Err(Error::BadExponentDomain);
        }
        let window = max_len.div_ceil(q) + 1;

        // Maximal free words cover every shorter one as a prefix, so their
        // images cover every window image.
        let mut pre_images: Vec<Word> = Vec::new();
        crate::enumerate::walk_free_tree(
            m.source(),
            alpha,
            1,
            window,
            &mut |_| {},
            &mut |w| pre_images.push(Word::new(m.source(), w.to_vec()).unwrap()),
        );
        if pre_images.is_empty() {
            return Err(Error::EmptyInput("window enumeration"));
        }

        let images: Vec<Vec<u8>> =
            pre_images.iter().map(|y| m.apply(y).unwrap().symbols().to_vec()).collect();

        let mut sequence = Vec::with_capacity(images.iter().map(|i| i.len() + 1).sum());
        let mut block_starts = Vec::with_capacity(images.len());
        for img in &images {
            block_starts.push(sequence.len());
            sequence.extend_from_slice(img);
            sequence.push(SEPARATOR);
        }
        let sam = Sam::build(&sequence);

        Ok(FactorOracle {
            morphism: m.clone(),
            alpha,
            max_len,
            window,
            pre_images,
            images,
            block_starts,
            sam,
        })
    }

    pub fn morphism(&self) -> &Morphism {
        &self.morphism
    }

    pub fn alpha(&self) -> Ratio {
        self.alpha
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn window(&self) -> usize {
        self.window
    }

    /// The deduplicated pre-image words whose images are indexed.
    pub fn window_pre_images(&self) -> &[Word] {
        &self.pre_images
    }

    fn check_query(&self, v: &[u8]) -> Result<()> {
        if v.len() > self.max_len {
            return Err(Error::QueryTooLong { len: v.len(), max_len: self.max_len });
        }
        let target = self.morphism.target();
        for &s in v {
            if !target.contains(s) {
                return Err(Error::SymbolOutOfRange { symbol: s, size: target.size() });
            }
        }
        Ok(())
    }

    /// Exact membership for queries up to the cap; longer queries are
    /// rejected rather than silently approximated.
    pub fn is_factor(&self, v: &Word) -> Result<bool> {
        self.check_query(v.symbols())?;
        Ok(self.sam.contains(v.symbols()))
    }

    pub(crate) fn is_factor_slice(&self, v: &[u8]) -> bool {
        debug_assert!(v.len() <= self.max_len);
        self.sam.contains(v)
    }

    pub(crate) fn sam_root(&self) -> u32 {
        0
    }

    pub(crate) fn sam_step(&self, state: u32, symbol: u8) -> Option<u32> {
        let s = self.sam.step(state, symbol);
        (s != NONE).then_some(s)
    }

    pub(crate) fn sam_walk(&self, state: u32, word: &[u8]) -> Option<u32> {
        let s = self.sam.walk(state, word);
        (s != NONE).then_some(s)
    }

    /// A pre-image word whose image contains `v`, with the offset of one
    /// occurrence, or `None` when `v` is not a factor.
    pub fn witness_pre_image(&self, v: &Word) -> Result<Option<(Word, usize)>> {
        self.check_query(v.symbols())?;
        let state = self.sam.walk(0, v.symbols());
        if state == NONE {
            return Ok(None);
        }
        let end = self.sam.states[state as usize].first_end as usize;
        let start = end + 1 - v.len().max(1); // ε: report block 0, offset 0
        let block = match self.block_starts.binary_search(&start) {
            Ok(k) => k,
            Err(k) => k - 1,
        };
        Ok(Some((self.pre_images[block].clone(), start - self.block_starts[block])))
    }

    /// The exact factor set of the union language at one length, sorted.
    pub fn factors_of_length(&self, len: usize) -> Result<Vec<Word>> {
        if len > self.max_len {
            return Err(Error::QueryTooLong { len, max_len: self.max_len });
        }
        let target = self.morphism.target();
        let mut out = Vec::new();
        let mut path = Vec::with_capacity(len);
        self.factors_rec(0, len, target, &mut path, &mut out);
        Ok(out)
    }

    fn factors_rec(&self, state: u32, left: usize, target: Alphabet, path: &mut Vec<u8>, out: &mut Vec<Word>) {
        if left == 0 {
            out.push(Word::new(target, path.clone()).unwrap());
            return;
        }
        for s in target.symbols() {
            if let Some(next) = self.sam_step(state, s) {
                path.push(s);
                self.factors_rec(next, left - 1, target, path, out);
                path.pop();
            }
        }
    }

    /// All words u with 1 <= |u| <= max_period and uu in the language.
    pub fn square_roots(&self, max_period: usize) -> Result<SquareInventory> {
        if 2 * max_period > self.max_len {
            return Err(Error::QueryTooLong { len: 2 * max_period, max_len: self.max_len });
        }
        let target = self.morphism.target();
        let mut seen: HashSet<&[u8]> = HashSet::new();
        for img in &self.images {
            let n = img.len();
            for p in 1..=max_period.min(n / 2) {
                // run[i] = matched length of img[i..] against img[i+p..];
                // a square of period p starts at i iff run[i] >= p
                let mut run = 0usize;
                for i in (0..n - p).rev() {
                    run = if img[i] == img[i + p] { (run + 1).min(p) } else { 0 };
                    if run >= p {
                        seen.insert(&img[i..i + p]);
                    }
                }
            }
        }
        let mut roots: Vec<Word> =
            seen.into_iter().map(|s| Word::new(target, s.to_vec()).unwrap()).collect();
        roots.sort_by(|a, b| (a.len(), a.symbols()).cmp(&(b.len(), b.symbols())));
        Ok(SquareInventory { roots, max_period })
    }

    /// Passes iff no element of `forbidden` is a factor; otherwise the first
    /// offender in the given order.
    pub fn check_avoids(&self, forbidden: &[Word]) -> Result<Option<Word>> {
        for f in forbidden {
            if self.is_factor(f)? {
                return Ok(Some(f.clone()));
            }
        }
        Ok(None)
    }

    /// Passes iff no length-`len` factor occurs together with its bitwise
    /// complement; otherwise the lexicographically first such factor.
    pub fn check_no_complement_pairs(&self, len: usize) -> Result<Option<Word>> {
        if self.morphism.target() != Alphabet::BINARY {
            return Err(Error::NonBinaryAlphabet);
        }
        let factors = self.factors_of_length(len)?;
        let set: HashSet<&[u8]> = factors.iter().map(Word::symbols).collect();
        for f in &factors {
            if set.contains(complement_slice(f.symbols()).as_slice()) {
                return Ok(Some(f.clone()));
            }
        }
        Ok(None)
    }

    /// Passes iff every length-`len` factor satisfies at least one clause of
    /// `requirement` (a disjunction of must-contain-all conjunctions);
    /// otherwise the first uncovered factor.
    pub fn check_length_cover(&self, len: usize, requirement: &[Vec<Word>]) -> Result<Option<Word>> {
        let factors = self.factors_of_length(len)?;
        for f in &factors {
            let covered = requirement.iter().any(|clause| {
                clause.iter().all(|needle| contains_slice(f.symbols(), needle.symbols()))
            });
            if !covered {
                return Ok(Some(f.clone()));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data;
    use crate::rational::ratio;

    fn thm2_oracle(max_len: usize) -> FactorOracle {
        FactorOracle::build(&data::thm2::morphism(), ratio(7, 4), max_len).unwrap()
    }

    fn bw(s: &str) -> Word {
        Word::parse_binary(s).unwrap()
    }

    #[test]
    fn zero_cap_oracle_accepts_only_epsilon() {
        let o = thm2_oracle(0);
        assert!(o.is_factor(&bw("")).unwrap());
        assert_eq!(
            o.is_factor(&bw("0")),
            Err(Error::QueryTooLong { len: 1, max_len: 0 })
        );
        assert_eq!(o.factors_of_length(0).unwrap(), vec![bw("")]);
    }

    #[test]
    fn image_prefix_is_a_factor_and_forbidden_words_are_not() {
        let o = thm2_oracle(16);
        assert!(o.is_factor(&bw("0001110101")).unwrap());
        assert!(!o.is_factor(&bw("0010")).unwrap());
        assert!(o.is_factor(&bw("00")).unwrap());
    }

    #[test]
    fn length_one_factors_are_both_letters() {
        let o = thm2_oracle(8);
        assert_eq!(o.factors_of_length(1).unwrap(), vec![bw("0"), bw("1")]);
    }

    #[test]
    fn small_square_roots_match_the_whitelist() {
        let o = thm2_oracle(8);
        let inv = o.square_roots(2).unwrap();
        assert_eq!(inv.roots(), &[bw("0"), bw("1"), bw("01"), bw("10")]);
        assert_eq!(inv.max_root_len(), 2);
    }

    #[test]
    fn complement_pair_witnesses_at_small_lengths() {
        let o = thm2_oracle(8);
        // both letters occur
        assert_eq!(o.check_no_complement_pairs(1).unwrap(), Some(bw("0")));
        // 00 and 11 both occur
        assert_eq!(o.check_no_complement_pairs(2).unwrap(), Some(bw("00")));
    }

    #[test]
    fn cover_check_reports_uncovered_factor() {
        let o = thm2_oracle(8);
        let req = vec![vec![bw("00")], vec![bw("11")]];
        assert_eq!(o.check_length_cover(2, &req).unwrap(), Some(bw("01")));
        // every length-4 factor contains 0 (1111 is not a factor)
        assert_eq!(o.check_length_cover(4, &[vec![bw("0")]]).unwrap(), None);
    }

    #[test]
    fn avoid_check_reports_first_offender() {
        let o = thm2_oracle(8);
        assert_eq!(o.check_avoids(&[bw("00")]).unwrap(), Some(bw("00")));
        assert_eq!(o.check_avoids(&data::thm2::forbidden()).unwrap(), None);
    }

    #[test]
    fn witness_pre_image_reconstructs_an_occurrence() {
        let o = thm2_oracle(16);
        let v = bw("0011000111");
        if o.is_factor(&v).unwrap() {
            let (pre, offset) = o.witness_pre_image(&v).unwrap().unwrap();
            let image = o.morphism().apply(&pre).unwrap();
            assert_eq!(&image.symbols()[offset..offset + v.len()], v.symbols());
        }
        assert_eq!(o.witness_pre_image(&bw("0010")).unwrap(), None);
    }
}
