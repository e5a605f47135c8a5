//! Freeness transfer for synchronizing uniform morphisms.
//!
//! For a synchronizing q-uniform morphism h and exponents 1 < α < β < 2, if
//! h(w) is (β⁺,n)-free for every α⁺-free word w with
//! |w| < max(2β/(β-α), 2(q-1)(2β-1)/(q(β-1))), then h(t) is (β⁺,n)-free for
//! every finite or infinite α⁺-free t. `verify_transfer` checks that premise
//! exhaustively, so a passing report licenses the unbounded conclusion.

use num_traits::One;
use rayon::prelude::*;

use crate::enumerate::walk_free_tree;
use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::rational::Ratio;
use crate::repetition::{find_repetition_in, RepetitionWitness};
use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferReport {
    pub pass: bool,
    pub bound: Ratio,
    pub words_checked: u64,
    pub counterexample: Option<TransferCounterexample>,
}

/// A pre-image whose image contains a forbidden repetition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferCounterexample {
    pub pre_image: Word,
    pub witness: RepetitionWitness,
}

/// The exact rational length bound max(2β/(β-α), 2(q-1)(2β-1)/(q(β-1))).
pub fn sync_bound(alpha: Ratio, beta: Ratio, width: usize) -> Result<Ratio> {
    let one = Ratio::one();
    let two = Ratio::from_integer(2);
    if !(one < alpha && alpha < beta && beta < two) || width < 1 {
        return Err(Error::BadExponentDomain);
    }
    let q = Ratio::from_integer(width as i64);
    let first = two * beta / (beta - alpha);
    let second = two * (q - one) * (two * beta - one) / (q * (beta - one));
    Ok(first.max(second))
}

/// Checks the transfer premise for `m`: enumerates every α⁺-free source word
/// of length strictly below the bound and scans each image for a repetition
/// with period >= `min_period` and exponent > β.
///
/// Uniformity and block alignment are validated here rather than trusted;
/// both are cheap next to the enumeration and easy to violate silently when
/// entering image data by hand. Flush image occurrences with a mismatched
/// boundary letter always reject the morphism. Interior (straddling)
/// occurrences are tolerated only when they provably cannot create a
/// forbidden repetition: no straddle's right context may equal another
/// straddle's left context at the same offset (so shifted alignments cannot
/// chain across two consecutive blocks), and every period such a straddle
/// could induce must either stay below `min_period` or be short enough that
/// the premise enumeration already covers the repetition. A strictly
/// synchronizing morphism has no straddles and passes the gate vacuously.
pub fn verify_transfer(
    m: &Morphism,
    alpha: Ratio,
    beta: Ratio,
    min_period: usize,
) -> Result<TransferReport> {
    let width = m.uniform_width().ok_or(Error::NotUniform)?;
    let scan = m.scan_synchronization()?;
    if !scan.flush_mismatches.is_empty() {
        return Err(Error::NotSynchronizing);
    }
    if min_period < 1 {
        return Err(Error::BadExponentDomain);
    }
    let bound = sync_bound(alpha, beta, width)?;

    // largest length with len < bound, by exact comparison
    let mut max_len = bound.floor().to_integer() as usize;
    if Ratio::from_integer(max_len as i64) == bound {
        max_len -= 1;
    }

    if !straddles_are_harmless(&scan.straddles, beta, min_period, width, max_len) {
        return Err(Error::NotSynchronizing);
    }

    // Images of prefixes are prefixes of images, so a repetition in any
    // enumerated image also occurs in the image of a leaf extension; scanning
    // leaves covers every word while wordsChecked still counts them all.
    let mut words_checked = 0u64;
    let mut leaves: Vec<Word> = Vec::new();
    walk_free_tree(
        m.source(),
        alpha,
        1,
        max_len,
        &mut |_| words_checked += 1,
        &mut |w| leaves.push(Word::new(m.source(), w.to_vec()).unwrap()),
    );

    let counterexample = leaves
        .par_iter()
        .enumerate()
        .filter_map(|(idx, pre)| {
            let image = m.apply(pre).expect("enumerated word is over the source alphabet");
            find_repetition_in(image.symbols(), beta, min_period)
                .map(|witness| (idx, TransferCounterexample { pre_image: pre.clone(), witness }))
        })
        .min_by_key(|(idx, _)| *idx)
        .map(|(_, ce)| ce);

    Ok(TransferReport { pass: counterexample.is_none(), bound, words_checked, counterexample })
}

/// Gate for interior image occurrences.
///
/// A repetition of period p in an image word aligns full blocks with their
/// translates at distance p. When p is not a multiple of q, each translate
/// is an interior occurrence at offset p mod q, so consecutive blocks force
/// two straddles whose contexts chain (the right letter of one is the left
/// letter of the next). If no two straddles chain, any repetition of such a
/// period is shorter than p + 3q, and with exponent above β that bounds p;
/// the remaining candidates must fit inside enumerated windows.
fn straddles_are_harmless(
    straddles: &[crate::morphism::SyncOccurrence],
    beta: Ratio,
    min_period: usize,
    width: usize,
    max_len: usize,
) -> bool {
    let num = *beta.numer() as u64;
    let den = *beta.denom() as u64;
    let mut offsets: Vec<usize> = straddles.iter().map(|s| s.offset).collect();
    offsets.sort_unstable();
    offsets.dedup();
    for &offset in &offsets {
        let group: Vec<_> = straddles.iter().filter(|s| s.offset == offset).collect();
        for s in &group {
            if group.iter().any(|t| t.left == s.right) {
                return false; // straddles can chain
            }
        }
        // feasible periods: p ≡ offset (mod q), p >= min_period, and a
        // repetition with exponent > β shorter than p + 3q exists only if
        // (β-1)·p < 3q
        let mut p = offset;
        while (num - den) * (p as u64) < den * 3 * width as u64 {
            if p >= min_period {
                let window = (p + 3 * width).div_ceil(width) + 1;
                if window > max_len {
                    return false;
                }
            }
            p += width;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn bound_examples_evaluate_exactly() {
        assert_eq!(sync_bound(ratio(7, 4), ratio(289, 148), 37).unwrap(), ratio(289, 15));
        assert_eq!(sync_bound(ratio(7, 4), ratio(1321, 684), 342).unwrap(), ratio(1321, 62));
        // the second term vanishes at q = 1
        assert_eq!(sync_bound(ratio(3, 2), ratio(7, 4), 1).unwrap(), ratio(14, 1));
    }

    #[test]
    fn bound_rejects_bad_domains() {
        assert_eq!(sync_bound(ratio(7, 4), ratio(7, 4), 5), Err(Error::BadExponentDomain));
        assert_eq!(sync_bound(ratio(7, 4), ratio(3, 2), 5), Err(Error::BadExponentDomain));
        assert_eq!(sync_bound(ratio(1, 1), ratio(3, 2), 5), Err(Error::BadExponentDomain));
        assert_eq!(sync_bound(ratio(3, 2), ratio(2, 1), 5), Err(Error::BadExponentDomain));
    }

    #[test]
    fn constant_images_fail_the_synchronization_gate() {
        let m = Morphism::parse_compact("00/00/00").unwrap();
        assert_eq!(
            verify_transfer(&m, ratio(3, 2), ratio(7, 4), 1),
            Err(Error::NotSynchronizing)
        );
    }

    #[test]
    fn non_uniform_morphism_rejected() {
        let m = Morphism::parse_compact("0/01").unwrap();
        assert_eq!(verify_transfer(&m, ratio(3, 2), ratio(7, 4), 1), Err(Error::NotUniform));
    }

    #[test]
    fn failing_premise_produces_a_counterexample() {
        // 011/010 is synchronizing and 3-uniform, but image(0) already
        // contains the square 11, so the premise fails for beta = 8/5.
        let m = Morphism::parse_compact("011/010").unwrap();
        assert!(m.is_synchronizing().unwrap());
        let report = verify_transfer(&m, ratio(3, 2), ratio(8, 5), 1).unwrap();
        assert!(!report.pass);
        let ce = report.counterexample.unwrap();
        let image = m.apply(&ce.pre_image).unwrap();
        assert!(ce.witness.holds_in(image.symbols()));
        assert!(ce.witness.exponent() > ratio(8, 5));
    }
}
