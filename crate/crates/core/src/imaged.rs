//! Imaged-factor decision procedures.
//!
//! A factor f of w is imaged when some admissible morphism m maps it to a
//! factor of w. Three rules decide it: the empty word is always imaged, a
//! factor using only one letter is always imaged (for every infinite binary
//! extension), and a bi-literal factor needs a morphic witness found by
//! parsing candidate factors g as images m(f).

use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::oracle::{FactorOracle, SquareInventory};
use crate::words::{contains_slice, Word};

/// How a factor was certified imaged.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    EmptyWordRule,
    UnaryRule,
    Morphic,
}

/// Where the witnessing image occurs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ImageLocation {
    /// Offset of m(f) inside the examined finite word.
    InWord { start: usize },
    /// The examined language: m(f) occurs in the image of this pre-image
    /// word at this offset.
    InOracle { pre_image: Word, offset: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImagedWitness {
    pub factor: Word,
    pub kind: WitnessKind,
    pub morphism: Option<Morphism>,
    pub location: Option<ImageLocation>,
}

/// All binary-to-binary morphisms m with non-empty images, distinct from the
/// identity, such that m(f) = g. Solves n0*|m(0)| + n1*|m(1)| = |g| over
/// positive integers (n0, n1 the letter counts of f) and checks slice
/// consistency. Ordered by |m(0)| ascending.
///
/// f must contain both letters; unary and empty factors are covered by the
/// rules in `imaged_in_finite` instead.
pub fn parse_as_image(g: &Word, f: &Word) -> Result<Vec<Morphism>> {
    if !f.is_bi_literal() {
        return Err(Error::NotBiLiteral);
    }
    if g.is_empty() {
        return Err(Error::EmptyInput("image candidate"));
    }
    let mut out = Vec::new();
    for_each_split(f.symbols(), g.symbols().len(), |a, b| {
        if let Some((m0, m1)) = split_images(f.symbols(), g.symbols(), a, b) {
            out.push(Morphism::binary(m0, m1).unwrap());
        }
    });
    Ok(out)
}

/// Enumerates positive solutions (a, b) of n0*a + n1*b = target_len.
fn for_each_split(f: &[u8], target_len: usize, mut visit: impl FnMut(usize, usize)) {
    let n1 = f.iter().filter(|&&s| s == 1).count();
    let n0 = f.len() - n1;
    debug_assert!(n0 >= 1 && n1 >= 1);
    let mut a = 1;
    while n0 * a + n1 <= target_len {
        let rest = target_len - n0 * a;
        if rest % n1 == 0 {
            visit(a, rest / n1);
        }
        a += 1;
    }
}

/// Slices g according to (|m(0)|, |m(1)|) = (a, b) along the letters of f;
/// returns the images when all slices agree and the morphism is not the
/// identity.
pub(crate) fn split_images<'g>(
    f: &[u8],
    g: &'g [u8],
    a: usize,
    b: usize,
) -> Option<(&'g [u8], &'g [u8])> {
    debug_assert_eq!(f.iter().map(|&s| if s == 0 { a } else { b }).sum::<usize>(), g.len());
    let mut m0: Option<&[u8]> = None;
    let mut m1: Option<&[u8]> = None;
    let mut pos = 0;
    for &s in f {
        let len = if s == 0 { a } else { b };
        let slice = &g[pos..pos + len];
        let slot = if s == 0 { &mut m0 } else { &mut m1 };
        match slot {
            Some(prev) => {
                if *prev != slice {
                    return None;
                }
            }
            None => *slot = Some(slice),
        }
        pos += len;
    }
    let (m0, m1) = (m0.unwrap(), m1.unwrap());
    if m0 == [0] && m1 == [1] {
        return None; // identity
    }
    Some((m0, m1))
}

/// Decides whether `f` is imaged inside the finite binary word `w`.
///
/// ε and unary factors are always counted imaged: for any infinite binary
/// extension either the extension has both letters (so a one-letter factor
/// misses one) or it is unary and 0↦00 works. Bi-literal factors need an
/// occurrence of m(f) inside `w` itself.
pub fn imaged_in_finite(f: &Word, w: &Word) -> Option<ImagedWitness> {
    if f.is_empty() {
        return Some(ImagedWitness {
            factor: f.clone(),
            kind: WitnessKind::EmptyWordRule,
            morphism: None,
            location: None,
        });
    }
    if f.is_unary() {
        return Some(ImagedWitness {
            factor: f.clone(),
            kind: WitnessKind::UnaryRule,
            morphism: None,
            location: None,
        });
    }
    debug_assert!(contains_slice(w.symbols(), f.symbols()), "f must be a factor of w");
    let symbols = w.symbols();
    // scan factors g by start, then by end, returning the first witness
    for start in 0..symbols.len() {
        for end in start + 1..=symbols.len() {
            let g = Word::new(w.alphabet(), symbols[start..end].to_vec()).unwrap();
            let morphisms = parse_as_image(&g, f).unwrap();
            if let Some(m) = morphisms.into_iter().next() {
                return Some(ImagedWitness {
                    factor: f.clone(),
                    kind: WitnessKind::Morphic,
                    morphism: Some(m),
                    location: Some(ImageLocation::InWord { start }),
                });
            }
        }
    }
    None
}

/// Decides whether `f` is imaged in the oracle language, drawing candidate
/// images from the square inventory: `f` must contain both 00 and 11, so
/// m(0)m(0) and m(1)m(1) are factors and both images are square roots.
///
/// Candidates are walked through the oracle index with shared prefixes
/// pruned; the answer equals the exhaustive scan over all candidate pairs.
pub fn imaged_in_oracle(
    f: &Word,
    oracle: &FactorOracle,
    inventory: &SquareInventory,
) -> Result<Option<ImagedWitness>> {
    if !contains_slice(f.symbols(), &[0, 0]) || !contains_slice(f.symbols(), &[1, 1]) {
        return Err(Error::MissingAnchorSquares);
    }
    let n1 = f.symbols().iter().filter(|&&s| s == 1).count();
    let n0 = f.len() - n1;
    let max_root = inventory.max_root_len();
    let worst = n0 * max_root + n1 * max_root;
    if worst > oracle.max_len() {
        return Err(Error::QueryTooLong { len: worst, max_len: oracle.max_len() });
    }

    // run-length encode f: images are consumed in maximal blocks per letter
    let mut segments: Vec<(u8, usize)> = Vec::new();
    for &s in f.symbols() {
        match segments.last_mut() {
            Some((sym, count)) if *sym == s => *count += 1,
            _ => segments.push((s, 1)),
        }
    }
    let first_letter = segments[0].0;

    let roots = inventory.roots();
    for outer in roots {
        // walk the leading segment once per outer candidate
        let mut state = Some(oracle.sam_root());
        for _ in 0..segments[0].1 {
            state = state.and_then(|s| oracle.sam_walk(s, outer.symbols()));
        }
        let Some(after_first) = state else { continue };
        for inner in roots {
            let (img0, img1) = if first_letter == 0 { (outer, inner) } else { (inner, outer) };
            if img0.symbols() == [0] && img1.symbols() == [1] {
                continue; // identity
            }
            let mut state = Some(after_first);
            'walk: for &(sym, count) in &segments[1..] {
                let img = if sym == first_letter { outer } else { inner };
                for _ in 0..count {
                    state = state.and_then(|s| oracle.sam_walk(s, img.symbols()));
                    if state.is_none() {
                        break 'walk;
                    }
                }
            }
            if state.is_some() {
                let m = Morphism::binary(img0.symbols(), img1.symbols()).unwrap();
                let image = m.apply(f)?;
                let location = oracle
                    .witness_pre_image(&image)?
                    .map(|(pre_image, offset)| ImageLocation::InOracle { pre_image, offset });
                return Ok(Some(ImagedWitness {
                    factor: f.clone(),
                    kind: WitnessKind::Morphic,
                    morphism: Some(m),
                    location,
                }));
            }
        }
    }
    Ok(None)
}

/// The length-7 factors of the oracle language that contain both 00 and 11
/// but neither 0101 nor 1010, sorted.
pub fn derive_sf(oracle: &FactorOracle) -> Result<Vec<Word>> {
    let factors = oracle.factors_of_length(7)?;
    Ok(factors
        .into_iter()
        .filter(|f| {
            let s = f.symbols();
            contains_slice(s, &[0, 0])
                && contains_slice(s, &[1, 1])
                && !contains_slice(s, &[0, 1, 0, 1])
                && !contains_slice(s, &[1, 0, 1, 0])
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(s: &str) -> Word {
        Word::parse_binary(s).unwrap()
    }

    fn compact(m: &Morphism) -> String {
        m.to_string()
    }

    #[test]
    fn doubling_parse_identity() {
        let ms = parse_as_image(&bw("11000011"), &bw("100001")).unwrap();
        let specs: Vec<String> = ms.iter().map(compact).collect();
        assert!(specs.contains(&"0/11".to_string()), "{specs:?}");
    }

    #[test]
    fn all_splits_of_a_short_image() {
        let ms = parse_as_image(&bw("0110"), &bw("01")).unwrap();
        let specs: Vec<String> = ms.iter().map(compact).collect();
        assert_eq!(specs, vec!["0/110", "01/10", "011/0"]);
    }

    #[test]
    fn identity_parse_is_excluded() {
        assert_eq!(parse_as_image(&bw("01"), &bw("01")).unwrap(), Vec::<Morphism>::new());
    }

    #[test]
    fn unary_factor_rejected() {
        assert_eq!(parse_as_image(&bw("000"), &bw("00")), Err(Error::NotBiLiteral));
        assert_eq!(parse_as_image(&bw(""), &bw("01")), Err(Error::EmptyInput("image candidate")));
    }

    #[test]
    fn empty_and_unary_rules() {
        let w = bw("01");
        let eps = imaged_in_finite(&bw(""), &w).unwrap();
        assert_eq!(eps.kind, WitnessKind::EmptyWordRule);
        let unary = imaged_in_finite(&bw("0"), &w).unwrap();
        assert_eq!(unary.kind, WitnessKind::UnaryRule);
    }

    #[test]
    fn morphic_witness_in_finite_word() {
        // m = 00/11 maps 01 onto 0011, a factor of 010011
        let w = bw("010011");
        let witness = imaged_in_finite(&bw("01"), &w).unwrap();
        assert_eq!(witness.kind, WitnessKind::Morphic);
        let m = witness.morphism.unwrap();
        let image = m.apply(&bw("01")).unwrap();
        assert!(contains_slice(w.symbols(), image.symbols()));
        assert!(m.classify().admissible);
    }

    #[test]
    fn complementary_morphism_is_a_legal_witness() {
        // the complementary morphism is admissible, so 10 = m(01) counts
        let ms = parse_as_image(&bw("10"), &bw("01")).unwrap();
        assert!(ms.iter().any(|m| m.classify().complementary));
        assert!(imaged_in_finite(&bw("01"), &bw("010")).is_some());
        assert!(imaged_in_finite(&bw("10"), &bw("010")).is_some());
    }

    #[test]
    fn no_witness_when_only_the_identity_parses() {
        assert_eq!(imaged_in_finite(&bw("01"), &bw("01")), None);
        assert_eq!(imaged_in_finite(&bw("0011"), &bw("0011")), None);
    }
}
