//! Exhaustive and randomized cross-checks of the word-level operations
//! against independent brute-force oracles.

use proptest::prelude::*;

use imaged_core::{
    complement, enumerate_free, factor_set, find_repetition, imaged_in_finite, is_free,
    parse_as_image, ratio, Alphabet, Morphism, Ratio, Word,
};

fn all_words(alphabet: Alphabet, len: usize) -> Vec<Word> {
    let k = alphabet.size();
    let mut out = Vec::with_capacity(k.pow(len as u32));
    let mut symbols = vec![0u8; len];
    loop {
        out.push(Word::new(alphabet, symbols.clone()).unwrap());
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if symbols[i] + 1 < k as u8 {
                symbols[i] += 1;
                symbols[i + 1..].fill(0);
                break;
            }
        }
    }
}

/// Cubic repetition oracle: tries every (start, period) pair and extends the
/// match run directly.
fn brute_has_repetition(symbols: &[u8], beta: Ratio, min_period: usize) -> bool {
    let n = symbols.len();
    let (num, den) = (*beta.numer() as usize, *beta.denom() as usize);
    for start in 0..n {
        for period in min_period..n - start {
            let mut len = period;
            while start + len < n && symbols[start + len] == symbols[start + len - period] {
                len += 1;
            }
            if len > period && len * den > num * period {
                return true;
            }
        }
    }
    false
}

#[test]
fn find_repetition_matches_brute_force_on_binary_words() {
    let params =
        [(ratio(7, 4), 1), (ratio(7, 4), 2), (ratio(289, 148), 3), (ratio(15, 8), 1)];
    for len in 0..=14 {
        for w in all_words(Alphabet::BINARY, len) {
            for &(beta, n) in &params {
                let witness = find_repetition(&w, beta, n);
                assert_eq!(
                    witness.is_some(),
                    brute_has_repetition(w.symbols(), beta, n),
                    "disagreement on {w} at beta={beta}, n={n}"
                );
                if let Some(wit) = witness {
                    assert!(wit.holds_in(w.symbols()));
                    assert!(wit.period >= n);
                    // exactness: length*den > num*period in integers
                    assert!(
                        wit.length as i64 * beta.denom() > beta.numer() * wit.period as i64
                    );
                }
            }
        }
    }
}

#[test]
fn find_repetition_matches_brute_force_on_ternary_words() {
    let params = [(ratio(7, 4), 1), (ratio(3, 2), 1), (ratio(289, 148), 3)];
    for len in 0..=9 {
        for w in all_words(Alphabet::TERNARY, len) {
            for &(beta, n) in &params {
                assert_eq!(
                    find_repetition(&w, beta, n).is_some(),
                    brute_has_repetition(w.symbols(), beta, n),
                    "disagreement on {w} at beta={beta}, n={n}"
                );
            }
        }
    }
}

#[test]
fn freeness_is_complement_invariant() {
    let params = [(ratio(7, 4), 1), (ratio(289, 148), 3), (ratio(15, 8), 2)];
    for len in 0..=12 {
        for w in all_words(Alphabet::BINARY, len) {
            let c = complement(&w).unwrap();
            for &(beta, n) in &params {
                assert_eq!(is_free(&w, beta, n), is_free(&c, beta, n), "word {w}");
            }
        }
    }
}

#[test]
fn enumerate_free_equals_filtered_cube() {
    for alphabet in [Alphabet::BINARY, Alphabet::TERNARY] {
        for len in 0..=8 {
            let expected: Vec<Word> = all_words(alphabet, len)
                .into_iter()
                .filter(|w| is_free(w, ratio(7, 4), 1))
                .collect();
            assert_eq!(enumerate_free(alphabet, ratio(7, 4), len), expected);
        }
    }
}

#[test]
fn parse_as_image_is_complete_against_bounded_enumeration() {
    // independent oracle: apply every image pair with |m(0)|, |m(1)| <= 8
    // and bucket the results by (f, g); skipping pairs whose image length
    // can't be <= 10 only prunes impossible sizes
    use std::collections::{HashMap, HashSet};
    let mut fs: Vec<Word> = Vec::new();
    for len in 2..=5 {
        fs.extend(all_words(Alphabet::BINARY, len).into_iter().filter(Word::is_bi_literal));
    }
    let images: Vec<Vec<Word>> =
        (0..=8).map(|len| all_words(Alphabet::BINARY, len)).collect();

    for f in &fs {
        let n1 = f.symbols().iter().filter(|&&s| s == 1).count();
        let n0 = f.len() - n1;
        let mut expected: HashMap<Word, HashSet<String>> = HashMap::new();
        for a in 1..=8usize {
            for b in 1..=8usize {
                if n0 * a + n1 * b > 10 {
                    continue;
                }
                for m0 in &images[a] {
                    for m1 in &images[b] {
                        if (a, b) == (1, 1)
                            && m0.symbols() == [0]
                            && m1.symbols() == [1]
                        {
                            continue; // identity
                        }
                        let m = Morphism::binary(m0.symbols(), m1.symbols()).unwrap();
                        let g = m.apply(f).unwrap();
                        expected.entry(g).or_default().insert(m.to_string());
                    }
                }
            }
        }
        for g_len in 1..=10 {
            for g in all_words(Alphabet::BINARY, g_len) {
                // restrict both sides to the enumeration's image bound
                let got: HashSet<String> = parse_as_image(&g, f)
                    .unwrap()
                    .into_iter()
                    .filter(|m| m.image(0).len() <= 8 && m.image(1).len() <= 8)
                    .map(|m| m.to_string())
                    .collect();
                let want = expected.get(&g).cloned().unwrap_or_default();
                assert_eq!(got, want, "mismatch for f={f}, g={g}");
            }
        }
    }
}

#[test]
fn imaged_set_is_factor_closed_and_monotone() {
    use std::collections::{HashMap, HashSet};
    // certified bi-literal factor sets for every binary word of length <= 12
    let mut certified: HashMap<Word, HashSet<Word>> = HashMap::new();
    for len in 0..=12 {
        for w in all_words(Alphabet::BINARY, len) {
            let mut set = HashSet::new();
            for flen in 2..w.len() + 1 {
                for f in factor_set(&w, flen) {
                    if f.is_bi_literal() && imaged_in_finite(&f, &w).is_some() {
                        set.insert(f);
                    }
                }
            }
            certified.insert(w, set);
        }
    }
    for (w, set) in &certified {
        // factor closure: a witness for f restricts to every bi-literal
        // factor of f
        for f in set {
            for flen in 2..f.len() {
                for sub in factor_set(f, flen) {
                    if sub.is_bi_literal() {
                        assert!(set.contains(&sub), "{sub} missing from {w}");
                    }
                }
            }
        }
        // monotonicity under extension
        if w.len() < 12 {
            for x in 0..2u8 {
                let mut sym = w.symbols().to_vec();
                sym.push(x);
                let ext = Word::new(Alphabet::BINARY, sym).unwrap();
                assert!(set.is_subset(&certified[&ext]), "{w} -> {ext}");
            }
        }
    }
}

proptest! {
    #[test]
    fn apply_is_a_monoid_homomorphism(
        u in proptest::collection::vec(0u8..2, 0..10),
        v in proptest::collection::vec(0u8..2, 0..10),
        i0 in proptest::collection::vec(0u8..2, 1..4),
        i1 in proptest::collection::vec(0u8..2, 1..4),
    ) {
        let m = Morphism::binary(&i0, &i1).unwrap();
        let uw = Word::new(Alphabet::BINARY, u.clone()).unwrap();
        let vw = Word::new(Alphabet::BINARY, v.clone()).unwrap();
        let mut uv = u;
        uv.extend(v);
        let uvw = Word::new(Alphabet::BINARY, uv).unwrap();
        let mut concat = m.apply(&uw).unwrap().symbols().to_vec();
        concat.extend(m.apply(&vw).unwrap().symbols());
        let image = m.apply(&uvw).unwrap();
        prop_assert_eq!(image.symbols(), concat.as_slice());
    }

    #[test]
    fn repetition_witnesses_are_valid(w in proptest::collection::vec(0u8..2, 0..40)) {
        let word = Word::new(Alphabet::BINARY, w).unwrap();
        if let Some(wit) = find_repetition(&word, ratio(7, 4), 1) {
            prop_assert!(wit.holds_in(word.symbols()));
            prop_assert!(wit.exponent() > ratio(7, 4));
        }
    }

    #[test]
    fn parsed_morphisms_reapply_to_g(
        f in proptest::collection::vec(0u8..2, 2..6),
        g in proptest::collection::vec(0u8..2, 1..12),
    ) {
        let fw = Word::new(Alphabet::BINARY, f.clone()).unwrap();
        prop_assume!(fw.is_bi_literal());
        let gw = Word::new(Alphabet::BINARY, g).unwrap();
        for m in parse_as_image(&gw, &fw).unwrap() {
            prop_assert_eq!(m.apply(&fw).unwrap(), gw.clone());
            prop_assert!(m.classify().admissible);
            prop_assert!(!m.is_identity());
        }
    }
}
