//! Randomized soundness and completeness checks for the factor oracle, plus
//! the freeness spot-checks that back the transfer verdicts.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use imaged_core::{
    data, derive_sf, find_repetition, is_free, ratio, Alphabet, FactorOracle, Word,
};

/// Random (7/4)⁺-free ternary word of the requested length, by randomized
/// backtracking.
fn random_free_word(rng: &mut StdRng, len: usize) -> Word {
    'restart: loop {
        let mut symbols: Vec<u8> = Vec::with_capacity(len);
        while symbols.len() < len {
            let mut order = [0u8, 1, 2];
            for i in (1..3).rev() {
                order.swap(i, rng.random_range(0..=i));
            }
            let mut extended = false;
            for &s in &order {
                symbols.push(s);
                let w = Word::new(Alphabet::TERNARY, symbols.clone()).unwrap();
                if is_free(&w, ratio(7, 4), 1) {
                    extended = true;
                    break;
                }
                symbols.pop();
            }
            if !extended {
                continue 'restart;
            }
        }
        return Word::new(Alphabet::TERNARY, symbols).unwrap();
    }
}

#[test]
fn oracle_accepts_every_factor_of_random_images_and_reconstructs_witnesses() {
    let m = data::thm2::morphism();
    let oracle = FactorOracle::build(&m, ratio(7, 4), 300).unwrap();
    assert_eq!(oracle.window(), 10);
    let mut rng = StdRng::seed_from_u64(0x0ac1e5);

    for _ in 0..500 {
        let y = random_free_word(&mut rng, 10);
        let image = m.apply(&y).unwrap();
        let symbols = image.symbols();
        // soundness of the window: every factor up to the cap is accepted
        for start in 0..symbols.len() {
            let mut end = start;
            while end < symbols.len() && end - start < 300 {
                end += 1;
                let v = Word::new(Alphabet::BINARY, symbols[start..end].to_vec()).unwrap();
                assert!(oracle.is_factor(&v).unwrap(), "missing factor {v}");
            }
        }
        // completeness: accepted queries come with a constructible pre-image
        for _ in 0..20 {
            let start = rng.random_range(0..symbols.len());
            let max_len = (symbols.len() - start).min(300);
            let len = rng.random_range(1..=max_len);
            let v = Word::new(Alphabet::BINARY, symbols[start..start + len].to_vec()).unwrap();
            let (pre, offset) = oracle.witness_pre_image(&v).unwrap().expect("factor accepted");
            let witness_image = m.apply(&pre).unwrap();
            assert_eq!(&witness_image.symbols()[offset..offset + v.len()], v.symbols());
        }
    }
}

#[test]
fn oracle_membership_is_monotone_under_factor() {
    let oracle = FactorOracle::build(&data::thm2::morphism(), ratio(7, 4), 40).unwrap();
    for len in [7, 12, 20] {
        for v in oracle.factors_of_length(len).unwrap() {
            for sub_len in [1, len / 2, len - 1] {
                for start in [0, len - sub_len] {
                    let sub = Word::new(
                        Alphabet::BINARY,
                        v.symbols()[start..start + sub_len].to_vec(),
                    )
                    .unwrap();
                    assert!(oracle.is_factor(&sub).unwrap());
                }
            }
        }
    }
}

#[test]
fn transfer_verdict_spot_checked_on_long_random_pre_images() {
    // the premise enumeration stops below length 20; images of much longer
    // free words must still be free, per the transfer conclusion
    let m = data::thm2::morphism();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..200 {
        let y = random_free_word(&mut rng, 30);
        let image = m.apply(&y).unwrap();
        assert_eq!(find_repetition(&image, ratio(289, 148), 3), None, "pre-image {y}");
    }
}

#[test]
fn wide_morphism_transfer_spot_check() {
    let m = data::thm4::morphism();
    let mut rng = StdRng::seed_from_u64(0x317de);
    for _ in 0..20 {
        let y = random_free_word(&mut rng, 10);
        let image = m.apply(&y).unwrap();
        assert_eq!(find_repetition(&image, ratio(1321, 684), 245), None, "pre-image {y}");
    }
}

#[test]
fn squares_whitelist_reduction() {
    // roots of period <= 2 are exactly {0, 1, 01, 10}; together with the
    // transfer verdict (periods >= 3 have exponent below 2) this yields the
    // full square whitelist
    let oracle = FactorOracle::build(&data::thm2::morphism(), ratio(7, 4), 16).unwrap();
    let inv = oracle.square_roots(2).unwrap();
    let texts: Vec<String> = inv.roots().iter().map(|w| w.to_string()).collect();
    assert_eq!(texts, ["0", "1", "01", "10"]);
    let report =
        imaged_core::verify_transfer(&data::thm2::morphism(), ratio(7, 4), ratio(289, 148), 3)
            .unwrap();
    assert!(report.pass);
}

#[test]
fn no_length_eight_factor_extends_an_imaged_length_seven_one() {
    // closure at the next length: the surviving candidate morphisms map
    // every length-8 factor outside the language as well
    let oracle = FactorOracle::build(&data::thm2::morphism(), ratio(7, 4), 32).unwrap();
    let sf = derive_sf(&oracle).unwrap();
    assert_eq!(sf.len(), 12);
    let candidates = data::thm2::morphism_candidates();
    for f in oracle.factors_of_length(8).unwrap() {
        for m in &candidates {
            let image = m.apply(&f).unwrap();
            assert!(
                !oracle.is_factor(&image).unwrap(),
                "length-8 factor {f} imaged by {m}"
            );
        }
    }
}

#[test]
fn derived_factor_candidates_match_bundled_data() {
    let oracle = FactorOracle::build(&data::thm2::morphism(), ratio(7, 4), 16).unwrap();
    assert_eq!(derive_sf(&oracle).unwrap(), data::thm2::factor_candidates());
}
