use abelian_core::lfap::{
    candidate_set, candidate_set_float, candidate_set_streaming, full_abelian_periods_lfap_with,
    periods_from_candidates, CandidateMode, PrefixTable, FLOAT_TOLERANCE,
};
use abelian_core::wordgen::{generate, GenSpec};
use abelian_core::{
    analyze, full_abelian_periods_bruteforce, full_abelian_periods_lfap,
    full_abelian_periods_qlfap, Word,
};
use proptest::prelude::*;

fn word_strategy(max_sigma: usize, max_len: usize) -> impl Strategy<Value = Word> {
    (1..=max_sigma).prop_flat_map(move |sigma| {
        proptest::collection::vec(0..sigma as u8, 1..=max_len)
            .prop_map(move |codes| Word::from_codes(codes, sigma).unwrap())
    })
}

/// Words with a planted period, so that nontrivial periods actually occur.
fn planted_strategy() -> impl Strategy<Value = (Word, usize)> {
    (
        prop::sample::select(vec![2usize, 5, 10, 20]),
        1usize..=30,
        1usize..=40,
        any::<u64>(),
    )
        .prop_map(|(sigma, p, blocks, seed)| {
            let w = generate(&GenSpec::new(p * blocks, sigma, p, seed).unwrap()).unwrap();
            (w, p)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn algorithms_agree_on_arbitrary_words(w in word_strategy(6, 120)) {
        let oracle = full_abelian_periods_bruteforce(&w).unwrap();
        prop_assert_eq!(&full_abelian_periods_qlfap(&w).unwrap(), &oracle);
        prop_assert_eq!(&full_abelian_periods_lfap(&w).unwrap(), &oracle);
    }

    #[test]
    fn algorithms_agree_on_planted_words((w, p) in planted_strategy()) {
        let oracle = full_abelian_periods_bruteforce(&w).unwrap();
        prop_assert!(oracle.contains(p));
        prop_assert_eq!(&full_abelian_periods_qlfap(&w).unwrap(), &oracle);
        prop_assert_eq!(&full_abelian_periods_lfap(&w).unwrap(), &oracle);
    }

    #[test]
    fn candidate_modes_agree((w, _) in planted_strategy()) {
        let table = candidate_set(&w).unwrap();
        prop_assert_eq!(&table, &candidate_set_streaming(&w).unwrap());
        prop_assert_eq!(
            &table,
            &candidate_set_float(&PrefixTable::new(&w).unwrap(), FLOAT_TOLERANCE)
        );
        for mode in [CandidateMode::Streaming, CandidateMode::Float] {
            prop_assert_eq!(
                full_abelian_periods_lfap_with(&w, mode).unwrap(),
                periods_from_candidates(&table).unwrap()
            );
        }
    }

    /// For multiples of s, membership in A coincides with the prefix being
    /// scaled.
    #[test]
    fn candidates_match_scaled_prefixes((w, _) in planted_strategy()) {
        let a = analyze(&w).unwrap();
        prop_assume!(a.g > 1);
        let candidates = candidate_set(&w).unwrap();
        for i in (a.s..w.len()).step_by(a.s) {
            prop_assert_eq!(candidates.contains(i), a.profile.is_marked(i), "i = {}", i);
        }
        // proportional prefix lengths are always multiples of s
        for i in candidates.members() {
            prop_assert_eq!(i % a.s, 0);
        }
    }

    #[test]
    fn accepted_divisors_have_all_multiples_in_a((w, _) in planted_strategy()) {
        let candidates = candidate_set(&w).unwrap();
        let periods = periods_from_candidates(&candidates).unwrap();
        for &d in periods.periods() {
            for k in 1..=w.len() / d {
                prop_assert!(candidates.contains(k * d));
            }
        }
    }

    /// Shuffling letters inside each block of a period keeps that period.
    #[test]
    fn period_survives_blockwise_anagrams((w, _) in planted_strategy(), seed in any::<u64>()) {
        let periods = full_abelian_periods_qlfap(&w).unwrap();
        let mut state = seed | 1;
        for &p in periods.periods() {
            let mut codes = w.codes().to_vec();
            for block in codes.chunks_mut(p) {
                for i in (1..block.len()).rev() {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    block.swap(i, (state % (i as u64 + 1)) as usize);
                }
            }
            let shuffled = Word::from_codes(codes, w.sigma()).unwrap();
            prop_assert!(full_abelian_periods_qlfap(&shuffled).unwrap().contains(p));
        }
    }

    #[test]
    fn generation_is_deterministic(sigma in 2usize..=20, p in 1usize..=20, blocks in 1usize..=20, seed in any::<u64>()) {
        let spec = GenSpec::new(p * blocks, sigma, p, seed).unwrap();
        prop_assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());
    }
}

#[test]
fn exhaustive_ternary_words_up_to_nine() {
    for n in 1..=9u32 {
        for idx in 0..3usize.pow(n) {
            let mut x = idx;
            let codes: Vec<u8> = (0..n)
                .map(|_| {
                    let c = (x % 3) as u8;
                    x /= 3;
                    c
                })
                .collect();
            let w = Word::from_codes(codes, 3).unwrap();
            let oracle = full_abelian_periods_bruteforce(&w).unwrap();
            assert_eq!(full_abelian_periods_qlfap(&w).unwrap(), oracle, "{w:?}");
            assert_eq!(full_abelian_periods_lfap(&w).unwrap(), oracle, "{w:?}");
        }
    }
}

#[test]
fn large_alphabet_words() {
    // 256 letters, each used exactly twice in a mirrored layout
    let codes: Vec<u8> = (0..=255u8).chain((0..=255u8).rev()).collect();
    let w = Word::from_codes(codes, 256).unwrap();
    let expected = vec![256, 512];
    assert_eq!(full_abelian_periods_qlfap(&w).unwrap().into_vec(), expected);
    assert_eq!(full_abelian_periods_lfap(&w).unwrap().into_vec(), expected);
    assert_eq!(full_abelian_periods_bruteforce(&w).unwrap().into_vec(), expected);
}
