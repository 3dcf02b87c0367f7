//! Brute-force full Abelian periods, by direct block comparison.
//!
//! Shares nothing with the fast algorithms beyond [`Word`] and
//! [`ParikhVector`].

use crate::error::{Error, Result};
use crate::parikh::ParikhVector;
use crate::qlfap::PeriodSet;
use crate::word::Word;

/// Whether `p` divides `n` and all `n / p` blocks of length `p` are
/// anagrams of the first one.
pub fn is_full_abelian_period(w: &Word, p: usize) -> Result<bool> {
    let n = w.len();
    if p == 0 || p > n {
        return Err(Error::InvalidPeriod { period: p, n });
    }
    if n % p != 0 {
        return Ok(false);
    }
    let mut blocks = w.codes().chunks_exact(p);
    let first = ParikhVector::of_codes(blocks.next().expect("p <= n"), w.sigma());
    let mut remaining = first.counts().to_vec();
    for block in blocks {
        // a block of length p is an anagram of the first iff it never
        // exceeds the first block's count of any letter
        for &c in block {
            let slot = &mut remaining[c as usize];
            if *slot == 0 {
                return Ok(false);
            }
            *slot -= 1;
        }
        remaining.copy_from_slice(first.counts());
    }
    Ok(true)
}

/// Tests every `p` in `1..=n` against the definition.
pub fn full_abelian_periods_bruteforce(w: &Word) -> Result<PeriodSet> {
    w.require_nonempty()?;
    let n = w.len();
    let mut periods = Vec::new();
    for p in 1..=n {
        if n % p == 0 && is_full_abelian_period(w, p)? {
            periods.push(p);
        }
    }
    Ok(PeriodSet::new(periods))
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE_WORD: &[u8] = b"abaababbbabaabbabbaaabbababbaa";

    fn word(bytes: &[u8]) -> Word {
        Word::from_bytes(bytes).unwrap().0
    }

    #[test]
    fn single_period_examples() {
        let w = word(EXAMPLE_WORD);
        assert!(is_full_abelian_period(&w, 10).unwrap());
        assert!(!is_full_abelian_period(&w, 6).unwrap());
        assert!(!is_full_abelian_period(&w, 7).unwrap());
        assert!(is_full_abelian_period(&w, 30).unwrap());
        assert!(matches!(
            is_full_abelian_period(&w, 0),
            Err(Error::InvalidPeriod { period: 0, n: 30 })
        ));
        assert!(is_full_abelian_period(&w, 31).is_err());
    }

    #[test]
    fn period_set_examples() {
        let p = |b: &[u8]| full_abelian_periods_bruteforce(&word(b)).unwrap().into_vec();
        assert_eq!(p(EXAMPLE_WORD), vec![10, 30]);
        assert_eq!(p(b"abababab"), vec![2, 4, 8]);
        assert_eq!(p(b"ab"), vec![2]);
        assert_eq!(p(b"abaababa"), vec![8]);
        assert_eq!(p(&b"abc".repeat(4)), vec![3, 6, 12]);
    }

    #[test]
    fn monotone_blockability_on_ternary_words() {
        for n in 1..=8usize {
            for idx in 0..3usize.pow(n as u32) {
                let mut x = idx;
                let codes: Vec<u8> = (0..n)
                    .map(|_| {
                        let c = (x % 3) as u8;
                        x /= 3;
                        c
                    })
                    .collect();
                let w = Word::from_codes(codes, 3).unwrap();
                let periods = full_abelian_periods_bruteforce(&w).unwrap();
                assert!(periods.contains(n));
                for &p in periods.periods() {
                    for q in (p..=n).step_by(p).filter(|q| n % q == 0) {
                        assert!(periods.contains(q), "{w:?}: {p} in result but {q} missing");
                    }
                }
            }
        }
    }

    #[test]
    fn empty_word_is_an_error() {
        let w = Word::from_codes(vec![], 1).unwrap();
        assert!(matches!(full_abelian_periods_bruteforce(&w), Err(Error::EmptyWord)));
    }
}
