//! Seeded random words with a planted full Abelian period.
//!
//! A word is built from one uniformly random base block of length `p`
//! followed by independent uniform shuffles of it, so `p` is a full Abelian
//! period by construction. The base block may omit letters when `p < sigma`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::qlfap::mix64;
use crate::word::Word;

/// Identifier of the generator, recorded in benchmark metadata.
pub const GENERATOR_ID: &str = "chacha8/rand_chacha-0.9/splitmix64-split";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GenSpec {
    pub n: usize,
    pub sigma: usize,
    pub planted_period: usize,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(n: usize, sigma: usize, planted_period: usize, seed: u64) -> Result<Self> {
        let spec = Self {
            n,
            sigma,
            planted_period,
            seed,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(2..=256).contains(&self.sigma) {
            return Err(Error::InvalidAlphabet(format!(
                "generator alphabet size {} outside 2..=256",
                self.sigma
            )));
        }
        if self.planted_period == 0 || self.planted_period > self.n {
            return Err(Error::InvalidPeriod {
                period: self.planted_period,
                n: self.n,
            });
        }
        if self.n % self.planted_period != 0 {
            return Err(Error::NotDivisible {
                divisor: self.planted_period,
                n: self.n,
            });
        }
        Ok(())
    }
}

/// Seed of the `index`-th independent stream derived from `base`.
pub fn split_seed(base: u64, index: u64) -> u64 {
    mix64(base ^ mix64(index.wrapping_add(1)))
}

pub fn generate(spec: &GenSpec) -> Result<Word> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let base: Vec<u8> = (0..spec.planted_period)
        .map(|_| rng.random_range(0..spec.sigma) as u8)
        .collect();
    shuffled_blocks(spec, base, rng)
}

/// Like [`generate`] with a caller-chosen base block (must have length
/// `planted_period` and codes below `sigma`).
pub fn generate_with_base(spec: &GenSpec, base: &[u8]) -> Result<Word> {
    spec.validate()?;
    if base.len() != spec.planted_period {
        return Err(Error::Precondition(format!(
            "base block has length {}, expected {}",
            base.len(),
            spec.planted_period
        )));
    }
    let rng = ChaCha8Rng::seed_from_u64(spec.seed);
    shuffled_blocks(spec, base.to_vec(), rng)
}

fn shuffled_blocks(spec: &GenSpec, mut block: Vec<u8>, mut rng: ChaCha8Rng) -> Result<Word> {
    let mut codes = Vec::with_capacity(spec.n);
    for _ in 0..spec.n / spec.planted_period {
        block.shuffle(&mut rng);
        codes.extend_from_slice(&block);
    }
    Word::from_codes(codes, spec.sigma)
}

/// `(a_1 a_2 ... a_sigma)^(n / sigma)`.
pub fn repeated_alphabet_word(sigma: usize, n: usize) -> Result<Word> {
    if sigma == 0 || sigma > 256 {
        return Err(Error::InvalidAlphabet(format!("size {sigma} outside 1..=256")));
    }
    if n % sigma != 0 {
        return Err(Error::NotDivisible { divisor: sigma, n });
    }
    let codes = (0..n).map(|i| (i % sigma) as u8).collect();
    Word::from_codes(codes, sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{full_abelian_periods_bruteforce, is_full_abelian_period};
    use crate::qlfap::full_abelian_periods_qlfap;
    use crate::word::Alphabet;

    #[test]
    fn planted_period_holds() {
        for seed in 0..200 {
            let spec = GenSpec::new(10, 2, 5, seed).unwrap();
            let w = generate(&spec).unwrap();
            assert_eq!(w.len(), 10);
            assert!(is_full_abelian_period(&w, 5).unwrap());
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let spec = GenSpec::new(400, 5, 20, 42).unwrap();
        assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());
        let other = GenSpec { seed: 43, ..spec };
        assert_ne!(generate(&spec).unwrap(), generate(&other).unwrap());
    }

    #[test]
    fn forced_base_blocks() {
        let spec = GenSpec::new(6, 6, 6, 9).unwrap();
        let w = generate_with_base(&spec, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert!(full_abelian_periods_bruteforce(&w).unwrap().contains(6));

        let spec = GenSpec::new(12, 3, 3, 1).unwrap();
        let w = generate_with_base(&spec, &[0, 1, 2]).unwrap();
        for block in w.codes().chunks(3) {
            let mut b = block.to_vec();
            b.sort_unstable();
            assert_eq!(b, vec![0, 1, 2]);
        }
        let periods = full_abelian_periods_bruteforce(&w).unwrap();
        for p in [3, 6, 12] {
            assert!(periods.contains(p));
        }
        assert!(generate_with_base(&spec, &[0, 1]).is_err());
    }

    #[test]
    fn invalid_specs() {
        assert!(matches!(
            GenSpec::new(10, 2, 3, 0),
            Err(Error::NotDivisible { divisor: 3, n: 10 })
        ));
        assert!(GenSpec::new(10, 1, 5, 0).is_err());
        assert!(GenSpec::new(10, 2, 0, 0).is_err());
        assert!(GenSpec::new(10, 2, 20, 0).is_err());
    }

    #[test]
    fn sparse_base_blocks_still_analyzable() {
        // sigma = 20 with p = 5 always omits letters
        for seed in 0..50 {
            let w = generate(&GenSpec::new(1000, 20, 5, seed).unwrap()).unwrap();
            assert!(full_abelian_periods_qlfap(&w).unwrap().contains(5));
        }
    }

    #[test]
    fn repeated_alphabet_examples() {
        let a = Alphabet::standard(3).unwrap();
        assert_eq!(repeated_alphabet_word(2, 6).unwrap().to_bytes(&Alphabet::standard(2).unwrap()).unwrap(), b"ababab");
        assert_eq!(repeated_alphabet_word(3, 12).unwrap().to_bytes(&a).unwrap(), b"abcabcabcabc");
        assert!(matches!(repeated_alphabet_word(3, 10), Err(Error::NotDivisible { .. })));
    }

    #[test]
    fn split_seeds_differ() {
        let seeds: std::collections::HashSet<u64> = (0..1000).map(|i| split_seed(7, i)).collect();
        assert_eq!(seeds.len(), 1000);
    }
}
