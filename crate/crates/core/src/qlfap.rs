//! Quasi-linear computation of all full Abelian periods.
//!
//! A full Abelian period `p` of a word of length `n` divides `n` and splits
//! the word into `n / p` blocks that are anagrams of each other. Every such
//! `p` is a multiple `d * s` of `s = n / g` with `d | g`, is at least `s * T`,
//! and is accepted exactly when every multiple `k * p < n` starts a scaled
//! suffix. Scanning those multiples for each divisor costs `O(n log log n)`
//! overall.

use std::fmt;

use crate::error::Result;
use crate::numtheory::{divisors, divisors_at_least};
use crate::parikh::{parikh_vector, ParikhVector};
use crate::scaled::{compute_l_counted, ScaledProfile, ScanCounter};
use crate::word::Word;

/// Sorted set of full Abelian periods of a word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PeriodSet(Vec<usize>);

impl PeriodSet {
    /// Sorts and deduplicates.
    pub fn new(mut periods: Vec<usize>) -> Self {
        periods.sort_unstable();
        periods.dedup();
        Self(periods)
    }

    pub fn periods(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn contains(&self, p: usize) -> bool {
        self.0.binary_search(&p).is_ok()
    }

    pub fn smallest(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Order-independent 64-bit digest, used to compare results across
    /// algorithms without storing them.
    pub fn checksum(&self) -> u64 {
        self.0
            .iter()
            .fold(0u64, |acc, &p| acc.wrapping_add(mix64(p as u64)))
    }
}

impl fmt::Display for PeriodSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// SplitMix64 finalizer.
pub(crate) fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Quantities derived from a word before the period search.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub n: usize,
    pub parikh: ParikhVector,
    /// Letters that actually occur.
    pub sigma_effective: usize,
    pub g: usize,
    pub s: usize,
    pub profile: ScaledProfile,
    pub counter: ScanCounter,
}

impl Analysis {
    pub fn threshold(&self) -> usize {
        self.profile.threshold()
    }
}

/// Computes `P_w`, `g`, `s` and the scaled profile. When the counts are
/// coprime the profile is the trivial one-factor profile.
pub fn analyze(w: &Word) -> Result<Analysis> {
    w.require_nonempty()?;
    let n = w.len();
    let parikh = parikh_vector(w);
    let g = parikh.gcd()? as usize;
    let s = n / g;
    let (profile, counter) = if g > 1 {
        compute_l_counted(w, s, g, &parikh)?
    } else {
        (ScaledProfile::whole(n), ScanCounter::default())
    };
    Ok(Analysis {
        n,
        sigma_effective: parikh.occurring(),
        parikh,
        g,
        s,
        profile,
        counter,
    })
}

/// Work counters for one run of [`full_abelian_periods_qlfap_counted`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct QlfapStats {
    pub compute_l: ScanCounter,
    /// `L` lookups made while testing multiples of candidate periods.
    pub multiple_scans: usize,
    /// `sum over d | g of g / d`, the number of multiples a full scan of
    /// every divisor would visit.
    pub scan_bound: usize,
}

pub fn full_abelian_periods_qlfap(w: &Word) -> Result<PeriodSet> {
    full_abelian_periods_qlfap_counted(w).map(|(periods, _)| periods)
}

pub fn full_abelian_periods_qlfap_counted(w: &Word) -> Result<(PeriodSet, QlfapStats)> {
    w.require_nonempty()?;
    let n = w.len();
    let parikh = parikh_vector(w);
    let g = parikh.gcd()? as usize;
    let s = n / g;
    let mut stats = QlfapStats::default();

    if parikh.occurring() == 1 {
        let all = divisors(n as u64)?.iter().map(|d| d as usize).collect();
        return Ok((PeriodSet(all), stats));
    }
    if g == 1 {
        return Ok((PeriodSet(vec![n]), stats));
    }

    let (profile, counter) = compute_l_counted(w, s, g, &parikh)?;
    stats.compute_l = counter;
    stats.scan_bound = divisors(g as u64)?.iter().map(|d| g / d as usize).sum();

    let mut periods = Vec::new();
    for d in divisors_at_least(g as u64, profile.threshold() as u64)?.iter() {
        let d = d as usize;
        if d >= g {
            break;
        }
        let p = d * s;
        let mut pos = p;
        while pos < n {
            stats.multiple_scans += 1;
            if !profile.is_marked(pos) {
                break;
            }
            pos += p;
        }
        if pos >= n {
            periods.push(p);
        }
    }
    periods.push(n);
    Ok((PeriodSet(periods), stats))
}

pub fn smallest_full_abelian_period(w: &Word) -> Result<usize> {
    let periods = full_abelian_periods_qlfap(w)?;
    Ok(periods.smallest().expect("n is always a period"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    const EXAMPLE_WORD: &[u8] = b"abaababbbabaabbabbaaabbababbaa";

    fn periods(bytes: &[u8]) -> Vec<usize> {
        let (w, _) = Word::from_bytes(bytes).unwrap();
        full_abelian_periods_qlfap(&w).unwrap().into_vec()
    }

    #[test]
    fn examples() {
        assert_eq!(periods(EXAMPLE_WORD), vec![10, 30]);
        assert_eq!(periods(b"abaababa"), vec![8]);
        assert_eq!(periods(&b"abc".repeat(4)), vec![3, 6, 12]);
        assert_eq!(periods(b"aaaa"), vec![1, 2, 4]);
        assert_eq!(periods(b"ab"), vec![2]);
    }

    #[test]
    fn smallest_examples() {
        let smallest = |b: &[u8]| smallest_full_abelian_period(&Word::from_bytes(b).unwrap().0).unwrap();
        assert_eq!(smallest(EXAMPLE_WORD), 10);
        assert_eq!(smallest(b"abab"), 2);
        assert_eq!(smallest(&b"abc".repeat(4)), 3);
    }

    #[test]
    fn empty_word_is_an_error() {
        let w = Word::from_codes(vec![], 2).unwrap();
        assert!(matches!(full_abelian_periods_qlfap(&w), Err(Error::EmptyWord)));
        assert!(matches!(analyze(&w), Err(Error::EmptyWord)));
    }

    #[test]
    fn worked_example_scan_counts() {
        let (w, _) = Word::from_bytes(EXAMPLE_WORD).unwrap();
        let (_, stats) = full_abelian_periods_qlfap_counted(&w).unwrap();
        // T = 3 excludes d = 1; d = 3 stops at position 6; d = 5 reads 10 and 20
        assert_eq!(stats.multiple_scans, 1 + 2);
        assert_eq!(stats.scan_bound, 15 + 5 + 3 + 1);
    }

    #[test]
    fn analysis_of_worked_example() {
        let (w, _) = Word::from_bytes(EXAMPLE_WORD).unwrap();
        let a = analyze(&w).unwrap();
        assert_eq!((a.n, a.g, a.s, a.threshold()), (30, 15, 2, 3));
        assert_eq!(a.parikh.counts(), &[15, 15]);
    }

    #[test]
    fn checksum_ignores_construction_order() {
        let a = PeriodSet::new(vec![30, 10]);
        let b = PeriodSet::new(vec![10, 30, 10]);
        assert_eq!(a, b);
        assert_eq!(a.checksum(), b.checksum());
        assert_ne!(a.checksum(), PeriodSet::new(vec![30]).checksum());
        assert_eq!(a.to_string(), "10,30");
    }
}
