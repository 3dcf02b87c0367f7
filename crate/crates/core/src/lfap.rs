//! Linear-time baseline for full Abelian periods, built on prefix
//! proportionality.
//!
//! Prefix lengths `i` and `j` are proportional when their Parikh vectors are
//! scalar multiples of each other. With `A = {i : i ~ n}`, the full Abelian
//! periods are the divisors `d` of `n` whose multiples `d, 2d, ..., n` all
//! lie in `A`. Instead of the scalar-normalized vectors and the diff
//! representation of the original formulation, proportionality is tested
//! exactly by cross-multiplication, and the divisor filter uses an ordinary
//! Euclidean gcd per rejected position (`O(|X| log n)` rather than `O(n)`
//! after constant-time gcd preprocessing).
//!
//! Memory: the materialized [`PrefixTable`] holds `(n + 1) * sigma` 32-bit
//! counts plus one byte per position for `A`; [`candidate_set_streaming`]
//! keeps only `sigma` running counts.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::numtheory::{divisors, gcd};
use crate::parikh::{parikh_vector, ParikhVector};
use crate::qlfap::PeriodSet;
use crate::word::Word;

/// Longest word accepted; keeps `count * n` products inside 64 bits.
pub const MAX_LEN: usize = 1 << 30;

/// Parikh vectors of every prefix of a word.
#[derive(Clone, Debug)]
pub struct PrefixTable {
    sigma: usize,
    n: usize,
    // row i holds the counts of w[0..i], i in 0..=n
    rows: Vec<u32>,
    total: ParikhVector,
    occurring: Vec<usize>,
    ell: usize,
    q0: usize,
}

impl PrefixTable {
    pub fn new(w: &Word) -> Result<Self> {
        w.require_nonempty()?;
        check_len(w.len())?;
        let sigma = w.sigma();
        let n = w.len();
        let mut rows = vec![0u32; (n + 1) * sigma];
        for (i, &c) in w.codes().iter().enumerate() {
            let (prev, next) = rows[i * sigma..(i + 2) * sigma].split_at_mut(sigma);
            next.copy_from_slice(prev);
            next[c as usize] += 1;
        }
        let total = parikh_vector(w);
        let occurring: Vec<usize> = (0..sigma).filter(|&k| total.counts()[k] > 0).collect();
        let ell = *occurring
            .iter()
            .min_by_key(|&&k| total.counts()[k])
            .expect("nonempty word has an occurring letter");
        let q0 = w
            .codes()
            .iter()
            .position(|&c| c as usize == ell)
            .expect("least frequent letter occurs")
            + 1;
        Ok(Self {
            sigma,
            n,
            rows,
            total,
            occurring,
            ell,
            q0,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }

    /// Counts of the first `i` letters.
    pub fn prefix(&self, i: usize) -> &[u32] {
        &self.rows[i * self.sigma..(i + 1) * self.sigma]
    }

    pub fn total(&self) -> &ParikhVector {
        &self.total
    }

    /// Rank of a least frequent occurring letter (smallest rank on ties).
    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Length of the shortest prefix containing letter [`ell`](Self::ell).
    pub fn q0(&self) -> usize {
        self.q0
    }
}

fn check_len(n: usize) -> Result<()> {
    if n > MAX_LEN {
        Err(Error::TooLong { n, max: MAX_LEN })
    } else {
        Ok(())
    }
}

#[inline]
fn proportional(prefix: impl Fn(usize) -> u64, total: &[u64], occurring: &[usize], i: u64, n: u64) -> bool {
    occurring.iter().all(|&k| prefix(k) * n == total[k] * i)
}

/// `i ~ n`: the prefix of length `i` has counts proportional to the whole
/// word's. `i` must lie in `1..=n`.
pub fn is_proportional_to_n(table: &PrefixTable, i: usize) -> bool {
    assert!(i >= 1 && i <= table.n, "prefix length {i} outside 1..={}", table.n);
    let row = table.prefix(i);
    proportional(
        |k| row[k] as u64,
        table.total.counts(),
        &table.occurring,
        i as u64,
        table.n as u64,
    )
}

/// `A[i]` for prefix lengths `1..=n`; index 0 is unused and always false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateSet {
    flags: Vec<bool>,
}

impl CandidateSet {
    pub fn contains(&self, i: usize) -> bool {
        self.flags.get(i).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.flags.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Prefix lengths in `A`, ascending.
    pub fn members(&self) -> Vec<usize> {
        (1..self.flags.len()).filter(|&i| self.flags[i]).collect()
    }

    /// Prefix lengths not in `A`.
    pub fn rejected(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.flags.len()).filter(move |&i| !self.flags[i])
    }
}

pub fn candidate_set(w: &Word) -> Result<CandidateSet> {
    Ok(candidate_set_from_table(&PrefixTable::new(w)?))
}

pub fn candidate_set_from_table(table: &PrefixTable) -> CandidateSet {
    let mut flags = vec![false; table.n + 1];
    for (i, flag) in flags.iter_mut().enumerate().skip(1) {
        *flag = is_proportional_to_n(table, i);
    }
    CandidateSet { flags }
}

/// Same set as [`candidate_set`], keeping only `sigma` running counts.
pub fn candidate_set_streaming(w: &Word) -> Result<CandidateSet> {
    w.require_nonempty()?;
    check_len(w.len())?;
    let n = w.len();
    let total = parikh_vector(w);
    let occurring: Vec<usize> = (0..w.sigma()).filter(|&k| total.counts()[k] > 0).collect();
    let mut running = vec![0u64; w.sigma()];
    let mut flags = vec![false; n + 1];
    for (idx, &c) in w.codes().iter().enumerate() {
        running[c as usize] += 1;
        let i = idx + 1;
        flags[i] = proportional(|k| running[k], total.counts(), &occurring, i as u64, n as u64);
    }
    Ok(CandidateSet { flags })
}

/// Diagnostic variant comparing `gamma_i = P_i / P_i[ell]` against
/// `gamma_n` in floating point with absolute tolerance `tol`. Prefixes
/// shorter than `q0` are never proportional.
pub fn candidate_set_float(table: &PrefixTable, tol: f64) -> CandidateSet {
    let n = table.n;
    let gamma = |i: usize| -> Vec<f64> {
        let row = table.prefix(i);
        let denom = row[table.ell] as f64;
        table.occurring.iter().map(|&k| row[k] as f64 / denom).collect()
    };
    let gamma_n = gamma(n);
    let mut flags = vec![false; n + 1];
    for (i, flag) in flags.iter_mut().enumerate().skip(table.q0) {
        *flag = gamma(i)
            .iter()
            .zip(&gamma_n)
            .all(|(a, b)| (b - a).abs() <= tol);
    }
    CandidateSet { flags }
}

/// Default tolerance of the floating-point diagnostic.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

/// How the candidate set is computed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CandidateMode {
    #[default]
    Table,
    Streaming,
    Float,
}

pub fn full_abelian_periods_lfap(w: &Word) -> Result<PeriodSet> {
    full_abelian_periods_lfap_with(w, CandidateMode::Table)
}

pub fn full_abelian_periods_lfap_with(w: &Word, mode: CandidateMode) -> Result<PeriodSet> {
    w.require_nonempty()?;
    let candidates = match mode {
        CandidateMode::Table => candidate_set(w)?,
        CandidateMode::Streaming => candidate_set_streaming(w)?,
        CandidateMode::Float => candidate_set_float(&PrefixTable::new(w)?, FLOAT_TOLERANCE),
    };
    periods_from_candidates(&candidates)
}

/// `B = {d | n : no rejected position is a multiple of d}`, via the set of
/// gcds of rejected positions with `n`.
pub fn periods_from_candidates(candidates: &CandidateSet) -> Result<PeriodSet> {
    let n = candidates.len();
    let blocked: BTreeSet<usize> = candidates
        .rejected()
        .map(|x| gcd(x as u64, n as u64) as usize)
        .collect();
    let periods = divisors(n as u64)?
        .iter()
        .map(|d| d as usize)
        .filter(|&d| blocked.iter().all(|&b| b % d != 0))
        .collect();
    Ok(PeriodSet::new(periods))
}
