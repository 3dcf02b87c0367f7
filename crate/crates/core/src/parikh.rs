//! Parikh vectors: per-letter occurrence counts.

use std::ops::Add;

use crate::error::{Error, Result};
use crate::numtheory::gcd;
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParikhVector {
    counts: Vec<u64>,
}

impl ParikhVector {
    pub fn zero(sigma: usize) -> Self {
        Self {
            counts: vec![0; sigma],
        }
    }

    pub fn from_counts(counts: Vec<u64>) -> Self {
        Self { counts }
    }

    /// Counts every letter of `w`; the dimension is the word's alphabet size.
    pub fn of(w: &Word) -> Self {
        Self::of_codes(w.codes(), w.sigma())
    }

    pub(crate) fn of_codes(codes: &[u8], sigma: usize) -> Self {
        let mut counts = vec![0u64; sigma];
        for &c in codes {
            counts[c as usize] += 1;
        }
        Self { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn sigma(&self) -> usize {
        self.counts.len()
    }

    pub fn norm(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Number of letters with a nonzero count.
    pub fn occurring(&self) -> usize {
        self.counts.iter().filter(|&&c| c > 0).count()
    }

    /// Gcd of the nonzero counts. Absent letters do not take part.
    pub fn gcd(&self) -> Result<u64> {
        gcd_of_vector(self)
    }

    /// Componentwise equality; vectors of different dimension are an error
    /// rather than simply unequal.
    pub fn parikh_equal(&self, other: &Self) -> Result<bool> {
        if self.sigma() != other.sigma() {
            return Err(Error::DimensionMismatch {
                left: self.sigma(),
                right: other.sigma(),
            });
        }
        Ok(self.counts == other.counts)
    }
}

impl Add for &ParikhVector {
    type Output = ParikhVector;

    /// # Panics
    /// If the dimensions differ.
    fn add(self, rhs: Self) -> ParikhVector {
        assert_eq!(self.sigma(), rhs.sigma(), "dimension mismatch");
        ParikhVector {
            counts: self
                .counts
                .iter()
                .zip(&rhs.counts)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

pub fn parikh_vector(w: &Word) -> ParikhVector {
    ParikhVector::of(w)
}

/// Gcd of the nonzero entries of `p`.
pub fn gcd_of_vector(p: &ParikhVector) -> Result<u64> {
    p.counts
        .iter()
        .filter(|&&c| c > 0)
        .copied()
        .reduce(gcd)
        .ok_or(Error::ZeroVector)
}

pub fn parikh_equal(p: &ParikhVector, q: &ParikhVector) -> Result<bool> {
    p.parikh_equal(q)
}
