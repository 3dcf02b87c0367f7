//! Gcd and divisor enumeration.

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Strictly increasing divisors of some integer, all at least a lower bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorList(Vec<u64>);

impl DivisorList {
    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }
}

/// All divisors `d >= lower` of `m` in increasing order, by trial division
/// up to `sqrt(m)`.
pub fn divisors_at_least(m: u64, lower: u64) -> Result<DivisorList> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            small.push(d);
            if d * d != m {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small.retain(|&d| d >= lower);
    Ok(DivisorList(small))
}

pub fn divisors(m: u64) -> Result<DivisorList> {
    divisors_at_least(m, 1)
}
