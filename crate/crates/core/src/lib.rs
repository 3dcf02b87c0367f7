//! Full Abelian periods of words.
//!
//! A word `w` of length `n` has full Abelian period `p` when `p | n` and the
//! `n / p` consecutive blocks of length `p` are all anagrams of each other.
//! This crate computes the set of such periods three ways:
//!
//! * [`qlfap`]: the scaled-factorization algorithm, `O(n log log n)`;
//! * [`lfap`]: the prefix-proportionality baseline, linear up to the gcd
//!   filter;
//! * [`oracle`]: brute force over the definition.
//!
//! [`wordgen`] produces seeded test words with planted periods and
//! [`bench`] times the algorithms against each other.
//!
//! ```
//! use abelian_core::{full_abelian_periods_qlfap, Word};
//!
//! let (w, _) = Word::from_bytes(b"abaababbbabaabbabbaaabbababbaa").unwrap();
//! assert_eq!(full_abelian_periods_qlfap(&w).unwrap().periods(), &[10, 30]);
//! ```

pub mod bench;
pub mod error;
pub mod lfap;
pub mod numtheory;
pub mod oracle;
pub mod parikh;
pub mod qlfap;
pub mod report;
pub mod scaled;
pub mod word;
pub mod wordgen;

pub use error::{Error, Result};
pub use lfap::full_abelian_periods_lfap;
pub use numtheory::{divisors_at_least, DivisorList};
pub use oracle::{full_abelian_periods_bruteforce, is_full_abelian_period};
pub use parikh::{gcd_of_vector, parikh_equal, parikh_vector, ParikhVector};
pub use qlfap::{analyze, full_abelian_periods_qlfap, smallest_full_abelian_period, Analysis, PeriodSet};
pub use scaled::{compute_l, irreducible_factorization, ScaledProfile};
pub use word::{Alphabet, Word};
pub use wordgen::{generate, repeated_alphabet_word, GenSpec};
