use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the period algorithms and the benchmark harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("word is empty")]
    EmptyWord,

    #[error("Parikh vector has no nonzero entry")]
    ZeroVector,

    #[error("divisor enumeration requires a positive integer")]
    ZeroModulus,

    #[error("Parikh vectors have different dimensions ({left} vs {right})")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("byte {byte:#04x} at position {position} is not in the alphabet")]
    ForeignByte { byte: u8, position: usize },

    #[error("code {code} at position {position} is out of range for an alphabet of size {sigma}")]
    CodeOutOfRange { code: u8, position: usize, sigma: usize },

    #[error("period {period} is not valid for a word of length {n}")]
    InvalidPeriod { period: usize, n: usize },

    #[error("{divisor} does not divide {n}")]
    NotDivisible { divisor: usize, n: usize },

    #[error("word of length {n} exceeds the supported maximum {max}")]
    TooLong { n: usize, max: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("prefix length {requested} exceeds the available {available} bytes")]
    PrefixTooLong { requested: usize, available: usize },

    #[error(
        "algorithms disagree on sigma={sigma} n={n} trial={trial} seed={seed:#018x}: {detail}"
    )]
    ChecksumDivergence {
        sigma: usize,
        n: usize,
        trial: usize,
        seed: u64,
        detail: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
