//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by validation, enumeration guards, and exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,

    #[error("part must be a positive integer, got `{0}`")]
    NonPositivePart(String),

    #[error("malformed token `{0}`")]
    MalformedToken(String),

    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("r[{index}] = {value} outside [0, {part}]")]
    RangeViolation { index: usize, value: i64, part: u32 },

    #[error("r-vector violates the ideal condition at index {index}: r[{index}] = {value} not in [{lo}, {hi}]")]
    NotAnIdeal {
        index: usize,
        value: u32,
        lo: u32,
        hi: u32,
    },

    #[error("generator ({r}, {k}) lies outside the poset of this partition")]
    ForeignPoint { r: u32, k: u32 },

    #[error("ideals belong to different partitions")]
    PartitionMismatch,

    #[error("first ideal is not contained in the second")]
    NotSubideal,

    #[error("the empty ideal has no boundary")]
    EmptyIdeal,

    #[error("negative exponent {0} survived expansion")]
    NegativeExponentResidue(i64),

    #[error("polynomial quotient by p^{divisor_exp} leaves a nonzero remainder")]
    InexactDivision { divisor_exp: u64 },

    #[error("{what} {value} exceeds bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: u128,
        bound: u128,
    },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("element shape does not match the homomorphism source")]
    ShapeMismatch,

    #[error("prime mismatch: {0} vs {1}")]
    PrimeMismatch(u64, u64),
}

pub type Result<T> = std::result::Result<T, Error>;
