//! Error type for precondition violations on user-supplied parameters.
//!
//! Internal inconsistencies (a composed formula evaluating to a non-integer,
//! for instance) are bugs, not user errors, and panic instead.

use std::fmt;

/// Errors raised by constructors and queries on invalid parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Spacings and atom moduli must be at least 1.
    InvalidSpacing(u64),
    /// Power-sum and expansion exponents must be at least 1.
    InvalidExponent(u64),
    /// The Fibonacci-base power form of a double index is only defined for
    /// odd spacing.
    EvenSpacingForFibPowers(u64),
    /// A value query was issued without an upper summation bound.
    MissingBound,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidSpacing(m) => write!(f, "spacing must be >= 1, got {m}"),
            Error::InvalidExponent(j) => write!(f, "exponent must be >= 1, got {j}"),
            Error::EvenSpacingForFibPowers(m) => write!(
                f,
                "powers of a Fibonacci base require odd spacing, got {m}"
            ),
            Error::MissingBound => write!(f, "value query requires an upper bound n"),
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
