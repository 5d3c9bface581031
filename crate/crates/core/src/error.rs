use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("inexact division: {dividend} is not a multiple of {divisor}")]
    InexactDivision { dividend: String, divisor: String },

    #[error("cannot substitute 0 for {variable}: exponent {exponent} is negative")]
    NegativeExponentAtZero { variable: String, exponent: i64 },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("{operation}: n = {n} exceeds the bound {max}")]
    BoundExceeded {
        operation: &'static str,
        n: usize,
        max: usize,
    },

    #[error("tournament {0} is not transitive")]
    NotTransitive(String),

    #[error(
        "connected minor of size {size} at row {row}, column {column} has zero lambda-determinant"
    )]
    ZeroMinor {
        row: usize,
        column: usize,
        size: usize,
    },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid tournament: {0}")]
    InvalidTournament(String),

    #[error("matrix format: {0}")]
    MatrixFormat(String),
}

/// Fails with [`Error::BoundExceeded`] when `n > max`.
pub(crate) fn check_bound(operation: &'static str, n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::BoundExceeded { operation, n, max })
    } else {
        Ok(())
    }
}
