use thiserror::Error;

use crate::expr::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("point {point} lies outside the tabulated window [{lo}, {hi}]^{dim}")]
    WindowViolation {
        point: String,
        lo: i64,
        hi: i64,
        dim: usize,
    },

    #[error("multiplier #{index} is {value}; cyclic factorization needs positive multipliers")]
    NonpositiveMultiplier { index: usize, value: String },

    #[error("a difference word needs at least one letter")]
    EmptyWord,

    #[error("dimension must be at least 1")]
    ZeroDimension,

    #[error("the zero function has no finite functional degree")]
    ZeroFunction,

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
