//! Error type shared by all kernel operations.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero: denominator is not a unit")]
    DivisionByZero,
    #[error("element is not a unit")]
    NonUnit,
    #[error("flatness violation: {0}")]
    FlatnessViolation(String),
    #[error("denominator vanishes under substitution: {0}")]
    DenominatorVanishes(String),
    #[error("one-form is not exact")]
    NotExact,
    #[error("one-form is not exact within ansatz degree cap {0}")]
    NotExactUpToCap(usize),
    #[error("wedge sum has a nonzero base part")]
    NotInfinitesimal,
    #[error("lift correction must be homogeneous of degree 2 or 3")]
    InvalidCorrectionDegree,
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("consistent cover data required for this operation")]
    ConsistentDataRequired,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
