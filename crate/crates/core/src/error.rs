use thiserror::Error;

/// Errors raised by the exact-arithmetic kernels and the constructions built on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("determinant vanishes; system route unavailable")]
    Singular,

    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,

    #[error("polynomials live in different rings ({left} vs {right} variables)")]
    ArityMismatch { left: usize, right: usize },

    #[error("guard exceeded: {what} = {value} > {limit}")]
    GuardExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("routes disagree: {0}")]
    RouteDisagreement(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
