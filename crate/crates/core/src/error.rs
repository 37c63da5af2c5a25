use thiserror::Error;

/// Errors raised by scalar arithmetic, builders and checkers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid angular momentum: {0}")]
    InvalidSpin(String),

    #[error("q-integer [n] requires n >= 0, got {0}")]
    NegativeQInteger(i64),

    #[error("the zero polynomial has no square-free decomposition")]
    ZeroPolynomial,

    #[error("radicand must have rational coefficients: {0}")]
    NonRationalRadicand(String),

    #[error("denominator vanishes at t = 1 after cancellation: {0}")]
    PoleAtOne(String),

    #[error("denominator vanishes at the evaluation point: {0}")]
    PoleAt(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("element is not invertible in this scalar ring: {0}")]
    NotInvertible(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("algebra is not anticommutative at basis pair ({0}, {1})")]
    NotAnticommutative(usize, usize),

    #[error("construction is internally inconsistent: {0}")]
    Inconsistent(String),

    #[error("cannot parse {0:?} as an exact rational")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
