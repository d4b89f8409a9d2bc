use thiserror::Error;

use crate::census::VertexClass;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("polynomial has no real root")]
    NoRealRoot,

    #[error("polynomial must be nonconstant")]
    ConstantPolynomial,

    #[error("precision must be positive")]
    NonPositivePrecision,

    #[error("inexact division by {divisor} for class {class} while advancing level {level}")]
    InexactDivision {
        class: VertexClass,
        level: u64,
        divisor: u32,
    },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("sequence has {have} terms, need at least {need}")]
    InsufficientData { have: usize, need: usize },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
