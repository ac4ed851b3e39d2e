use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("group order {order} exceeds the enumeration bound {bound}")]
    OrderBound { order: String, bound: u64 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("support domination fails at ({row}, {col})")]
    NotDominated { row: usize, col: usize },

    #[error("matrix is identically zero")]
    ZeroMatrix,

    #[error("depth must be at least 2, got {0}")]
    InvalidDepth(u32),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("multiplicity {value} at ({row}, {col}) is not a nonnegative integer")]
    NonIntegralMultiplicity {
        row: usize,
        col: usize,
        value: String,
    },

    #[error("class functions are indexed by different class counts ({0} vs {1})")]
    IndexMismatch(usize, usize),

    #[error("value is not rational: {0}")]
    NotRational(String),

    #[error("eigenspace splitting failed: {0}")]
    SplitFailure(String),

    #[error("{0} is not a Frobenius pair")]
    NotFrobenius(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
