use thiserror::Error;

use crate::combinat::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("denominator vanishes under substitution {assignment}")]
    Pole { assignment: String },

    #[error("singular matrix{context}")]
    Singular { context: String },

    #[error("{0:?} is not a partition")]
    NotAPartition(Vec<u32>),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("charge needs partition content, got {0:?}")]
    NonPartitionContent(Vec<u32>),

    #[error("unknown basis `{0}`")]
    UnknownBasis(String),

    #[error("basis `{0}` is already registered")]
    DuplicateBasis(String),

    #[error("no conversion path from `{from}` to `{to}`")]
    NoPath { from: String, to: String },

    #[error("`{a}` and `{b}` are not declared dual")]
    MissingDualPair { a: String, b: String },

    #[error("invalid conversion rule: {0}")]
    InvalidRule(String),

    #[error("conversion rule for `{from}` -> `{to}` returned an element in `{got}`")]
    RuleBasisMismatch {
        from: String,
        to: String,
        got: String,
    },

    #[error("rule for `{basis}` at {partition} returned a term of degree {got}")]
    Inhomogeneous {
        basis: String,
        partition: Partition,
        got: usize,
    },

    #[error("degenerate scalar product: <P, P> = 0 at {0}")]
    ZeroNorm(Partition),

    #[error("unknown operator `{0}`")]
    UnknownOperator(String),

    #[error("operator `{0}` is already declared")]
    DuplicateOperator(String),

    #[error("basis mismatch: `{0}` vs `{1}`")]
    BasisMismatch(String, String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
