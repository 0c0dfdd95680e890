use thiserror::Error;

use crate::lie::LieType;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported algebra: type {ty} with rank {rank}")]
    UnsupportedRank { ty: LieType, rank: usize },

    #[error("structural error: {0}")]
    Structure(String),

    #[error("matrix size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("invalid parabolic description: {0}")]
    InvalidParabolic(String),

    #[error("isotropy violation: {0}")]
    Isotropy(String),

    #[error("matrix does not lie in the Lie algebra at t^{exponent}")]
    NotInAlgebra { exponent: i64 },

    #[error("non-constant entry at ({row}, {col})")]
    NonConstant { row: usize, col: usize },

    #[error("coefficient f_{index} has negative valuation {valuation}")]
    NegativeValuation { index: usize, valuation: i64 },

    #[error(
        "bad type-D parabolic (violated bound: {violated}); use the Newton-polygon description"
    )]
    BadParabolic { violated: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("generic samples disagree on the Richardson Jordan type: {0}")]
    Genericity(String),

    #[error("identity failed: {0}")]
    Identity(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
