use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse partition {0:?}")]
    ParsePartition(String),

    #[error("cannot parse rational {0:?}")]
    ParseRational(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("variable count mismatch: {0} vs {1}")]
    NvarsMismatch(usize, usize),

    #[error("expansion needs at least {needed} variables, got {got}")]
    NotFaithful { needed: usize, got: usize },

    #[error("truncation cap {cap} is insufficient; retry with cap >= {suggested}")]
    CapInsufficient { cap: usize, suggested: usize },

    #[error("power series has zero constant term")]
    ZeroConstantTerm,

    #[error("division by an interval containing zero")]
    DivisionByZero,

    #[error("parameter out of range: {0}")]
    ParameterRange(String),

    #[error("interval width {width} exceeds tolerance {tolerance}")]
    ToleranceExceeded { width: String, tolerance: String },

    #[error("not enough h-values: need index {needed}, have {have}")]
    InsufficientValues { needed: usize, have: usize },

    #[error("specialization is not normalized: {0}")]
    NotNormalized(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
