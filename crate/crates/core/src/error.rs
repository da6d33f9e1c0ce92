use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unknown Lie algebra {0:?}")]
    UnknownAlgebra(String),

    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix is not an automorphism of {0}")]
    NotAutomorphism(String),

    #[error("constraint violated: {0}")]
    ConstraintViolation(String),

    #[error("no catalog match: {0}")]
    NoCatalogMatch(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
