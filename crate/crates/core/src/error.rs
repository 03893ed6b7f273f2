use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Invalid norm specification; `path` names the offending field.
    #[error("invalid norm spec at `{path}`: {msg}")]
    InvalidSpec { path: String, msg: String },

    #[error("zero vector where a nonzero vector is required ({0})")]
    ZeroVector(&'static str),

    #[error("non-finite vector component")]
    NonFinite,

    #[error("vectors are linearly dependent ({0})")]
    Dependent(&'static str),

    #[error("operation requires a strictly convex plane ({0})")]
    NotStrictlyConvex(&'static str),

    #[error("arccos/arcsin argument {0} outside the guard band")]
    Domain(f64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("adaptive quadrature failed to converge on [{lo}, {hi}]")]
    Quadrature { lo: f64, hi: f64 },

    #[error("no sign change on the search interval ({0})")]
    NoBracket(String),

    #[error("operation not supported: {0}")]
    Unsupported(String),

    #[error("detector disagreement: {0}")]
    DetectorDisagreement(String),
}

pub type Result<T> = std::result::Result<T, Error>;
