//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("dimension mismatch: {0}")]
    DimMismatch(String),

    #[error("group relation violated: {0}")]
    RelationViolation(String),

    #[error("invalid group parameter: {0}")]
    BadGroup(String),

    #[error("subgroup {0} is not one of the stored subgroups")]
    UnknownSubgroup(String),

    #[error("isomorphism test inconclusive: {0}")]
    Inconclusive(String),

    #[error("certificate failure: {0}")]
    CertificateFailure(String),

    #[error("classification mismatch: {0}")]
    Classification(String),

    #[error("character decomposition failure: {0}")]
    Decomposition(String),

    #[error("no solution: {0}")]
    NoSolution(String),

    #[error("obstruction: {0}")]
    Obstruction(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("malformed file {path}: {reason}")]
    MalformedFile { path: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
