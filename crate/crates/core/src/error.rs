use thiserror::Error;

use crate::algebra::Var;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at specialization: {0}")]
    PoleAtSpecialization(String),
    #[error("series variables differ: {0} vs {1}")]
    VariableMismatch(Var, Var),
    #[error("series prefactors differ by a non-integer: {0} vs {1}")]
    PrefactorMismatch(String, String),
    #[error("coefficient at offset {requested} lies beyond precision {precision}")]
    BeyondPrecision { requested: i64, precision: i64 },
    #[error("outside domain: {0}")]
    Domain(String),
    #[error("numerical cancellation: {0}")]
    Cancellation(String),
    #[error("no convergence: {0}")]
    NoConvergence(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
