use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by the engine. Every variant maps onto one of the CLI exit
/// codes through [`Error::exit_code`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported root system {family}{rank}: {reason}")]
    UnsupportedSystem {
        family: String,
        rank: usize,
        reason: String,
    },

    #[error("simple root index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("Weyl group of order {order} exceeds the configured guard {guard}")]
    GroupTooLarge { order: u64, guard: u64 },

    #[error("module of dimension {dimension} exceeds the character budget {budget}")]
    BudgetExceeded { dimension: u128, budget: u128 },

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("weight {weight} is not dominant for {context}")]
    NotDominant { weight: String, context: String },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// 0 success, 2 validation, 3 guard exceeded, 4 I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::GroupTooLarge { .. } | Error::BudgetExceeded { .. } => 3,
            Error::Io { .. } => 4,
            Error::Invariant(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
