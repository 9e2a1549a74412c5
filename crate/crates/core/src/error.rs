use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument outside its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A size guard refused the request instead of exhausting memory or time.
    #[error("capacity exceeded: {what} (limit {limit})")]
    Capacity { what: String, limit: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("no convergence: {0}")]
    NonConvergence(String),

    /// Malformed input text; `line` is 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown schedule `{0}`")]
    UnknownSchedule(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    /// Conditioned quantities requested for a state with no weight on independent sets.
    #[error("state has zero probability in the independent-set subspace")]
    ZeroIsProbability,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Short machine-readable tag, used in the CLI's error JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Capacity { .. } => "capacity",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::NonConvergence(_) => "non_convergence",
            Error::Parse { .. } => "parse",
            Error::UnknownSchedule(_) => "unknown_schedule",
            Error::Config(_) => "config",
            Error::ZeroIsProbability => "zero_is_probability",
            Error::Io(_) => "io",
            Error::Csv(_) => "csv",
            Error::Json(_) => "json",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
