use std::io;
use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("capacity exceeded: {what} = {value} (limit {limit})")]
    Capacity { what: &'static str, value: usize, limit: usize },

    #[error("insufficient terms: got {got}, need at least {need}")]
    InsufficientTerms { got: usize, need: usize },

    #[error("no recurrence of order <= {budget} fits {terms} terms")]
    NoRecurrence { budget: usize, terms: usize },

    #[error("structural check failed: {0}")]
    Structural(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("cache file {path}: {reason}")]
    Cache { path: PathBuf, reason: String },

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    /// Process exit code for the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parameter(_) | Error::InsufficientTerms { .. } | Error::NoRecurrence { .. } => 2,
            Error::Capacity { .. } => 3,
            Error::Structural(_) | Error::Verification(_) => 4,
            Error::Cache { .. } | Error::Io(_) => 1,
        }
    }
}
