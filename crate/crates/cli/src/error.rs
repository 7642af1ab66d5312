use std::io;
use thiserror::Error;

/// Errors surfaced by the command-line front end.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("config error in {path}: {message}")]
    Config { path: String, message: String },
    #[error("invalid input: {0}")]
    Validation(String),
    #[error(transparent)]
    Model(#[from] beatwave_core::Error),
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
    #[error("output error: {0}")]
    Output(String),
}

impl CliError {
    /// Process exit code: 2 usage, 3 domain/validation, 4 numerical failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Config { .. } => 2,
            CliError::Validation(_) => 3,
            CliError::Model(beatwave_core::Error::Numerical(_)) => 4,
            CliError::Model(_) => 3,
            CliError::Io(_) | CliError::Output(_) => 1,
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
