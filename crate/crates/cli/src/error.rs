use thiserror::Error;

/// Errors that stop a command before any check can report.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Core(#[from] qpvi::Error),
}

impl CliError {
    /// Exit status: 2 for bad input, 1 when the computation itself failed.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if !matches!(e, qpvi::Error::Parse(_) | qpvi::Error::SizeMismatch(_)) => 1,
            _ => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
