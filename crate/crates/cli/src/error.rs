use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid structured input: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Core(#[from] eulerspace_core::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        CliError::Parse { line, message: message.into() }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
