use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Configuration rejected before any computation.
    #[error("invalid configuration: {0}")]
    Validation(String),

    /// One or more verification checks failed.
    #[error("{failed} of {total} checks failed")]
    ChecksFailed { failed: usize, total: usize },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// An input file exists but cannot be parsed.
    #[error("{}: {message}", path.display())]
    Format { path: PathBuf, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::ChecksFailed { .. } => 2,
            CliError::Io { .. } | CliError::Format { .. } => 3,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn format(path: impl Into<PathBuf>, message: impl ToString) -> Self {
        CliError::Format {
            path: path.into(),
            message: message.to_string(),
        }
    }
}

/// Attach a context prefix to a library error and classify it as a
/// validation failure.
pub(crate) fn invalid(context: &str) -> impl FnOnce(zcz_seq::Error) -> CliError + '_ {
    move |e| CliError::Validation(format!("{context}: {e}"))
}
