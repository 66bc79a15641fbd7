use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad input, unreadable files, capacity limits. Exit status 2.
    #[error("{0}")]
    Usage(String),

    /// A computation that could not complete. Exit status 1.
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn io(path: &Path, e: std::io::Error) -> Self {
        CliError::Usage(format!("{}: {e}", path.display()))
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

impl From<signix_core::Error> for CliError {
    fn from(e: signix_core::Error) -> Self {
        match e {
            signix_core::Error::NumericFailure { .. } => CliError::Failed(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}
