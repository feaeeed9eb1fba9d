use std::path::PathBuf;

use subdebt_core::ModelError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("cannot parse scenario {path}: {message}")]
    Parse { path: PathBuf, message: String },

    #[error("invalid parameters: {0}")]
    Validation(String),

    #[error("{failed} of {total} verification checks failed")]
    Verification { failed: usize, total: usize },

    #[error("cannot write output: {0}")]
    Output(String),
}

impl CliError {
    /// Process exit status. 2 is left to argument-parsing errors.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Output(_) => 1,
            CliError::Parse { .. } => 3,
            CliError::Validation(_) => 4,
            CliError::Verification { .. } => 5,
        }
    }
}

impl From<ModelError> for CliError {
    fn from(err: ModelError) -> Self {
        CliError::Validation(err.to_string())
    }
}
