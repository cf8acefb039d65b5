use thiserror::Error;

use crate::problem::Diagnostic;

/// Failures of a command, each mapped to a stable exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    /// The input is well-formed but mathematically invalid.
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Parse(Diagnostic),
    /// Bad command-line usage or unreadable input.
    #[error("{0}")]
    Usage(String),
    /// The question is outside what the tool decides.
    #[error("{0}")]
    Unsupported(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 1,
            CliError::Parse(_) | CliError::Usage(_) => 2,
            CliError::Unsupported(_) => 3,
        }
    }
}
