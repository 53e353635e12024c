//! Command-line front end: JSON experiment configs in, CSV tables out.

pub mod commands;
pub mod config;
pub mod output;

use std::fmt;

/// Failure of a CLI invocation, split by exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad config, arguments or parameters (exit code 2).
    Invalid(String),
    /// Anything else (exit code 1).
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Internal(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invalid(msg) => write!(f, "error: {msg}"),
            CliError::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<nurbs_limit::Error> for CliError {
    fn from(e: nurbs_limit::Error) -> Self {
        if e.is_internal() {
            CliError::Internal(e.to_string())
        } else {
            CliError::Invalid(e.to_string())
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
