//! Error taxonomy mapped onto process exit codes: usage errors exit 1, data
//! errors (unreadable or invalid inputs) exit 2, internal errors exit 3.

use std::fmt;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Data(anyhow::Error),
    Internal(anyhow::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Data(e) => write!(f, "{e:#}"),
            CliError::Internal(e) => write!(f, "internal error: {e:#}"),
        }
    }
}

impl std::error::Error for CliError {}

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn data(err: impl Into<anyhow::Error>) -> CliError {
    CliError::Data(err.into())
}

pub fn internal(err: impl Into<anyhow::Error>) -> CliError {
    CliError::Internal(err.into())
}

pub type CliResult<T> = Result<T, CliError>;
