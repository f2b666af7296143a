//! Implementation of the `belldiag` command-line tool. Lives in a library so
//! the integration tests can reuse the wire-format records.

pub mod family;
pub mod jsonfmt;
pub mod records;
pub mod selftest;

use std::fmt;

/// Errors mapped onto process exit codes: 2 invalid arguments,
/// 3 precondition failure, 4 selftest failure.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Precondition(String),
    SelftestFailed,
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Precondition(msg) => write!(f, "{msg}"),
            CliError::SelftestFailed => write!(f, "selftest failed"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::SelftestFailed => 4,
            CliError::Io(_) => 1,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<belldiag::Error> for CliError {
    fn from(e: belldiag::Error) -> Self {
        match e {
            belldiag::Error::Precondition { reason } => CliError::Precondition(reason),
            other => CliError::Usage(other.to_string()),
        }
    }
}
