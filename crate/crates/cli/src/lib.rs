//! Library side of the `qrel` command: sampling, scans, verification
//! suites and output formatting. `main.rs` only parses arguments.

// `!(x <= tol)` is used on purpose so that NaN fails validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod input;
pub mod output;
pub mod sampling;
pub mod scan;
pub mod verify;

use std::io;

/// Failures mapped onto process exit codes.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid state: {0}")]
    InvalidState(String),
    #[error("verification failed: {0}")]
    VerifyFailed(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::VerifyFailed(_) => 1,
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::InvalidState(_) => 3,
        }
    }
}

impl From<qrel_core::Error> for CliError {
    fn from(e: qrel_core::Error) -> Self {
        use qrel_core::Error as E;
        match e {
            E::NotHermitian(_) | E::NotPsd(_) | E::InvalidState(_) | E::Shape(_) | E::NonFinite => {
                CliError::InvalidState(e.to_string())
            }
            other => CliError::Usage(other.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
