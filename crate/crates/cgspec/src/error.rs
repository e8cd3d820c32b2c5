use std::io;
use std::path::PathBuf;

use cgspec_core::GroupError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Group(#[from] GroupError),
    #[error("malformed input {}: {reason}", path.display())]
    Malformed { path: PathBuf, reason: String },
    #[error("cannot read {}: {source}", path.display())]
    Read { path: PathBuf, source: io::Error },
    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    VerifyFailed(String),
}

impl CliError {
    /// 1 verification failure, 2 invalid group or input, 3 size cap,
    /// 4 I/O.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::VerifyFailed(_) => 1,
            CliError::Group(
                GroupError::SizeCapExceeded { .. } | GroupError::ClosureCapExceeded { .. },
            ) => 3,
            CliError::Group(_) | CliError::Malformed { .. } | CliError::Usage(_) => 2,
            CliError::Read { .. } | CliError::Write { .. } => 4,
        }
    }
}
