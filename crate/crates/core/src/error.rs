use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("position {position} out of range for a permutation of length {length}")]
    Position { position: usize, length: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error(
        "length {length} exceeds the enumeration guard of {limit} (use --force or raise MESHLAB_MAX_BRUTE)"
    )]
    Guard { length: usize, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Process exit status: 2 for bad input, 3 for the enumeration guard,
    /// 1 for anything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) | Error::Parse(_) | Error::Position { .. } | Error::Domain(_) => 2,
            Error::Guard { .. } => 3,
            Error::Io(_) | Error::Json(_) => 1,
        }
    }
}
