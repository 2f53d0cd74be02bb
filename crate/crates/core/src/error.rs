use std::path::PathBuf;

use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("resource limit reached: {0}")]
    ResourceLimit(String),

    #[error("unsupported group family: {0}")]
    UnsupportedFamily(String),

    #[error("missing fixture `{0}`")]
    MissingFixture(String),

    #[error("parse error in {context}: {message}")]
    Parse { context: String, message: String },

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("complex has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn parse(context: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            context: context.into(),
            message: message.into(),
        }
    }
}
