use std::ops::Range;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("no grammar registered for language `{0}`")]
    UnregisteredLanguage(String),

    #[error("span {start}..{end} is outside a document of {len} bytes", start = .span.start, end = .span.end)]
    SpanOutOfBounds { span: Range<usize>, len: usize },

    #[error("parser produced no tree for {0}")]
    ParseFailed(String),

    #[error("invalid chunking config: {0}")]
    InvalidConfig(String),

    #[error("invalid glob `{glob}`: {message}")]
    InvalidGlob { glob: String, message: String },

    #[error("line {line}: malformed record: {message}")]
    MalformedRecord { line: usize, message: String },

    #[error("line {line}: malformed query: {message}")]
    MalformedQuery { line: usize, message: String },

    #[error("k must be at least 1")]
    InvalidCutoff,

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
