use std::process::ExitCode;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, config file or input format. Exit code 2.
    #[error("{0}")]
    Usage(String),
    /// Anything that went wrong while doing valid work. Exit code 1.
    #[error("{0}")]
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Runtime(_) => ExitCode::from(1),
        }
    }
}

impl From<astchunk::Error> for CliError {
    fn from(err: astchunk::Error) -> Self {
        use astchunk::Error::*;
        match err {
            UnregisteredLanguage(_)
            | InvalidConfig(_)
            | InvalidGlob { .. }
            | MalformedRecord { .. }
            | MalformedQuery { .. }
            | InvalidCutoff => CliError::Usage(err.to_string()),
            SpanOutOfBounds { .. } | ParseFailed(_) | Io { .. } | Json(_) => {
                CliError::Runtime(err.to_string())
            }
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
