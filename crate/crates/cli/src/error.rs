use thiserror::Error;

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] l2disc::Error),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("unknown table '{0}'")]
    UnknownTable(String),
    #[error("method {method} does not support {reason}")]
    MethodUnsupportedForInput { method: String, reason: String },
}

pub(crate) fn bad(message: impl Into<String>) -> CliError {
    CliError::BadParams(message.into())
}
