use thiserror::Error;

/// Errors raised by library operations.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument violates an operation's precondition.
    #[error("argument error: {0}")]
    Argument(String),
    /// A mathematical domain violation (negative argument, non-integrable weight, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// The requested frequencies cannot be resolved on the given grid.
    #[error("resolution error: {0}")]
    Resolution(String),
    /// The identity suite failed, so ratio sweeps refuse to run.
    #[error("identity gate failed: {0}")]
    Gate(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn resolution(msg: impl Into<String>) -> Self {
        Error::Resolution(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
