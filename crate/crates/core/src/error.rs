use thiserror::Error;

/// Errors raised by the exact engines.
///
/// `Consistency` is reserved for identities that must hold exactly; seeing it
/// means an implementation bug, not bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("consistency failure: {0}")]
    Consistency(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }

    /// True for errors that indicate a broken internal identity.
    pub fn is_consistency(&self) -> bool {
        matches!(self, Error::Consistency(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
