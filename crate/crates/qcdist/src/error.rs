use thiserror::Error;

/// Errors surfaced by the library.
///
/// `Domain` names the violated precondition; `Usage` covers structural
/// misuse (mismatched dimensions, malformed grids); `NotApplicable` marks a
/// bound requested outside the K-range it is proven on.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn not_applicable(msg: impl Into<String>) -> Self {
        Error::NotApplicable(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
