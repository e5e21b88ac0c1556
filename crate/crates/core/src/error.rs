use thiserror::Error;

/// Errors raised by the toolkit.
///
/// `Domain` covers inputs that are outside the mathematical domain of an
/// operation (a zero modulus, a singular curve, a bad prime handed to point
/// counting). `Capability` covers inputs that are valid but exceed the
/// desk-scale guards (p > 13, degree > 100, insufficient precision).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("capability guard: {0}")]
    Capability(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn capability(msg: impl Into<String>) -> Self {
        Error::Capability(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
