use thiserror::Error;

/// Errors raised by the library. The CLI maps each variant to an exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The input is well formed but violates a stated hypothesis (not an m-cover, wrong multiplicity, ...).
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A desk-scale capacity guard was exceeded.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// Objects from different ambient groups were combined.
    #[error("group mismatch: {0}")]
    GroupMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}

pub(crate) fn capacity<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Capacity(msg.into()))
}
