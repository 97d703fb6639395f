use thiserror::Error;

/// Errors surfaced by the library.
///
/// `Internal` signals that an optimality assertion baked into a construction
/// failed, which means either a bug or a non-submodular oracle; callers are
/// not expected to recover from it.
#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),

    #[error("enumeration over cap: ground set of size {n} exceeds cap {cap}")]
    EnumerationCap { n: usize, cap: usize },

    #[error("property violation: {0}")]
    PropertyViolation(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
