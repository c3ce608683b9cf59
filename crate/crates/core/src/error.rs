use thiserror::Error;

/// Errors raised by the library.
///
/// The variants are coarse on purpose: callers (the CLI in particular) map
/// them onto exit codes, so "bad input", "too big" and "not supported" must
/// stay distinguishable.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input (unknown edge, wrong edge size, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A configured size guard was exceeded.
    #[error("instance too large: {what} is {actual}, limit is {limit}")]
    TooLarge {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    /// The request is well-formed but outside what the algorithm can decide.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn too_large(what: &'static str, actual: usize, limit: usize) -> Self {
        Error::TooLarge {
            what,
            actual,
            limit,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
