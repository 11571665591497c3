//! Error type shared by every module in the crate.
//!
//! Three failure classes cover everything: an argument outside an
//! operation's documented domain (`InvalidArgument`), a query beyond the
//! range a table was built for (`OutOfRange`), and a computation invoked
//! without the context it needs (`InvalidState`, e.g. Model 2 without a
//! semiprime counter). Nothing here is recoverable-with-retry; callers are
//! expected to rebuild with a bigger limit or fix the argument.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Argument outside the operation's documented domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Query exceeds the range a table or sieve was built for.
    #[error("out of range: {0}")]
    OutOfRange(String),

    /// Operation invoked without the context it requires.
    #[error("invalid state: {0}")]
    InvalidState(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid_argument(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn out_of_range(msg: impl Into<String>) -> Self {
        Error::OutOfRange(msg.into())
    }

    pub fn invalid_state(msg: impl Into<String>) -> Self {
        Error::InvalidState(msg.into())
    }
}
