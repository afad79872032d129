//! Error type shared by the whole crate.
//!
//! `Domain` covers invalid caller input (bad partition, out-of-range index,
//! mismatched rings); `Verification` is reserved for checks that ran and
//! disagreed; `Internal` flags broken invariants that indicate a bug here,
//! never bad input.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Input outside the operation's domain.
    #[error("{0}")]
    Domain(String),
    /// A cross-check executed and failed.
    #[error("verification failed: {0}")]
    Verification(String),
    /// An internal invariant broke; this is a bug in the library.
    #[error("internal invariant violated: {0}")]
    Internal(String),
    /// Malformed textual or JSON input.
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
