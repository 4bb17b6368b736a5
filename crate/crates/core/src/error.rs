//! Error kinds shared by every module in the crate.
//!
//! The CLI maps these onto process exit codes (`MalformedInput` and
//! `DomainError` -> 2, `ResourceLimit` -> 3), so library code should pick the
//! kind that describes *why* an operation cannot proceed rather than where it
//! failed.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Input text (edge list, graph6, CLI syntax) could not be decoded.
    #[error("malformed input: {0}")]
    MalformedInput(String),

    /// The instance is well-formed but outside what this crate models
    /// (e.g. a cycle on 2 vertices, or a host with more than 63 vertices).
    #[error("unsupported instance: {0}")]
    UnsupportedInstance(String),

    /// A precondition on mathematically meaningful input was violated
    /// (e.g. an odd-order graph where an even one is required).
    #[error("domain error: {0}")]
    DomainError(String),

    /// The computation would exceed a configured size cap.
    #[error("resource limit: {0}")]
    ResourceLimit(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn malformed(msg: impl Into<String>) -> Self {
        Error::MalformedInput(msg.into())
    }
    pub fn unsupported(msg: impl Into<String>) -> Self {
        Error::UnsupportedInstance(msg.into())
    }
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::DomainError(msg.into())
    }
    pub fn resource(msg: impl Into<String>) -> Self {
        Error::ResourceLimit(msg.into())
    }
}
