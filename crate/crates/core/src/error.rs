//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised by construction and computation paths.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Structurally invalid input value (zero denominator, violated invariant).
    #[error("malformed input: {0}")]
    MalformedInput(String),

    /// Well-formed input that this release does not support.
    #[error("unsupported configuration: {0}")]
    UnsupportedConfiguration(String),

    /// An exterior-square (or similar functor) request on an atom it is not
    /// defined for.
    #[error("unsupported atom: {0}")]
    UnsupportedAtom(String),

    /// A supercuspidal support with no transfer data attached: no parameter
    /// exists, callers must work with formal gamma-atoms instead.
    #[error("atomic lift: {0}")]
    AtomicLift(String),

    /// An operation applied outside its domain (e.g. the support map on a
    /// supercuspidal support).
    #[error("domain error: {0}")]
    Domain(String),

    /// Input is missing a field required by the requested computation.
    #[error("incomplete input: missing {field}: {detail}")]
    IncompleteInput { field: String, detail: String },

    /// A structural identity the engine relies on failed to hold.
    /// Firing is a bug in the engine or its inputs, never expected behaviour.
    #[error("internal consistency: {0}")]
    InternalConsistency(String),

    /// Schema-level failure while decoding an instance description.
    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: schema errors map to 1, everything the
    /// engine cannot represent to 2.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Schema(_) | Error::MalformedInput(_) | Error::IncompleteInput { .. } => 1,
            _ => 2,
        }
    }
}
