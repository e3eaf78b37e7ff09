//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by construction, parsing and the geometric operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NambuError {
    /// Two objects live over different coordinate dimensions.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// An operation received an object of the wrong exterior degree.
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    /// A bracket or checker was called with the wrong number of entries.
    #[error("arity mismatch: {context} takes {expected} entries, found {found}")]
    ArityMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    /// A coordinate index lies outside `1..=dim`.
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    /// A sequence that should be a permutation of `1..=k` is not.
    #[error("not a permutation of 1..={len}: {reason}")]
    NotAPermutation { len: usize, reason: String },

    /// The operation is not defined for this bracket arity.
    #[error("unsupported arity n={n}: {context}")]
    UnsupportedArity { n: usize, context: &'static str },

    /// A weight table is malformed (wrong block size, missing classes, ...).
    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    /// The multi-vector field vanishes at the requested point.
    #[error("the multi-vector field vanishes at the given point")]
    ZeroAtPoint,

    /// The wedge test for a candidate factorization failed.
    #[error("the multi-vector field is not decomposable at the given point")]
    NotDecomposable,

    /// A precondition such as "the bracket value is a Casimir" failed.
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    /// A linear-algebra operation needed an invertible matrix.
    #[error("matrix is singular")]
    SingularMatrix,

    /// Malformed input data (JSON payloads, coefficient strings, ...).
    #[error("parse error: {0}")]
    Parse(String),
}

impl NambuError {
    /// Helper for dimension checks.
    pub(crate) fn check_dim(expected: usize, found: usize) -> Result<(), NambuError> {
        if expected == found {
            Ok(())
        } else {
            Err(NambuError::DimensionMismatch { expected, found })
        }
    }
}
