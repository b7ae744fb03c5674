use thiserror::Error;

use crate::superdim::SuperDim;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("malformed scalar {literal:?}: {reason}")]
    Scalar { literal: String, reason: String },
    #[error("vector is not parity-homogeneous")]
    MixedParity,
    #[error("host mismatch: {0} vs {1}")]
    HostMismatch(SuperDim, SuperDim),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("conflicting explicit brackets for pair ({0}, {1})")]
    ConflictingMirror(usize, usize),
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("coboundary space is not contained in the cocycle space (parity {0})")]
    CoboundaryNotCocycle(u8),
    #[error("invalid family parameters: {0}")]
    InvalidParameters(String),
    #[error("extension precondition failed: {0}")]
    Precondition(String),
    #[error("stem denominator constraint cannot be satisfied: {0}")]
    Unsatisfiable(String),
    #[error("generator images do not generate the algebra")]
    NotGenerating,
    #[error("algebra is not nilpotent of class <= {0}")]
    ClassTooLarge(usize),
    #[error("class bound {class_bound} too small: {at_bound} at c, {at_next} at c+1")]
    ClassBoundTooSmall {
        class_bound: usize,
        at_bound: SuperDim,
        at_next: SuperDim,
    },
    #[error("malformed document: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
