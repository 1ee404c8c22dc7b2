use thiserror::Error;
use vdas_algebra::{AlgebraError, DecodeError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoreError {
    #[error("empty batch")]
    EmptyBatch,

    #[error("shape mismatch: {records} records vs {data} data items")]
    LengthMismatch { records: usize, data: usize },

    #[error("identity must be non-empty")]
    EmptyIdentity,

    #[error("state information must be non-empty")]
    EmptyStateInfo,

    #[error("identity point where a signature component was expected")]
    IdentityPointInSignature,

    #[error("malformed envelope: {0}")]
    Envelope(String),

    #[error("unknown parameter set `{0}`")]
    UnknownParamSet(String),

    #[error(transparent)]
    Decode(#[from] DecodeError),

    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
