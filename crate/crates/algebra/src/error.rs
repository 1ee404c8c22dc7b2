use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("invalid bit-size request: q_bits={q_bits}, p_bits={p_bits}")]
    InvalidBitSizes { q_bits: u64, p_bits: u64 },

    #[error("parameter search exhausted after {attempts} candidates")]
    SearchExhausted { attempts: u64 },

    #[error("hash-to-point exceeded the iteration cap")]
    HashToPointExhausted,

    #[error("scalar is not invertible modulo the group order")]
    NonInvertible,

    #[error("malformed parameter text: {0}")]
    ParamParse(String),

    #[error("parameter set fails validation: {0}")]
    ParamInvalid(String),
}

/// Wire-decoding failures. Each malformation gets its own code so callers
/// can tell a truncated buffer from a forged point.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecodeError {
    #[error("bad tag byte 0x{0:02x}")]
    BadTag(u8),

    #[error("wrong length: expected {expected}, got {got}")]
    WrongLength { expected: usize, got: usize },

    #[error("point is not on the curve")]
    OffCurve,

    #[error("point is not in the order-q subgroup")]
    WrongOrder,

    #[error("scalar is out of range")]
    ScalarOutOfRange,
}
