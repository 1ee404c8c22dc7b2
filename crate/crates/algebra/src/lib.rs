//! Type-1 pairing algebra over the supersingular curve y^2 = x^3 + x.
//!
//! Provides the finite-field, curve, and pairing arithmetic the VDAS
//! protocol layers build on: group parameter generation, the symmetric
//! Tate pairing realized through the distortion map, hash-to-group and
//! hash-to-scalar, wire encodings, and an operation counter for cost-model
//! verification.
//!
//! # Warning
//!
//! All arithmetic is variable-time. This is a research artifact for
//! studying the scheme's algebra and cost profile, not production
//! cryptography.

mod counter;
mod curve;
mod encode;
mod error;
mod fp;
mod hashing;
mod pairing;
mod params;
mod rng;
mod scalar;

pub use counter::{OpCounter, OpCounts};
pub use curve::{in_subgroup, is_on_curve, point_add, point_mul, point_neg, G1Point};
pub use encode::{
    decode_point, decode_scalar, encode_point, encode_scalar, point_encoded_len, point_is_valid,
    TAG_IDENTITY, TAG_UNCOMPRESSED,
};
pub use error::{AlgebraError, DecodeError};
pub use fp::Fp2;
pub use hashing::{frame_fields, hash_to_point, hash_to_scalar};
pub use pairing::{distortion_map, pairing, Fp2Point, GtElement};
pub use params::{
    by_label, coord_len, gen_group_params, is_prime, params_from_text, params_to_text, scalar_len,
    ss_512, toy_64, validate_params, GroupParams, PARAMSET_LABELS,
};
pub use rng::{random_below, random_unit, seeded_rng};
pub use scalar::Scalar;

pub use num_bigint::BigUint;
pub use rand_chacha::ChaCha20Rng;

/// Uniform scalar in [1, q-1] from an already-seeded stream.
pub fn random_nonzero_scalar(rng: &mut ChaCha20Rng, params: &GroupParams) -> Scalar {
    Scalar::new(random_unit(rng, &params.q), &params.q)
}
