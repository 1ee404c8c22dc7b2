//! Hash-to-group (try-and-increment with cofactor clearing) and
//! hash-to-scalar. Both are domain-separated instances of SHA-256 with
//! 4-byte big-endian length prefixes on the message.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use sha2::{Digest, Sha256};

use crate::counter::{record, OpCounter};
use crate::curve::{mul_raw, G1Point};
use crate::error::AlgebraError;
use crate::fp::{fp_add, fp_mul, fp_neg, fp_sqrt};
use crate::params::GroupParams;
use crate::scalar::Scalar;

const DOMAIN_MAP: u8 = 0x01;
const DOMAIN_SCALAR: u8 = 0x02;

const TRY_INCREMENT_CAP: u32 = 1000;

/// H1: {0,1}* -> G1. Deterministic try-and-increment: the digest of
/// (tag, len, message, counter) supplies a candidate x and the y-parity
/// bit; the first x with x^3 + x a quadratic residue yields a point, which
/// is cleared to the order-q subgroup by the cofactor.
pub fn hash_to_point(
    message: &[u8],
    params: &GroupParams,
    rec: Option<&OpCounter>,
) -> Result<G1Point, AlgebraError> {
    record(rec, OpCounter::bump_map_hash);
    let p = &params.p;
    for counter in 0..TRY_INCREMENT_CAP {
        let mut h = Sha256::new();
        h.update([DOMAIN_MAP]);
        h.update((message.len() as u32).to_be_bytes());
        h.update(message);
        h.update(counter.to_be_bytes());
        let digest = h.finalize();
        let x = BigUint::from_bytes_be(&digest) % p;
        let x2 = fp_mul(&x, &x, p);
        let rhs = fp_add(&fp_mul(&x2, &x, p), &x, p);
        if rhs.is_zero() {
            continue;
        }
        let Some(mut y) = fp_sqrt(&rhs, p) else {
            continue;
        };
        let parity = digest[31] & 1 == 1;
        if y.bit(0) != parity {
            y = fp_neg(&y, p);
        }
        let pt = mul_raw(&params.cofactor, &G1Point::Affine { x, y }, p);
        if !pt.is_identity() {
            return Ok(pt);
        }
    }
    Err(AlgebraError::HashToPointExhausted)
}

/// h2: {0,1}* -> Z_q^*. The `mod (q-1) + 1` reduction keeps zero out of
/// the codomain.
pub fn hash_to_scalar(message: &[u8], params: &GroupParams, rec: Option<&OpCounter>) -> Scalar {
    record(rec, OpCounter::bump_scalar_hash);
    let mut h = Sha256::new();
    h.update([DOMAIN_SCALAR]);
    h.update((message.len() as u32).to_be_bytes());
    h.update(message);
    let v = BigUint::from_bytes_be(&h.finalize());
    let q_minus_1 = &params.q - BigUint::one();
    Scalar::new(v % q_minus_1 + BigUint::one(), &params.q)
}

/// Concatenates fields with 4-byte big-endian length prefixes. The framing
/// is injective, so multi-field hash inputs cannot collide across field
/// boundaries.
pub fn frame_fields(fields: &[&[u8]]) -> Vec<u8> {
    let mut out = Vec::with_capacity(fields.iter().map(|f| f.len() + 4).sum());
    for f in fields {
        out.extend_from_slice(&(f.len() as u32).to_be_bytes());
        out.extend_from_slice(f);
    }
    out
}
