//! Fixed-length wire encodings for points and scalars.
//!
//! Point: 1 tag byte (0x00 identity, 0x04 uncompressed) followed by both
//! coordinates, big-endian, each padded to the coordinate width. Identity
//! carries zero coordinates so the length never varies.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::curve::{in_subgroup, is_on_curve, mul_raw, G1Point};
use crate::error::DecodeError;
use crate::params::{coord_len, scalar_len, GroupParams};
use crate::scalar::Scalar;

pub const TAG_IDENTITY: u8 = 0x00;
pub const TAG_UNCOMPRESSED: u8 = 0x04;

pub fn point_encoded_len(params: &GroupParams) -> usize {
    1 + 2 * coord_len(params)
}

fn pad_be(v: &BigUint, width: usize) -> Vec<u8> {
    let bytes = v.to_bytes_be();
    let mut out = vec![0u8; width];
    out[width - bytes.len()..].copy_from_slice(&bytes);
    out
}

pub fn encode_point(pt: &G1Point, params: &GroupParams) -> Vec<u8> {
    let w = coord_len(params);
    let mut out = Vec::with_capacity(1 + 2 * w);
    match pt {
        G1Point::Identity => {
            out.push(TAG_IDENTITY);
            out.resize(1 + 2 * w, 0);
        }
        G1Point::Affine { x, y } => {
            out.push(TAG_UNCOMPRESSED);
            out.extend_from_slice(&pad_be(x, w));
            out.extend_from_slice(&pad_be(y, w));
        }
    }
    out
}

/// Decodes and validates: curve membership and order-q subgroup membership
/// are both enforced.
pub fn decode_point(bytes: &[u8], params: &GroupParams) -> Result<G1Point, DecodeError> {
    let w = coord_len(params);
    let expected = 1 + 2 * w;
    if bytes.len() != expected {
        return Err(DecodeError::WrongLength {
            expected,
            got: bytes.len(),
        });
    }
    match bytes[0] {
        TAG_IDENTITY => {
            if bytes[1..].iter().any(|&b| b != 0) {
                return Err(DecodeError::BadTag(TAG_IDENTITY));
            }
            Ok(G1Point::Identity)
        }
        TAG_UNCOMPRESSED => {
            let x = BigUint::from_bytes_be(&bytes[1..1 + w]);
            let y = BigUint::from_bytes_be(&bytes[1 + w..]);
            if x.is_zero() && y.is_zero() {
                return Err(DecodeError::OffCurve);
            }
            let pt = G1Point::Affine { x, y };
            if !is_on_curve(&pt, params) {
                return Err(DecodeError::OffCurve);
            }
            if !mul_raw(&params.q, &pt, &params.p).is_identity() {
                return Err(DecodeError::WrongOrder);
            }
            Ok(pt)
        }
        tag => Err(DecodeError::BadTag(tag)),
    }
}

pub fn encode_scalar(s: &Scalar, params: &GroupParams) -> Vec<u8> {
    pad_be(s.value(), scalar_len(params))
}

pub fn decode_scalar(bytes: &[u8], params: &GroupParams) -> Result<Scalar, DecodeError> {
    let expected = scalar_len(params);
    if bytes.len() != expected {
        return Err(DecodeError::WrongLength {
            expected,
            got: bytes.len(),
        });
    }
    let v = BigUint::from_bytes_be(bytes);
    if v >= params.q {
        return Err(DecodeError::ScalarOutOfRange);
    }
    Ok(Scalar::new(v, &params.q))
}

/// Subgroup check shared by deserializers in higher layers.
pub fn point_is_valid(pt: &G1Point, params: &GroupParams) -> bool {
    in_subgroup(pt, params)
}
