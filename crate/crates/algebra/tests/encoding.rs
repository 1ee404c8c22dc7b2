use proptest::prelude::*;
use vdas_algebra::{
    decode_point, decode_scalar, encode_point, encode_scalar, point_encoded_len, point_mul,
    toy_64, DecodeError, G1Point, Scalar, TAG_UNCOMPRESSED,
};

#[test]
fn identity_encoding_is_fixed_length_zeros() {
    let params = toy_64();
    let bytes = encode_point(&G1Point::Identity, &params);
    assert_eq!(bytes.len(), point_encoded_len(&params));
    assert_eq!(bytes[0], 0x00);
    assert!(bytes[1..].iter().all(|&b| b == 0));
    assert_eq!(decode_point(&bytes, &params).unwrap(), G1Point::Identity);
}

#[test]
fn decode_rejects_each_malformation_distinctly() {
    let params = toy_64();
    let good = encode_point(&params.generator, &params);

    let mut bad_tag = good.clone();
    bad_tag[0] = 0x07;
    assert_eq!(decode_point(&bad_tag, &params), Err(DecodeError::BadTag(0x07)));

    assert!(matches!(
        decode_point(&good[..good.len() - 1], &params),
        Err(DecodeError::WrongLength { .. })
    ));

    // x := x + 1 leaves the curve with probability about 1/2; walk until
    // an off-curve encoding is found (bounded)
    let mut off = good.clone();
    let mut found = false;
    for _ in 0..8 {
        let last = off.len() - 1;
        off[last] = off[last].wrapping_add(1);
        match decode_point(&off, &params) {
            Err(DecodeError::OffCurve) => {
                found = true;
                break;
            }
            _ => continue,
        }
    }
    assert!(found, "no off-curve rejection in 8 bumps");

    // the order-2 point (0, 0) is on the curve but outside the subgroup;
    // it is caught by the zero-coordinate guard under the 0x04 tag
    let w = (good.len() - 1) / 2;
    let mut two_torsion = vec![0u8; good.len()];
    two_torsion[0] = TAG_UNCOMPRESSED;
    assert!(decode_point(&two_torsion, &params).is_err());
    let _ = w;
}

#[test]
fn wrong_order_point_is_rejected() {
    // build a curve point of order dividing h but not q: clear the q part
    // instead of the cofactor
    use num_traits::Zero;
    use vdas_algebra::BigUint;
    let params = toy_64();
    let p = &params.p;
    let mut x = BigUint::from(2u8);
    loop {
        let rhs = ((&x * &x * &x) % p + &x) % p;
        if !rhs.is_zero() {
            let e = (p + 1u8) >> 2;
            let y = rhs.modpow(&e, p);
            if (&y * &y) % p == rhs {
                let pt = G1Point::Affine { x: x.clone(), y };
                // multiply by q to land in the cofactor component
                let mut acc = G1Point::Identity;
                for i in (0..params.q.bits()).rev() {
                    acc = vdas_algebra::point_add(&acc, &acc, &params, None);
                    if params.q.bit(i) {
                        acc = vdas_algebra::point_add(&acc, &pt, &params, None);
                    }
                }
                if !acc.is_identity() {
                    let bytes = encode_point(&acc, &params);
                    assert_eq!(decode_point(&bytes, &params), Err(DecodeError::WrongOrder));
                    return;
                }
            }
        }
        x += 1u8;
    }
}

#[test]
fn scalar_codec_errors() {
    let params = toy_64();
    let enc = encode_scalar(&Scalar::from_u64(123, &params.q), &params);
    assert_eq!(decode_scalar(&enc, &params).unwrap(), Scalar::from_u64(123, &params.q));
    assert!(matches!(
        decode_scalar(&enc[..1], &params),
        Err(DecodeError::WrongLength { .. })
    ));
    let over = encode_scalar(&Scalar::new(params.q.clone() + 1u8, &(params.q.clone() * 2u8)), &params);
    assert_eq!(decode_scalar(&over, &params), Err(DecodeError::ScalarOutOfRange));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn point_round_trip(k in 1u64..65536) {
        let params = toy_64();
        let pt = point_mul(&Scalar::from_u64(k, &params.q), &params.generator, &params, None);
        let bytes = encode_point(&pt, &params);
        prop_assert_eq!(bytes.len(), point_encoded_len(&params));
        prop_assert_eq!(decode_point(&bytes, &params).unwrap(), pt);
    }

    #[test]
    fn scalar_round_trip(k in 0u64..35401) {
        let params = toy_64();
        let s = Scalar::from_u64(k, &params.q);
        prop_assert_eq!(decode_scalar(&encode_scalar(&s, &params), &params).unwrap(), s);
    }
}
