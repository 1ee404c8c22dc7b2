//! Short-Weierstrass group law on y^2 = x^3 + x over F_p.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::counter::{record, OpCounter};
use crate::fp::{fp_add, fp_inv, fp_mul, fp_neg, fp_sub};
use crate::params::GroupParams;
use crate::scalar::Scalar;

/// A point of the order-q subgroup of E(F_p), affine or the point at
/// infinity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum G1Point {
    Identity,
    Affine { x: BigUint, y: BigUint },
}

impl G1Point {
    pub fn is_identity(&self) -> bool {
        matches!(self, G1Point::Identity)
    }

    pub fn affine(x: BigUint, y: BigUint) -> Self {
        G1Point::Affine { x, y }
    }
}

/// Checks y^2 = x^3 + x (mod p). The identity is on the curve by convention.
pub fn is_on_curve(pt: &G1Point, params: &GroupParams) -> bool {
    match pt {
        G1Point::Identity => true,
        G1Point::Affine { x, y } => {
            let p = &params.p;
            if x >= p || y >= p {
                return false;
            }
            let lhs = fp_mul(y, y, p);
            let x2 = fp_mul(x, x, p);
            let rhs = fp_add(&fp_mul(&x2, x, p), x, p);
            lhs == rhs
        }
    }
}

pub fn point_neg(a: &G1Point, params: &GroupParams) -> G1Point {
    match a {
        G1Point::Identity => G1Point::Identity,
        G1Point::Affine { x, y } => G1Point::Affine {
            x: x.clone(),
            y: fp_neg(y, &params.p),
        },
    }
}

/// Chord-tangent addition. Records one point add when a counter is attached.
pub fn point_add(a: &G1Point, b: &G1Point, params: &GroupParams, rec: Option<&OpCounter>) -> G1Point {
    record(rec, OpCounter::bump_point_add);
    add_raw(a, b, &params.p)
}

fn add_raw(a: &G1Point, b: &G1Point, p: &BigUint) -> G1Point {
    let (x1, y1) = match a {
        G1Point::Identity => return b.clone(),
        G1Point::Affine { x, y } => (x, y),
    };
    let (x2, y2) = match b {
        G1Point::Identity => return a.clone(),
        G1Point::Affine { x, y } => (x, y),
    };
    let m = if x1 == x2 {
        if *y1 != *y2 || y1.is_zero() {
            // b = -a, or doubling a two-torsion point
            return G1Point::Identity;
        }
        // tangent: (3x^2 + 1) / 2y
        let x1_sq = fp_mul(x1, x1, p);
        let num = fp_add(&fp_add(&fp_add(&x1_sq, &x1_sq, p), &x1_sq, p), &BigUint::from(1u8), p);
        let den = fp_add(y1, y1, p);
        fp_mul(&num, &fp_inv(&den, p).expect("2y invertible"), p)
    } else {
        let num = fp_sub(y2, y1, p);
        let den = fp_sub(x2, x1, p);
        fp_mul(&num, &fp_inv(&den, p).expect("x2-x1 invertible"), p)
    };
    let x3 = fp_sub(&fp_sub(&fp_mul(&m, &m, p), x1, p), x2, p);
    let y3 = fp_sub(&fp_mul(&m, &fp_sub(x1, &x3, p), p), y1, p);
    G1Point::Affine { x: x3, y: y3 }
}

/// Double-and-add scalar multiplication. Records one scalar mult; the
/// internal additions are part of the op and are not tallied separately.
pub fn point_mul(k: &Scalar, a: &G1Point, params: &GroupParams, rec: Option<&OpCounter>) -> G1Point {
    record(rec, OpCounter::bump_scalar_mult);
    mul_raw(k.value(), a, &params.p)
}

pub(crate) fn mul_raw(k: &BigUint, a: &G1Point, p: &BigUint) -> G1Point {
    let (ax, ay) = match a {
        G1Point::Identity => return G1Point::Identity,
        G1Point::Affine { x, y } => (x, y),
    };
    if k.is_zero() {
        return G1Point::Identity;
    }
    // Jacobian ladder: one field inversion total instead of one per bit.
    let mut acc: Option<Jacobian> = None;
    for i in (0..k.bits()).rev() {
        if let Some(j) = acc.take() {
            acc = jac_double(&j, p);
        }
        if k.bit(i) {
            acc = match acc.take() {
                None => Some(Jacobian {
                    x: ax.clone(),
                    y: ay.clone(),
                    z: BigUint::from(1u8),
                }),
                Some(j) => jac_add_affine(&j, ax, ay, p),
            };
        }
    }
    match acc {
        None => G1Point::Identity,
        Some(j) => jac_to_affine(&j, p),
    }
}

/// (X, Y, Z) with x = X/Z^2, y = Y/Z^3; never materialized with Z = 0.
struct Jacobian {
    x: BigUint,
    y: BigUint,
    z: BigUint,
}

/// None encodes the point at infinity (covers doubling the two-torsion
/// point, where 2Y = 0).
fn jac_double(a: &Jacobian, p: &BigUint) -> Option<Jacobian> {
    if a.y.is_zero() {
        return None;
    }
    let y2 = fp_mul(&a.y, &a.y, p);
    let s = fp_mul(&BigUint::from(4u8), &fp_mul(&a.x, &y2, p), p);
    // M = 3X^2 + Z^4 (curve coefficient a = 1)
    let x2 = fp_mul(&a.x, &a.x, p);
    let z2 = fp_mul(&a.z, &a.z, p);
    let m = fp_add(
        &fp_mul(&BigUint::from(3u8), &x2, p),
        &fp_mul(&z2, &z2, p),
        p,
    );
    let x3 = fp_sub(&fp_mul(&m, &m, p), &fp_add(&s, &s, p), p);
    let y4 = fp_mul(&y2, &y2, p);
    let y3 = fp_sub(
        &fp_mul(&m, &fp_sub(&s, &x3, p), p),
        &fp_mul(&BigUint::from(8u8), &y4, p),
        p,
    );
    let z3 = fp_mul(&fp_add(&a.y, &a.y, p), &a.z, p);
    Some(Jacobian {
        x: x3,
        y: y3,
        z: z3,
    })
}

fn jac_add_affine(a: &Jacobian, bx: &BigUint, by: &BigUint, p: &BigUint) -> Option<Jacobian> {
    let z1z1 = fp_mul(&a.z, &a.z, p);
    let u2 = fp_mul(bx, &z1z1, p);
    let s2 = fp_mul(by, &fp_mul(&a.z, &z1z1, p), p);
    let h = fp_sub(&u2, &a.x, p);
    let r = fp_sub(&s2, &a.y, p);
    if h.is_zero() {
        if r.is_zero() {
            return jac_double(a, p);
        }
        return None;
    }
    let hh = fp_mul(&h, &h, p);
    let hhh = fp_mul(&h, &hh, p);
    let v = fp_mul(&a.x, &hh, p);
    let x3 = fp_sub(&fp_sub(&fp_mul(&r, &r, p), &hhh, p), &fp_add(&v, &v, p), p);
    let y3 = fp_sub(
        &fp_mul(&r, &fp_sub(&v, &x3, p), p),
        &fp_mul(&a.y, &hhh, p),
        p,
    );
    let z3 = fp_mul(&a.z, &h, p);
    Some(Jacobian {
        x: x3,
        y: y3,
        z: z3,
    })
}

fn jac_to_affine(a: &Jacobian, p: &BigUint) -> G1Point {
    let zinv = fp_inv(&a.z, p).expect("nonzero z");
    let zinv2 = fp_mul(&zinv, &zinv, p);
    G1Point::Affine {
        x: fp_mul(&a.x, &zinv2, p),
        y: fp_mul(&a.y, &fp_mul(&zinv2, &zinv, p), p),
    }
}

/// Membership test for the order-q subgroup.
pub fn in_subgroup(pt: &G1Point, params: &GroupParams) -> bool {
    is_on_curve(pt, params) && mul_raw(&params.q, pt, &params.p).is_identity()
}
