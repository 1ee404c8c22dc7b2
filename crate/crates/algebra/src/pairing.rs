//! Reduced Tate pairing on the supersingular curve via Miller's algorithm.
//!
//! The symmetric map is e(A, B) = tate(A, phi(B)) with the distortion map
//! phi(x, y) = (-x, iy). Miller's loop runs over the binary expansion of q
//! with line and vertical denominators kept; the final exponentiation to
//! (p^2 - 1)/q factors as (p - 1) * h, where the p - 1 part is a Frobenius
//! conjugate divided by the value itself.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::counter::{record, OpCounter};
use crate::curve::G1Point;
use crate::fp::{fp_add, fp_inv, fp_mul, fp_neg, fp_sub, Fp2};
use crate::params::GroupParams;

/// An element of the order-q subgroup of F_{p^2}^*.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GtElement(Fp2);

impl GtElement {
    pub fn one() -> Self {
        GtElement(Fp2::one())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn value(&self) -> &Fp2 {
        &self.0
    }

    pub fn mul(&self, o: &GtElement, params: &GroupParams) -> GtElement {
        GtElement(self.0.mul(&o.0, &params.p))
    }

    pub fn pow(&self, e: &BigUint, params: &GroupParams) -> GtElement {
        GtElement(self.0.pow(e, &params.p))
    }

    pub fn inv(&self, params: &GroupParams) -> GtElement {
        GtElement(self.0.inv(&params.p))
    }
}

/// A point with coordinates in F_{p^2}; only the distortion image is ever
/// needed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Fp2Point {
    Identity,
    Affine { x: Fp2, y: Fp2 },
}

/// phi(x, y) = (-x, iy). Identity maps to identity by convention.
pub fn distortion_map(a: &G1Point, params: &GroupParams) -> Fp2Point {
    match a {
        G1Point::Identity => Fp2Point::Identity,
        G1Point::Affine { x, y } => Fp2Point::Affine {
            x: Fp2 {
                c0: fp_neg(x, &params.p),
                c1: BigUint::zero(),
            },
            y: Fp2 {
                c0: BigUint::zero(),
                c1: y.clone(),
            },
        },
    }
}

/// e(a, b) = tate(a, phi(b)), reduced. Records one pairing evaluation.
/// Returns 1 in GT when either input is the identity.
pub fn pairing(a: &G1Point, b: &G1Point, params: &GroupParams, rec: Option<&OpCounter>) -> GtElement {
    record(rec, OpCounter::bump_pairing);
    let (ax, ay) = match a {
        G1Point::Identity => return GtElement::one(),
        G1Point::Affine { x, y } => (x.clone(), y.clone()),
    };
    let Fp2Point::Affine { x: qx, y: qy } = distortion_map(b, params) else {
        return GtElement::one();
    };
    let p = &params.p;
    let f = miller_loop(&(ax, ay), &qx, &qy, &params.q, p);
    // f^(p-1) = conj(f) / f, then raise to h = (p+1)/q
    let reduced = f.conjugate(p).mul(&f.inv(p), p);
    GtElement(reduced.pow(&params.cofactor, p))
}

type AffineFp = (BigUint, BigUint);

fn miller_loop(a: &AffineFp, qx: &Fp2, qy: &Fp2, n: &BigUint, p: &BigUint) -> Fp2 {
    let mut t: Option<AffineFp> = Some(a.clone());
    let mut num = Fp2::one();
    let mut den = Fp2::one();
    for i in (0..n.bits() - 1).rev() {
        num = num.square(p);
        den = den.square(p);
        let (l, v) = double_step(&mut t, qx, qy, p);
        num = num.mul(&l, p);
        den = den.mul(&v, p);
        if n.bit(i) {
            let (l, v) = add_step(&mut t, a, qx, qy, p);
            num = num.mul(&l, p);
            den = den.mul(&v, p);
        }
    }
    num.mul(&den.inv(p), p)
}

/// Evaluates (line through t with slope m) and (vertical at the sum) at Q,
/// in F_{p^2}. l = (Qy - y1) - m*(Qx - x1), v = Qx - x3.
fn eval_line(x1: &BigUint, y1: &BigUint, m: &BigUint, x3: &BigUint, qx: &Fp2, qy: &Fp2, p: &BigUint) -> (Fp2, Fp2) {
    let dx = qx.sub(&Fp2::from_fp(x1.clone()), p);
    let dy = qy.sub(&Fp2::from_fp(y1.clone()), p);
    let l = dy.sub(&dx.scale(m, p), p);
    let v = qx.sub(&Fp2::from_fp(x3.clone()), p);
    (l, v)
}

fn double_step(t: &mut Option<AffineFp>, qx: &Fp2, qy: &Fp2, p: &BigUint) -> (Fp2, Fp2) {
    let Some((x1, y1)) = t.clone() else {
        return (Fp2::one(), Fp2::one());
    };
    if y1.is_zero() {
        // tangent is vertical; 2T = O
        *t = None;
        let l = qx.sub(&Fp2::from_fp(x1), p);
        return (l, Fp2::one());
    }
    let x1_sq = fp_mul(&x1, &x1, p);
    let three_x1_sq = fp_add(&fp_add(&x1_sq, &x1_sq, p), &x1_sq, p);
    let m_num = fp_add(&three_x1_sq, &BigUint::from(1u8), p);
    let m_den = fp_add(&y1, &y1, p);
    let m = fp_mul(&m_num, &fp_inv(&m_den, p).expect("2y invertible"), p);
    let x3 = fp_sub(&fp_sub(&fp_mul(&m, &m, p), &x1, p), &x1, p);
    let y3 = fp_sub(&fp_mul(&m, &fp_sub(&x1, &x3, p), p), &y1, p);
    let out = eval_line(&x1, &y1, &m, &x3, qx, qy, p);
    *t = Some((x3, y3));
    out
}

fn add_step(t: &mut Option<AffineFp>, a: &AffineFp, qx: &Fp2, qy: &Fp2, p: &BigUint) -> (Fp2, Fp2) {
    let Some((x1, y1)) = t.clone() else {
        *t = Some(a.clone());
        return (Fp2::one(), Fp2::one());
    };
    let (x2, y2) = a;
    if x1 == *x2 {
        if y1 == *y2 && !y1.is_zero() {
            return double_step(t, qx, qy, p);
        }
        // T = -A: vertical line, sum is O
        *t = None;
        let l = qx.sub(&Fp2::from_fp(x1), p);
        return (l, Fp2::one());
    }
    let m = fp_mul(
        &fp_sub(y2, &y1, p),
        &fp_inv(&fp_sub(x2, &x1, p), p).expect("x2-x1 invertible"),
        p,
    );
    let x3 = fp_sub(&fp_sub(&fp_mul(&m, &m, p), &x1, p), x2, p);
    let y3 = fp_sub(&fp_mul(&m, &fp_sub(&x1, &x3, p), p), &y1, p);
    let out = eval_line(&x1, &y1, &m, &x3, qx, qy, p);
    *t = Some((x3, y3));
    out
}
