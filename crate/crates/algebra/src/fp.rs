//! Base-field and quadratic-extension arithmetic.
//!
//! All arithmetic is variable-time. F_{p^2} is F_p[i]/(i^2 + 1), which is a
//! field exactly because every shipped modulus satisfies p = 3 (mod 4).

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub fn fp_add(a: &BigUint, b: &BigUint, p: &BigUint) -> BigUint {
    let mut r = a + b;
    if r >= *p {
        r -= p;
    }
    r
}

pub fn fp_sub(a: &BigUint, b: &BigUint, p: &BigUint) -> BigUint {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

pub fn fp_neg(a: &BigUint, p: &BigUint) -> BigUint {
    if a.is_zero() {
        BigUint::zero()
    } else {
        p - a
    }
}

pub fn fp_mul(a: &BigUint, b: &BigUint, p: &BigUint) -> BigUint {
    (a * b) % p
}

pub fn fp_inv(a: &BigUint, p: &BigUint) -> Option<BigUint> {
    a.modinv(p)
}

/// Legendre-symbol test via Euler's criterion; zero counts as a residue.
pub fn fp_is_square(a: &BigUint, p: &BigUint) -> bool {
    if a.is_zero() {
        return true;
    }
    let e = (p - BigUint::one()) >> 1;
    a.modpow(&e, p).is_one()
}

/// Square root for p = 3 (mod 4): a^((p+1)/4). Returns `None` when `a` is
/// a non-residue.
pub fn fp_sqrt(a: &BigUint, p: &BigUint) -> Option<BigUint> {
    if a.is_zero() {
        return Some(BigUint::zero());
    }
    let e = (p + BigUint::one()) >> 2;
    let r = a.modpow(&e, p);
    if fp_mul(&r, &r, p) == *a {
        Some(r)
    } else {
        None
    }
}

/// Element of F_{p^2}, stored as c0 + c1*i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fp2 {
    pub c0: BigUint,
    pub c1: BigUint,
}

impl Fp2 {
    pub fn zero() -> Self {
        Fp2 {
            c0: BigUint::zero(),
            c1: BigUint::zero(),
        }
    }

    pub fn one() -> Self {
        Fp2 {
            c0: BigUint::one(),
            c1: BigUint::zero(),
        }
    }

    pub fn from_fp(a: BigUint) -> Self {
        Fp2 {
            c0: a,
            c1: BigUint::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.c0.is_one() && self.c1.is_zero()
    }

    pub fn add(&self, o: &Fp2, p: &BigUint) -> Fp2 {
        Fp2 {
            c0: fp_add(&self.c0, &o.c0, p),
            c1: fp_add(&self.c1, &o.c1, p),
        }
    }

    pub fn sub(&self, o: &Fp2, p: &BigUint) -> Fp2 {
        Fp2 {
            c0: fp_sub(&self.c0, &o.c0, p),
            c1: fp_sub(&self.c1, &o.c1, p),
        }
    }

    pub fn neg(&self, p: &BigUint) -> Fp2 {
        Fp2 {
            c0: fp_neg(&self.c0, p),
            c1: fp_neg(&self.c1, p),
        }
    }

    pub fn mul(&self, o: &Fp2, p: &BigUint) -> Fp2 {
        // (a + bi)(c + di) = (ac - bd) + (ad + bc)i
        let ac = fp_mul(&self.c0, &o.c0, p);
        let bd = fp_mul(&self.c1, &o.c1, p);
        let ad = fp_mul(&self.c0, &o.c1, p);
        let bc = fp_mul(&self.c1, &o.c0, p);
        Fp2 {
            c0: fp_sub(&ac, &bd, p),
            c1: fp_add(&ad, &bc, p),
        }
    }

    pub fn square(&self, p: &BigUint) -> Fp2 {
        self.mul(self, p)
    }

    /// Scale by a base-field element.
    pub fn scale(&self, k: &BigUint, p: &BigUint) -> Fp2 {
        Fp2 {
            c0: fp_mul(&self.c0, k, p),
            c1: fp_mul(&self.c1, k, p),
        }
    }

    pub fn conjugate(&self, p: &BigUint) -> Fp2 {
        Fp2 {
            c0: self.c0.clone(),
            c1: fp_neg(&self.c1, p),
        }
    }

    /// (a + bi)^-1 = (a - bi) / (a^2 + b^2). Panics on zero.
    pub fn inv(&self, p: &BigUint) -> Fp2 {
        let norm = fp_add(
            &fp_mul(&self.c0, &self.c0, p),
            &fp_mul(&self.c1, &self.c1, p),
            p,
        );
        let n_inv = fp_inv(&norm, p).expect("inverse of zero in Fp2");
        Fp2 {
            c0: fp_mul(&self.c0, &n_inv, p),
            c1: fp_mul(&fp_neg(&self.c1, p), &n_inv, p),
        }
    }

    pub fn pow(&self, e: &BigUint, p: &BigUint) -> Fp2 {
        let mut acc = Fp2::one();
        if e.is_zero() {
            return acc;
        }
        let bits = e.bits();
        for i in (0..bits).rev() {
            acc = acc.square(p);
            if e.bit(i) {
                acc = acc.mul(self, p);
            }
        }
        acc
    }
}
