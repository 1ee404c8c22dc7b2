use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::AlgebraError;

/// An element of Z_q, always stored reduced.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(BigUint);

impl Scalar {
    pub fn new(value: BigUint, q: &BigUint) -> Self {
        Scalar(value % q)
    }

    pub fn from_u64(value: u64, q: &BigUint) -> Self {
        Scalar(BigUint::from(value) % q)
    }

    pub fn zero() -> Self {
        Scalar(BigUint::zero())
    }

    pub fn one() -> Self {
        Scalar(BigUint::one())
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, o: &Scalar, q: &BigUint) -> Scalar {
        Scalar((&self.0 + &o.0) % q)
    }

    pub fn sub(&self, o: &Scalar, q: &BigUint) -> Scalar {
        if self.0 >= o.0 {
            Scalar(&self.0 - &o.0)
        } else {
            Scalar(q - (&o.0 - &self.0))
        }
    }

    pub fn mul(&self, o: &Scalar, q: &BigUint) -> Scalar {
        Scalar((&self.0 * &o.0) % q)
    }

    pub fn neg(&self, q: &BigUint) -> Scalar {
        if self.0.is_zero() {
            Scalar::zero()
        } else {
            Scalar(q - &self.0)
        }
    }

    pub fn inv(&self, q: &BigUint) -> Result<Scalar, AlgebraError> {
        self.0
            .modinv(q)
            .map(Scalar)
            .ok_or(AlgebraError::NonInvertible)
    }
}
