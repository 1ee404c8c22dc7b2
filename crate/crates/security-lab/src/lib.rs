//! Executable algebra from the scheme's unforgeability argument.
//!
//! Two identities carry the reduction: a simulator can answer signing
//! queries without any partial private key by programming the session
//! point as U = lambda*P - P0, and two forgeries that differ only in the
//! g-scalar let the challenger peel out D = s*Q, which is the CDH answer
//! ab*P when P0 = a*P and Q = b*P. Both are mechanized here; the
//! random-oracle bookkeeping around them is not.

use thiserror::Error;
use vdas_algebra::{
    point_add, point_mul, point_neg, random_nonzero_scalar, seeded_rng, G1Point, GroupParams,
    Scalar,
};
use vdas_core::{IndividualSignature, SystemParams};

mod tamper;

pub use tamper::{run_tamper_suite, AttackKind, TamperConfig, TamperReport, TrialLine};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SecurityLabError {
    #[error("forked scalars are equal; difference is not invertible")]
    NonInvertibleFork,
}

/// Simulator state for one session point: U_sim = lambda*P - P0, plus the
/// CDH instance roles (a_point plays P0, b_point plays the target Q).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimulatedOracleState {
    pub lambda: Scalar,
    pub u_sim: G1Point,
    pub a_point: G1Point,
    pub b_point: G1Point,
}

impl SimulatedOracleState {
    pub fn new(lambda: Scalar, sys: &SystemParams, b_point: G1Point) -> Self {
        let group = &sys.group;
        let lambda_p = point_mul(&lambda, &group.generator, group, None);
        let u_sim = point_add(&lambda_p, &point_neg(&sys.p0, group), group, None);
        SimulatedOracleState {
            lambda,
            u_sim,
            a_point: sys.p0.clone(),
            b_point,
        }
    }
}

/// Signing-query simulation: R = r*P + g*Q - h*Ppub and
/// V = lambda*g*Q + r*lambda*P - r*P0. The output satisfies the
/// verification equation under U_sim with no partial private key involved.
pub fn simulate_sign(
    state: &SimulatedOracleState,
    sys: &SystemParams,
    q: &G1Point,
    ppub: &G1Point,
    h: &Scalar,
    g: &Scalar,
    rng_seed: &[u8],
) -> IndividualSignature {
    let mut rng = seeded_rng("security-sim-sign", rng_seed);
    let r = random_nonzero_scalar(&mut rng, &sys.group);
    simulate_sign_with_nonce(state, sys, q, ppub, h, g, &r)
}

/// Same construction with a caller-chosen nonce, so tests can replay the
/// proof's intermediate lines.
pub fn simulate_sign_with_nonce(
    state: &SimulatedOracleState,
    sys: &SystemParams,
    q: &G1Point,
    ppub: &G1Point,
    h: &Scalar,
    g: &Scalar,
    r: &Scalar,
) -> IndividualSignature {
    let group = &sys.group;
    let p = &group.generator;
    let r_p = point_mul(r, p, group, None);
    let g_q = point_mul(g, q, group, None);
    let h_ppub = point_mul(h, ppub, group, None);
    let big_r = point_add(
        &point_add(&r_p, &g_q, group, None),
        &point_neg(&h_ppub, group),
        group,
        None,
    );
    // V = lambda*(g*Q) + (r*lambda)*P - r*P0
    let lambda_g_q = point_mul(&state.lambda, &g_q, group, None);
    let r_lambda = r.mul(&state.lambda, &group.q);
    let r_lambda_p = point_mul(&r_lambda, p, group, None);
    let r_p0 = point_mul(r, &sys.p0, group, None);
    let v = point_add(
        &point_add(&lambda_g_q, &r_lambda_p, group, None),
        &point_neg(&r_p0, group),
        group,
        None,
    );
    IndividualSignature { r: big_r, v }
}

/// Forking extraction: (g - g')^{-1} * (V - V'). For two signatures over
/// identical (r, h, x, D, U) differing only in g this is exactly D; on a
/// rigged instance with P0 = a*P and Q = b*P it is ab*P.
pub fn forking_extract(
    v: &G1Point,
    v_prime: &G1Point,
    g: &Scalar,
    g_prime: &Scalar,
    group: &GroupParams,
) -> Result<G1Point, SecurityLabError> {
    if g == g_prime {
        return Err(SecurityLabError::NonInvertibleFork);
    }
    let diff = g.sub(g_prime, &group.q);
    let inv = diff.inv(&group.q).map_err(|_| SecurityLabError::NonInvertibleFork)?;
    let v_diff = point_add(v, &point_neg(v_prime, group), group, None);
    Ok(point_mul(&inv, &v_diff, group, None))
}

/// A CDH instance <P, aP, bP>. The scalars are retained for test-side
/// checking only; the extraction path never touches them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CdhInstance {
    pub base: G1Point,
    pub a_point: G1Point,
    pub b_point: G1Point,
    pub a: Option<Scalar>,
    pub b: Option<Scalar>,
}

impl CdhInstance {
    /// Builds an instance with known exponents, retained for checking.
    pub fn rigged(group: &GroupParams, a: Scalar, b: Scalar) -> Self {
        let base = group.generator.clone();
        CdhInstance {
            a_point: point_mul(&a, &base, group, None),
            b_point: point_mul(&b, &base, group, None),
            base,
            a: Some(a),
            b: Some(b),
        }
    }

    /// True when `candidate` equals ab*P; requires the retained scalars.
    pub fn is_solution(&self, candidate: &G1Point, group: &GroupParams) -> bool {
        match (&self.a, &self.b) {
            (Some(a), Some(b)) => {
                let ab = a.mul(b, &group.q);
                *candidate == point_mul(&ab, &self.base, group, None)
            }
            _ => false,
        }
    }
}
