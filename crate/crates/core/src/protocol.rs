//! The four protocol stages: setup, registration, individual signing, and
//! aggregate verification.
//!
//! Hash inputs are composed with 4-byte length prefixes on every field and
//! points enter hashes in their wire encoding, so no two distinct field
//! tuples can collide.

use vdas_algebra::{
    encode_point, frame_fields, hash_to_point, hash_to_scalar, in_subgroup, pairing, point_add,
    point_mul, random_nonzero_scalar, seeded_rng, G1Point, GroupParams, OpCounter, Scalar,
};

use crate::error::CoreError;
use crate::types::{
    AggregateSignature, Identity, IndividualSignature, MasterKey, RegistrationRecord, StateInfo,
    SystemParams, TerminalKeys,
};

/// Where the verifier takes Q_i from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum QiSource {
    /// Use the Q_i cached in the registration record (validated once when
    /// the record was accepted).
    #[default]
    Cached,
    /// Recompute Q_i = H1(ID_i) per verification, matching the cost
    /// model's (n+1)H accounting.
    RecomputeFaithful,
}

/// System Setup: draw the master key s and publish P0 = s*P.
pub fn setup(group: &GroupParams, rng_seed: &[u8]) -> (SystemParams, MasterKey) {
    let mut rng = seeded_rng("vdas-setup", rng_seed);
    let s = random_nonzero_scalar(&mut rng, group);
    setup_with_master_scalar(group, s)
}

/// Test hook: setup with a caller-chosen master scalar.
pub fn setup_with_master_scalar(group: &GroupParams, s: Scalar) -> (SystemParams, MasterKey) {
    let p0 = point_mul(&s, &group.generator, group, None);
    (
        SystemParams {
            group: group.clone(),
            p0,
            data_space_note: "data in {0,1}*".to_string(),
        },
        MasterKey { s },
    )
}

/// Registration, KGC side: Q = H1(ID), D = s*Q.
pub fn extract_partial_key(
    msk: &MasterKey,
    id: &Identity,
    sys: &SystemParams,
) -> (G1Point, G1Point) {
    let q = hash_identity(id, &sys.group);
    let d = point_mul(&msk.s, &q, &sys.group, None);
    (q, d)
}

/// Registration, terminal side: secret value x and public key Ppub = x*P.
pub fn user_keygen(sys: &SystemParams, rng_seed: &[u8]) -> (Scalar, G1Point) {
    let mut rng = seeded_rng("vdas-user-keygen", rng_seed);
    let x = random_nonzero_scalar(&mut rng, &sys.group);
    let ppub = point_mul(&x, &sys.group.generator, &sys.group, None);
    (x, ppub)
}

/// Test hook: derive the public half from a caller-chosen secret value.
pub fn user_key_from_secret(sys: &SystemParams, x: Scalar) -> (Scalar, G1Point) {
    let ppub = point_mul(&x, &sys.group.generator, &sys.group, None);
    (x, ppub)
}

/// Full registration for one terminal: both halves of the key plus the
/// record the KGC forwards to the data center.
pub fn register(
    msk: &MasterKey,
    sys: &SystemParams,
    id: Identity,
    rng_seed: &[u8],
) -> (TerminalKeys, RegistrationRecord) {
    let (q, d) = extract_partial_key(msk, &id, sys);
    let (x, ppub) = user_keygen(sys, rng_seed);
    let keys = TerminalKeys {
        identity: id.clone(),
        q: q.clone(),
        d,
        x,
        ppub: ppub.clone(),
    };
    let record = RegistrationRecord {
        identity: id,
        q,
        ppub,
    };
    (keys, record)
}

pub fn hash_identity(id: &Identity, group: &GroupParams) -> G1Point {
    hash_to_point(id.as_bytes(), group, None).expect("hash-to-point iteration cap")
}

fn hash_identity_rec(id: &Identity, group: &GroupParams, rec: Option<&OpCounter>) -> G1Point {
    hash_to_point(id.as_bytes(), group, rec).expect("hash-to-point iteration cap")
}

/// h_i = h2(data || delta || ID_i)
fn binding_scalar_h(
    data: &[u8],
    delta: &StateInfo,
    id: &Identity,
    group: &GroupParams,
    rec: Option<&OpCounter>,
) -> Scalar {
    let msg = frame_fields(&[data, delta.as_bytes(), id.as_bytes()]);
    hash_to_scalar(&msg, group, rec)
}

/// g_i = h2(data || delta || P_i)
fn binding_scalar_g(
    data: &[u8],
    delta: &StateInfo,
    ppub: &G1Point,
    group: &GroupParams,
    rec: Option<&OpCounter>,
) -> Scalar {
    let msg = frame_fields(&[data, delta.as_bytes(), &encode_point(ppub, group)]);
    hash_to_scalar(&msg, group, rec)
}

/// U = H1(delta || P0), the session point every signature in a batch binds
/// to.
pub fn session_point(sys: &SystemParams, delta: &StateInfo, rec: Option<&OpCounter>) -> G1Point {
    let msg = frame_fields(&[delta.as_bytes(), &encode_point(&sys.p0, &sys.group)]);
    hash_to_point(&msg, &sys.group, rec).expect("hash-to-point iteration cap")
}

/// Individual Signing: R = r*P, V = g*D + (x*h + r)*U.
///
/// Counted work is exactly three scalar multiplications and one
/// hash-to-group; (x*h + r) is reduced mod q before the single
/// multiplication by U.
pub fn sign(
    sys: &SystemParams,
    keys: &TerminalKeys,
    delta: &StateInfo,
    data: &[u8],
    rng_seed: &[u8],
    rec: Option<&OpCounter>,
) -> IndividualSignature {
    let group = &sys.group;
    let mut rng = seeded_rng("vdas-sign", rng_seed);
    let r = random_nonzero_scalar(&mut rng, group);
    let big_r = point_mul(&r, &group.generator, group, rec);
    let h = binding_scalar_h(data, delta, &keys.identity, group, rec);
    let g = binding_scalar_g(data, delta, &keys.ppub, group, rec);
    let u = session_point(sys, delta, rec);
    let g_d = point_mul(&g, &keys.d, group, rec);
    let xh_r = keys.x.mul(&h, &group.q).add(&r, &group.q);
    let xh_r_u = point_mul(&xh_r, &u, group, rec);
    let v = point_add(&g_d, &xh_r_u, group, None);
    IndividualSignature { r: big_r, v }
}

/// The raw three-pairing check e(V, P) = e(g*Q, P0) * e(h*Ppub + R, U),
/// with the session point supplied by the caller. The security lab reuses
/// this with a programmed U.
pub fn verify_equation(
    sys: &SystemParams,
    q: &G1Point,
    ppub: &G1Point,
    h: &Scalar,
    g: &Scalar,
    u: &G1Point,
    sig: &IndividualSignature,
    rec: Option<&OpCounter>,
) -> bool {
    let group = &sys.group;
    let lhs = pairing(&sig.v, &group.generator, group, rec);
    let g_q = point_mul(g, q, group, rec);
    let rhs_1 = pairing(&g_q, &sys.p0, group, rec);
    let h_p = point_mul(h, ppub, group, rec);
    let h_p_r = point_add(&h_p, &sig.r, group, None);
    let rhs_2 = pairing(&h_p_r, u, group, rec);
    lhs == rhs_1.mul(&rhs_2, group)
}

/// Verification of a single signature (the aggregate equation at n = 1).
/// Malformed points reject; this never panics on adversarial input.
pub fn verify_individual(
    sys: &SystemParams,
    record: &RegistrationRecord,
    delta: &StateInfo,
    data: &[u8],
    sig: &IndividualSignature,
    rec: Option<&OpCounter>,
) -> bool {
    let group = &sys.group;
    if !in_subgroup(&sig.r, group) || !in_subgroup(&sig.v, group) {
        return false;
    }
    if !in_subgroup(&record.q, group) || !in_subgroup(&record.ppub, group) {
        return false;
    }
    let h = binding_scalar_h(data, delta, &record.identity, group, rec);
    let g = binding_scalar_g(data, delta, &record.ppub, group, rec);
    let u = session_point(sys, delta, rec);
    verify_equation(sys, &record.q, &record.ppub, &h, &g, &u, sig, rec)
}

/// Component-wise sum of the individual signatures.
pub fn aggregate(
    sigs: &[IndividualSignature],
    group: &GroupParams,
) -> Result<AggregateSignature, CoreError> {
    if sigs.is_empty() {
        return Err(CoreError::EmptyBatch);
    }
    let mut r = G1Point::Identity;
    let mut v = G1Point::Identity;
    for sig in sigs {
        r = point_add(&r, &sig.r, group, None);
        v = point_add(&v, &sig.v, group, None);
    }
    Ok(AggregateSignature {
        r,
        v,
        n: sigs.len(),
    })
}

/// Aggregate Verification: three pairings regardless of batch size.
///
/// In `QiSource::RecomputeFaithful` mode the per-signer identity points are
/// re-hashed, for (n+1) hash-to-group evaluations; the default trusts the
/// validated registration records and hashes only the session point.
pub fn aggregate_verify(
    sys: &SystemParams,
    records: &[RegistrationRecord],
    delta: &StateInfo,
    data_list: &[Vec<u8>],
    agg: &AggregateSignature,
    qi_source: QiSource,
    rec: Option<&OpCounter>,
) -> Result<bool, CoreError> {
    let group = &sys.group;
    if records.is_empty() {
        return Err(CoreError::EmptyBatch);
    }
    if records.len() != data_list.len() {
        return Err(CoreError::LengthMismatch {
            records: records.len(),
            data: data_list.len(),
        });
    }
    if !in_subgroup(&agg.r, group) || !in_subgroup(&agg.v, group) {
        return Ok(false);
    }
    let u = session_point(sys, delta, rec);
    let mut sum_g_q = G1Point::Identity;
    let mut sum_h_p = G1Point::Identity;
    for (record, data) in records.iter().zip(data_list) {
        let h = binding_scalar_h(data, delta, &record.identity, group, rec);
        let g = binding_scalar_g(data, delta, &record.ppub, group, rec);
        let q_i = match qi_source {
            QiSource::Cached => record.q.clone(),
            QiSource::RecomputeFaithful => hash_identity_rec(&record.identity, group, rec),
        };
        sum_g_q = point_add(&sum_g_q, &point_mul(&g, &q_i, group, rec), group, None);
        sum_h_p = point_add(&sum_h_p, &point_mul(&h, &record.ppub, group, rec), group, None);
    }
    let lhs = pairing(&agg.v, &group.generator, group, rec);
    let rhs_1 = pairing(&sum_g_q, &sys.p0, group, rec);
    let sum_h_p_r = point_add(&sum_h_p, &agg.r, group, None);
    let rhs_2 = pairing(&sum_h_p_r, &u, group, rec);
    Ok(lhs == rhs_1.mul(&rhs_2, group))
}

/// Publicly checkable validity of a registration record: Q must equal
/// H1(ID) and both points must live in the right subgroup.
pub fn validate_record(record: &RegistrationRecord, sys: &SystemParams) -> bool {
    in_subgroup(&record.ppub, &sys.group)
        && record.q == hash_identity(&record.identity, &sys.group)
}

/// Partial-key validity relation e(D, P) = e(Q, P0).
pub fn validate_partial_key(keys: &TerminalKeys, sys: &SystemParams) -> bool {
    let group = &sys.group;
    pairing(&keys.d, &group.generator, group, None)
        == pairing(&keys.q, &sys.p0, group, None)
}
