//! Protocol state: system parameters, keys, records, and signatures.

use vdas_algebra::{G1Point, GroupParams, Scalar};

use crate::error::CoreError;

/// Public output of system setup: the group context plus the master public
/// key P0 = s*P.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemParams {
    pub group: GroupParams,
    pub p0: G1Point,
    /// Free-form description of the signed payload space.
    pub data_space_note: String,
}

/// The KGC's master secret.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MasterKey {
    pub s: Scalar,
}

/// A terminal identity, an arbitrary non-empty byte string.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Identity(Vec<u8>);

impl Identity {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Result<Self, CoreError> {
        let bytes = bytes.into();
        if bytes.is_empty() {
            return Err(CoreError::EmptyIdentity);
        }
        Ok(Identity(bytes))
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// A terminal's full key material: the hashed identity point Q, the
/// KGC-issued partial private key D = s*Q, the self-chosen secret x, and
/// the public key Ppub = x*P.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TerminalKeys {
    pub identity: Identity,
    pub q: G1Point,
    pub d: G1Point,
    pub x: Scalar,
    pub ppub: G1Point,
}

/// What the KGC pushes to the data center: <ID, Q, Ppub>.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegistrationRecord {
    pub identity: Identity,
    pub q: G1Point,
    pub ppub: G1Point,
}

/// Per-session state information, broadcast before signing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StateInfo(Vec<u8>);

impl StateInfo {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Result<Self, CoreError> {
        let bytes = bytes.into();
        if bytes.is_empty() {
            return Err(CoreError::EmptyStateInfo);
        }
        Ok(StateInfo(bytes))
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndividualSignature {
    pub r: G1Point,
    pub v: G1Point,
}

/// The aggregated signature. `n` is bookkeeping metadata and never enters
/// the wire body, which stays at two points regardless of batch size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AggregateSignature {
    pub r: G1Point,
    pub v: G1Point,
    pub n: usize,
}
