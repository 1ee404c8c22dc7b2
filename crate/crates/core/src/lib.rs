//! The VDAS certificateless aggregate signature protocol.
//!
//! Four stages over the pairing algebra: system setup (master key s,
//! P0 = s*P), registration (partial private key D = s*H1(ID) plus a
//! self-chosen secret value), per-terminal signing bound to a broadcast
//! state string, and constant-pairing-count aggregate verification.

mod error;
mod protocol;
mod types;
pub mod wire;

pub use error::CoreError;
pub use protocol::{
    aggregate, aggregate_verify, extract_partial_key, hash_identity, register, session_point,
    setup, setup_with_master_scalar, sign, user_key_from_secret, user_keygen,
    validate_partial_key, validate_record,
    verify_equation, verify_individual, QiSource,
};
pub use types::{
    AggregateSignature, Identity, IndividualSignature, MasterKey, RegistrationRecord, StateInfo,
    SystemParams, TerminalKeys,
};
