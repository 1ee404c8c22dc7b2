//! Wire formats and key-file envelopes.
//!
//! Signature bodies are binary: a tag byte (0x53 individual, 0x41
//! aggregate) followed by the two point encodings. Everything that lands
//! on disk travels in a structured-text envelope with a `paramset:` header
//! and a lowercase-hex payload.

use std::collections::BTreeMap;

use vdas_algebra::{
    by_label, decode_point, decode_scalar, encode_point, encode_scalar, point_encoded_len,
    scalar_len, DecodeError, GroupParams,
};

use crate::error::CoreError;
use crate::types::{
    AggregateSignature, Identity, IndividualSignature, MasterKey, RegistrationRecord, StateInfo,
    SystemParams, TerminalKeys,
};

pub const TAG_INDIVIDUAL: u8 = 0x53; // 'S'
pub const TAG_AGGREGATE: u8 = 0x41; // 'A'

/// Body length of either signature kind: tag plus two encoded points.
pub fn signature_body_len(group: &GroupParams) -> usize {
    1 + 2 * point_encoded_len(group)
}

fn encode_signature_body(tag: u8, r: &vdas_algebra::G1Point, v: &vdas_algebra::G1Point, group: &GroupParams) -> Vec<u8> {
    let mut out = Vec::with_capacity(signature_body_len(group));
    out.push(tag);
    out.extend_from_slice(&encode_point(r, group));
    out.extend_from_slice(&encode_point(v, group));
    out
}

fn decode_signature_body(
    tag: u8,
    bytes: &[u8],
    group: &GroupParams,
) -> Result<(vdas_algebra::G1Point, vdas_algebra::G1Point), CoreError> {
    let expected = signature_body_len(group);
    if bytes.len() != expected {
        return Err(DecodeError::WrongLength {
            expected,
            got: bytes.len(),
        }
        .into());
    }
    if bytes[0] != tag {
        return Err(DecodeError::BadTag(bytes[0]).into());
    }
    let w = point_encoded_len(group);
    let r = decode_point(&bytes[1..1 + w], group)?;
    let v = decode_point(&bytes[1 + w..], group)?;
    // identity components are legal algebra but malformed wire
    if r.is_identity() || v.is_identity() {
        return Err(CoreError::IdentityPointInSignature);
    }
    Ok((r, v))
}

pub fn encode_individual(sig: &IndividualSignature, group: &GroupParams) -> Vec<u8> {
    encode_signature_body(TAG_INDIVIDUAL, &sig.r, &sig.v, group)
}

pub fn decode_individual(bytes: &[u8], group: &GroupParams) -> Result<IndividualSignature, CoreError> {
    let (r, v) = decode_signature_body(TAG_INDIVIDUAL, bytes, group)?;
    Ok(IndividualSignature { r, v })
}

pub fn encode_aggregate(agg: &AggregateSignature, group: &GroupParams) -> Vec<u8> {
    encode_signature_body(TAG_AGGREGATE, &agg.r, &agg.v, group)
}

/// `n` is envelope metadata, not part of the body; callers pass it back in.
pub fn decode_aggregate(
    bytes: &[u8],
    group: &GroupParams,
    n: usize,
) -> Result<AggregateSignature, CoreError> {
    let (r, v) = decode_signature_body(TAG_AGGREGATE, bytes, group)?;
    Ok(AggregateSignature { r, v, n })
}

/// A structured-text file: `paramset:` and `type:` headers, optional extra
/// `key: value` lines, and a lowercase-hex `payload:`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Envelope {
    pub kind: String,
    pub paramset: String,
    pub fields: BTreeMap<String, String>,
    pub payload: Vec<u8>,
}

impl Envelope {
    pub fn new(kind: &str, paramset: &str, payload: Vec<u8>) -> Self {
        Envelope {
            kind: kind.to_string(),
            paramset: paramset.to_string(),
            fields: BTreeMap::new(),
            payload,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("paramset: {}\n", self.paramset));
        out.push_str(&format!("type: {}\n", self.kind));
        for (k, v) in &self.fields {
            out.push_str(&format!("{k}: {v}\n"));
        }
        out.push_str(&format!("payload: {}\n", hex::encode(&self.payload)));
        out
    }

    pub fn from_text(text: &str) -> Result<Self, CoreError> {
        let mut paramset = None;
        let mut kind = None;
        let mut payload = None;
        let mut fields = BTreeMap::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once(':')
                .ok_or_else(|| CoreError::Envelope(format!("bad line: {line}")))?;
            let (k, v) = (k.trim(), v.trim());
            match k {
                "paramset" => paramset = Some(v.to_string()),
                "type" => kind = Some(v.to_string()),
                "payload" => {
                    payload = Some(
                        hex::decode(v)
                            .map_err(|e| CoreError::Envelope(format!("bad payload hex: {e}")))?,
                    )
                }
                _ => {
                    fields.insert(k.to_string(), v.to_string());
                }
            }
        }
        Ok(Envelope {
            kind: kind.ok_or_else(|| CoreError::Envelope("missing type".into()))?,
            paramset: paramset.ok_or_else(|| CoreError::Envelope("missing paramset".into()))?,
            fields,
            payload: payload.ok_or_else(|| CoreError::Envelope("missing payload".into()))?,
        })
    }

    pub fn expect_kind(&self, kind: &str) -> Result<(), CoreError> {
        if self.kind != kind {
            return Err(CoreError::Envelope(format!(
                "expected type {kind}, found {}",
                self.kind
            )));
        }
        Ok(())
    }

    pub fn group(&self) -> Result<GroupParams, CoreError> {
        by_label(&self.paramset).ok_or_else(|| CoreError::UnknownParamSet(self.paramset.clone()))
    }
}

// byte-slice composition helpers for multi-field payloads

fn put_var(out: &mut Vec<u8>, bytes: &[u8]) {
    out.extend_from_slice(&(bytes.len() as u32).to_be_bytes());
    out.extend_from_slice(bytes);
}

struct Reader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn new(buf: &'a [u8]) -> Self {
        Reader { buf, pos: 0 }
    }

    fn take(&mut self, n: usize) -> Result<&'a [u8], CoreError> {
        if self.pos + n > self.buf.len() {
            return Err(CoreError::Envelope("truncated payload".into()));
        }
        let out = &self.buf[self.pos..self.pos + n];
        self.pos += n;
        Ok(out)
    }

    fn take_var(&mut self) -> Result<&'a [u8], CoreError> {
        let len = u32::from_be_bytes(self.take(4)?.try_into().unwrap()) as usize;
        self.take(len)
    }

    fn finish(&self) -> Result<(), CoreError> {
        if self.pos != self.buf.len() {
            return Err(CoreError::Envelope("trailing bytes in payload".into()));
        }
        Ok(())
    }
}

pub fn system_params_to_text(sys: &SystemParams) -> String {
    let mut env = Envelope::new(
        "system-params",
        &sys.group.security_label,
        encode_point(&sys.p0, &sys.group),
    );
    env.fields
        .insert("data-space".into(), sys.data_space_note.clone());
    env.to_text()
}

pub fn system_params_from_text(text: &str) -> Result<SystemParams, CoreError> {
    let env = Envelope::from_text(text)?;
    env.expect_kind("system-params")?;
    let group = env.group()?;
    let p0 = decode_point(&env.payload, &group)?;
    Ok(SystemParams {
        group,
        p0,
        data_space_note: env
            .fields
            .get("data-space")
            .cloned()
            .unwrap_or_default(),
    })
}

pub fn master_key_to_text(msk: &MasterKey, sys: &SystemParams) -> String {
    Envelope::new(
        "master-key",
        &sys.group.security_label,
        encode_scalar(&msk.s, &sys.group),
    )
    .to_text()
}

pub fn master_key_from_text(text: &str) -> Result<MasterKey, CoreError> {
    let env = Envelope::from_text(text)?;
    env.expect_kind("master-key")?;
    let group = env.group()?;
    Ok(MasterKey {
        s: decode_scalar(&env.payload, &group)?,
    })
}

pub fn terminal_keys_to_text(keys: &TerminalKeys, group: &GroupParams) -> String {
    let mut payload = Vec::new();
    put_var(&mut payload, keys.identity.as_bytes());
    payload.extend_from_slice(&encode_point(&keys.q, group));
    payload.extend_from_slice(&encode_point(&keys.d, group));
    payload.extend_from_slice(&encode_scalar(&keys.x, group));
    payload.extend_from_slice(&encode_point(&keys.ppub, group));
    Envelope::new("terminal-keys", &group.security_label, payload).to_text()
}

pub fn terminal_keys_from_text(text: &str) -> Result<(TerminalKeys, GroupParams), CoreError> {
    let env = Envelope::from_text(text)?;
    env.expect_kind("terminal-keys")?;
    let group = env.group()?;
    let w = point_encoded_len(&group);
    let mut r = Reader::new(&env.payload);
    let identity = Identity::new(r.take_var()?.to_vec())?;
    let q = decode_point(r.take(w)?, &group)?;
    let d = decode_point(r.take(w)?, &group)?;
    let x = decode_scalar(r.take(scalar_len(&group))?, &group)?;
    let ppub = decode_point(r.take(w)?, &group)?;
    r.finish()?;
    Ok((
        TerminalKeys {
            identity,
            q,
            d,
            x,
            ppub,
        },
        group,
    ))
}

pub fn registration_record_to_text(record: &RegistrationRecord, group: &GroupParams) -> String {
    let mut payload = Vec::new();
    put_var(&mut payload, record.identity.as_bytes());
    payload.extend_from_slice(&encode_point(&record.q, group));
    payload.extend_from_slice(&encode_point(&record.ppub, group));
    Envelope::new("registration-record", &group.security_label, payload).to_text()
}

pub fn registration_record_from_text(
    text: &str,
) -> Result<(RegistrationRecord, GroupParams), CoreError> {
    let env = Envelope::from_text(text)?;
    env.expect_kind("registration-record")?;
    let group = env.group()?;
    let w = point_encoded_len(&group);
    let mut r = Reader::new(&env.payload);
    let identity = Identity::new(r.take_var()?.to_vec())?;
    let q = decode_point(r.take(w)?, &group)?;
    let ppub = decode_point(r.take(w)?, &group)?;
    r.finish()?;
    Ok((RegistrationRecord { identity, q, ppub }, group))
}

pub fn individual_signature_to_text(sig: &IndividualSignature, group: &GroupParams) -> String {
    Envelope::new(
        "individual-signature",
        &group.security_label,
        encode_individual(sig, group),
    )
    .to_text()
}

pub fn individual_signature_from_text(
    text: &str,
) -> Result<(IndividualSignature, GroupParams), CoreError> {
    let env = Envelope::from_text(text)?;
    env.expect_kind("individual-signature")?;
    let group = env.group()?;
    Ok((decode_individual(&env.payload, &group)?, group))
}

pub fn aggregate_signature_to_text(agg: &AggregateSignature, group: &GroupParams) -> String {
    let mut env = Envelope::new(
        "aggregate-signature",
        &group.security_label,
        encode_aggregate(agg, group),
    );
    env.fields.insert("n".into(), agg.n.to_string());
    env.to_text()
}

pub fn aggregate_signature_from_text(
    text: &str,
) -> Result<(AggregateSignature, GroupParams), CoreError> {
    let env = Envelope::from_text(text)?;
    env.expect_kind("aggregate-signature")?;
    let group = env.group()?;
    let n = env
        .fields
        .get("n")
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| CoreError::Envelope("missing or bad n".into()))?;
    Ok((decode_aggregate(&env.payload, &group, n)?, group))
}

pub fn state_info_to_hex(delta: &StateInfo) -> String {
    hex::encode(delta.as_bytes())
}

pub fn state_info_from_hex(s: &str) -> Result<StateInfo, CoreError> {
    let bytes = hex::decode(s.trim())
        .map_err(|e| CoreError::Envelope(format!("bad state-info hex: {e}")))?;
    StateInfo::new(bytes)
}
