//! Pairing-friendly parameter sets and their generation.
//!
//! The curve is always y^2 = x^3 + x over F_p with p = 3 (mod 4), which is
//! supersingular with #E(F_p) = p + 1 and admits the distortion map
//! (x, y) -> (-x, iy). Subgroup order q divides p + 1 with cofactor h.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::curve::{is_on_curve, mul_raw, G1Point};
use crate::error::AlgebraError;
use crate::fp::{fp_add, fp_is_square, fp_mul, fp_sqrt};
use crate::rng::{random_below, seeded_rng};

/// The pairing context: base field, subgroup order, cofactor, generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupParams {
    pub p: BigUint,
    pub q: BigUint,
    pub cofactor: BigUint,
    pub generator: G1Point,
    pub security_label: String,
}

/// Bytes needed for one base-field coordinate.
pub fn coord_len(params: &GroupParams) -> usize {
    ((params.p.bits() + 7) / 8) as usize
}

/// Bytes needed for one serialized scalar.
pub fn scalar_len(params: &GroupParams) -> usize {
    ((params.q.bits() + 7) / 8) as usize
}

const SMALL_PRIMES: [u32; 46] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
    197, 199, 211,
];

/// Miller-Rabin with 40 bases drawn from a stream keyed by the candidate
/// itself; deterministic across runs.
pub fn is_prime(n: &BigUint) -> bool {
    if *n < BigUint::from(2u8) {
        return false;
    }
    let two = BigUint::from(2u8);
    if *n == two {
        return true;
    }
    if !n.bit(0) {
        return false;
    }
    for sp in SMALL_PRIMES {
        let sp = BigUint::from(sp);
        if *n == sp {
            return true;
        }
        if (n % &sp).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let mut rng = seeded_rng("miller-rabin", &n.to_bytes_be());
    'witness: for _ in 0..40 {
        let a = random_below(&mut rng, &(&n_minus_1 - &one)) + &two;
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 0..s.saturating_sub(1) {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn random_prime(rng: &mut rand_chacha::ChaCha20Rng, bits: u64) -> BigUint {
    loop {
        let mut c = random_below(rng, &(BigUint::one() << (bits - 1)));
        c.set_bit(bits - 1, true);
        c.set_bit(0, true);
        if is_prime(&c) {
            return c;
        }
    }
}

/// Deterministic parameter search: pick a random q_bits prime q, then scan
/// cofactors h = 0 (mod 4) until p = h*q - 1 is a p_bits prime. The 4 | h
/// constraint forces p = 3 (mod 4).
pub fn gen_group_params(
    q_bits: u64,
    p_bits: u64,
    seed: &[u8],
    label: &str,
) -> Result<GroupParams, AlgebraError> {
    if q_bits < 16 || p_bits <= q_bits {
        return Err(AlgebraError::InvalidBitSizes { q_bits, p_bits });
    }
    let mut rng = seeded_rng("gen-group-params", seed);
    let one = BigUint::one();
    let four = BigUint::from(4u8);
    let mut attempts: u64 = 0;
    for _ in 0..32 {
        let q = random_prime(&mut rng, q_bits);
        // smallest h with h*q - 1 >= 2^(p_bits-1), rounded up to 4 | h
        let lo = (BigUint::one() << (p_bits - 1)) + &one;
        let mut h = (&lo + &q - &one) / &q;
        let rem = &h % &four;
        if !rem.is_zero() {
            h += &four - rem;
        }
        let hi = BigUint::one() << p_bits;
        while &h * &q <= hi {
            attempts += 1;
            if attempts > 2_000_000 {
                return Err(AlgebraError::SearchExhausted { attempts });
            }
            let p = &h * &q - &one;
            if p.bits() == p_bits && is_prime(&p) {
                let generator = find_generator(&mut rng, &p, &h);
                return Ok(GroupParams {
                    p,
                    q,
                    cofactor: h,
                    generator,
                    security_label: label.to_string(),
                });
            }
            h += &four;
        }
    }
    Err(AlgebraError::SearchExhausted { attempts })
}

/// Samples a curve point and clears the cofactor; retries until the result
/// has order q.
fn find_generator(rng: &mut rand_chacha::ChaCha20Rng, p: &BigUint, h: &BigUint) -> G1Point {
    loop {
        let x = random_below(rng, p);
        let x2 = fp_mul(&x, &x, p);
        let rhs = fp_add(&fp_mul(&x2, &x, p), &x, p);
        if rhs.is_zero() {
            continue;
        }
        if !fp_is_square(&rhs, p) {
            continue;
        }
        let y = fp_sqrt(&rhs, p).expect("residue has a root");
        let pt = mul_raw(h, &G1Point::Affine { x, y }, p);
        if !pt.is_identity() {
            return pt;
        }
    }
}

/// Full invariant check: primality, divisibility, curve membership,
/// subgroup order. Used when loading parameters from untrusted text.
pub fn validate_params(params: &GroupParams) -> Result<(), AlgebraError> {
    let one = BigUint::one();
    if !is_prime(&params.p) {
        return Err(AlgebraError::ParamInvalid("p is not prime".into()));
    }
    if !is_prime(&params.q) {
        return Err(AlgebraError::ParamInvalid("q is not prime".into()));
    }
    if (&params.p % BigUint::from(4u8)) != BigUint::from(3u8) {
        return Err(AlgebraError::ParamInvalid("p != 3 (mod 4)".into()));
    }
    if &params.cofactor * &params.q != &params.p + &one {
        return Err(AlgebraError::ParamInvalid("h*q != p + 1".into()));
    }
    if params.generator.is_identity() {
        return Err(AlgebraError::ParamInvalid("generator is the identity".into()));
    }
    if !is_on_curve(&params.generator, params) {
        return Err(AlgebraError::ParamInvalid("generator is off-curve".into()));
    }
    if !mul_raw(&params.q, &params.generator, &params.p).is_identity() {
        return Err(AlgebraError::ParamInvalid(
            "generator does not have order q".into(),
        ));
    }
    Ok(())
}

/// Structured-text form: one `key: hex` line per field.
pub fn params_to_text(params: &GroupParams) -> String {
    let G1Point::Affine { x, y } = &params.generator else {
        unreachable!("shipped generators are never the identity");
    };
    format!(
        "label: {}\np: {}\nq: {}\nh: {}\npx: {}\npy: {}\n",
        params.security_label,
        to_hex(&params.p),
        to_hex(&params.q),
        to_hex(&params.cofactor),
        to_hex(x),
        to_hex(y),
    )
}

pub fn params_from_text(text: &str) -> Result<GroupParams, AlgebraError> {
    let mut label = None;
    let mut fields: std::collections::HashMap<&str, BigUint> = Default::default();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| AlgebraError::ParamParse(format!("bad line: {line}")))?;
        let (key, value) = (key.trim(), value.trim());
        if key == "label" {
            label = Some(value.to_string());
        } else {
            let v = from_hex(value)
                .ok_or_else(|| AlgebraError::ParamParse(format!("bad hex for {key}")))?;
            fields.insert(
                match key {
                    "p" => "p",
                    "q" => "q",
                    "h" => "h",
                    "px" => "px",
                    "py" => "py",
                    _ => return Err(AlgebraError::ParamParse(format!("unknown key {key}"))),
                },
                v,
            );
        }
    }
    let get = |k: &str| {
        fields
            .get(k)
            .cloned()
            .ok_or_else(|| AlgebraError::ParamParse(format!("missing field {k}")))
    };
    let params = GroupParams {
        p: get("p")?,
        q: get("q")?,
        cofactor: get("h")?,
        generator: G1Point::Affine {
            x: get("px")?,
            y: get("py")?,
        },
        security_label: label.ok_or_else(|| AlgebraError::ParamParse("missing label".into()))?,
    };
    validate_params(&params)?;
    Ok(params)
}

pub(crate) fn to_hex(v: &BigUint) -> String {
    format!("{v:x}")
}

pub(crate) fn from_hex(s: &str) -> Option<BigUint> {
    BigUint::parse_bytes(s.as_bytes(), 16)
}

// Pinned parameter sets, produced once by `gen_group_params` with the seeds
// noted below. Construction skips the primality re-check; a unit test
// revalidates both sets in full.

/// toy-64: q of 16 bits, p of 64 bits. Small enough for brute-force oracles.
/// Seed: "vdas-toy-64-v1".
pub fn toy_64() -> GroupParams {
    pinned(TOY_64)
}

/// ss-512: q of 160 bits, p of 512 bits. Benchmark-scale parameters.
/// Seed: "vdas-ss-512-v1".
pub fn ss_512() -> GroupParams {
    pinned(SS_512)
}

pub fn by_label(label: &str) -> Option<GroupParams> {
    match label {
        "toy-64" => Some(toy_64()),
        "ss-512" => Some(ss_512()),
        _ => None,
    }
}

pub const PARAMSET_LABELS: [&str; 2] = ["toy-64", "ss-512"];

struct Pinned {
    label: &'static str,
    p: &'static str,
    q: &'static str,
    h: &'static str,
    px: &'static str,
    py: &'static str,
}

fn pinned(c: Pinned) -> GroupParams {
    let params = GroupParams {
        p: from_hex(c.p).unwrap(),
        q: from_hex(c.q).unwrap(),
        cofactor: from_hex(c.h).unwrap(),
        generator: G1Point::Affine {
            x: from_hex(c.px).unwrap(),
            y: from_hex(c.py).unwrap(),
        },
        security_label: c.label.to_string(),
    };
    debug_assert!(is_on_curve(&params.generator, &params));
    params
}

const TOY_64: Pinned = Pinned {
    label: "toy-64",
    p: "80000000000e84df",
    q: "8a49",
    h: "ecf5aa915de0",
    px: "2e347731df951dfc",
    py: "4b24a59ffcbaf50b",
};

const SS_512: Pinned = Pinned {
    label: "ss-512",
    p: "800000000000000000000000000000000000000000000000000000000000000000000000000000000000013a8c4777ea8de936a2683edae1c213138ad4087197",
    q: "923d034fe7c07a79a0143a6c21d3257cc707a077",
    h: "e01294780c66b881c87ae0046d8923d2530af65826e0a7e256ebb0887a12108711d3695700224442ade25928",
    px: "526cd06a7a263847c4039436100ec0156f97e5348fa8654f69890cadac0b79c7048fd649c0b487d07fc54c2aa50c4b3a7d437bed2d7809a3f0441fba39cd32b9",
    py: "44fae52fc5de9da74dd9b5c0f931f453edcde8a363979d5110ebcd1fd88f656d4eba1ed147aec2461d577355f2e33159b5903aea074f0724f058c053cbe7adcf",
};
