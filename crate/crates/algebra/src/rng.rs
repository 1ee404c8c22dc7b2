//! Seeded, domain-separated randomness.
//!
//! Every random choice in the artifact flows through a ChaCha20 stream keyed
//! by SHA-256(domain, seed), so identical seeds reproduce identical runs on
//! any platform.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::RngCore;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha20Rng;
use sha2::{Digest, Sha256};

pub fn seeded_rng(domain: &str, seed: &[u8]) -> ChaCha20Rng {
    let mut h = Sha256::new();
    h.update((domain.len() as u32).to_be_bytes());
    h.update(domain.as_bytes());
    h.update((seed.len() as u32).to_be_bytes());
    h.update(seed);
    ChaCha20Rng::from_seed(h.finalize().into())
}

/// Uniform integer in [0, bound) by rejection sampling.
pub fn random_below(rng: &mut ChaCha20Rng, bound: &BigUint) -> BigUint {
    assert!(!bound.is_zero(), "bound must be positive");
    let bits = bound.bits();
    let nbytes = ((bits + 7) / 8) as usize;
    let excess_bits = (nbytes as u64) * 8 - bits;
    let mask = 0xffu8 >> excess_bits;
    let mut buf = vec![0u8; nbytes];
    loop {
        rng.fill_bytes(&mut buf);
        buf[0] &= mask;
        let v = BigUint::from_bytes_be(&buf);
        if v < *bound {
            return v;
        }
    }
}

/// Uniform integer in [1, q-1].
pub fn random_unit(rng: &mut ChaCha20Rng, q: &BigUint) -> BigUint {
    random_below(rng, &(q - BigUint::one())) + BigUint::one()
}
