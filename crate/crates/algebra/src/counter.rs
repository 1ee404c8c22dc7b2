//! Operation counting for cost-model verification.
//!
//! A recording session owns its own [`OpCounter`]; counters are never
//! global, so concurrent sessions cannot interleave counts.

use std::cell::Cell;

/// Mutable tally of the pairing-level operations performed while recording.
///
/// Interior mutability lets the arithmetic layer stay `&self`-based; the
/// counter is intentionally `!Sync`.
#[derive(Debug, Default)]
pub struct OpCounter {
    scalar_mults: Cell<u64>,
    pairings: Cell<u64>,
    map_hashes: Cell<u64>,
    scalar_hashes: Cell<u64>,
    point_adds: Cell<u64>,
}

/// Immutable snapshot of an [`OpCounter`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounts {
    pub scalar_mults: u64,
    pub pairings: u64,
    pub map_hashes: u64,
    pub scalar_hashes: u64,
    pub point_adds: u64,
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn scalar_mults(&self) -> u64 {
        self.scalar_mults.get()
    }

    pub fn pairings(&self) -> u64 {
        self.pairings.get()
    }

    pub fn map_hashes(&self) -> u64 {
        self.map_hashes.get()
    }

    pub fn scalar_hashes(&self) -> u64 {
        self.scalar_hashes.get()
    }

    pub fn point_adds(&self) -> u64 {
        self.point_adds.get()
    }

    pub fn snapshot(&self) -> OpCounts {
        OpCounts {
            scalar_mults: self.scalar_mults.get(),
            pairings: self.pairings.get(),
            map_hashes: self.map_hashes.get(),
            scalar_hashes: self.scalar_hashes.get(),
            point_adds: self.point_adds.get(),
        }
    }

    pub fn reset(&self) {
        self.scalar_mults.set(0);
        self.pairings.set(0);
        self.map_hashes.set(0);
        self.scalar_hashes.set(0);
        self.point_adds.set(0);
    }

    pub(crate) fn bump_scalar_mult(&self) {
        self.scalar_mults.set(self.scalar_mults.get() + 1);
    }

    pub(crate) fn bump_pairing(&self) {
        self.pairings.set(self.pairings.get() + 1);
    }

    pub(crate) fn bump_map_hash(&self) {
        self.map_hashes.set(self.map_hashes.get() + 1);
    }

    pub(crate) fn bump_scalar_hash(&self) {
        self.scalar_hashes.set(self.scalar_hashes.get() + 1);
    }

    pub(crate) fn bump_point_add(&self) {
        self.point_adds.set(self.point_adds.get() + 1);
    }
}

/// Records an op on `rec` when a counter is attached.
pub(crate) fn record(rec: Option<&OpCounter>, f: impl FnOnce(&OpCounter)) {
    if let Some(c) = rec {
        f(c);
    }
}
