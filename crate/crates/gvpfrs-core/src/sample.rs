//! Deterministic sampling helpers shared by axiom certification and the
//! law suite.
//!
//! Every random draw is derived from an explicit `(seed, context)` pair so
//! results are reproducible regardless of evaluation order or platform.

use alloc::vec::Vec;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// ChaCha stream keyed by a seed, a context string and an index.
pub(crate) fn stream(seed: u64, context: &str, index: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&index.to_le_bytes());
    // FNV-1a folded twice so distinct contexts get distinct key halves.
    let mut h1: u64 = 0xcbf2_9ce4_8422_2325;
    let mut h2: u64 = 0x6c62_272e_07bb_0142;
    for &b in context.as_bytes() {
        h1 = (h1 ^ u64::from(b)).wrapping_mul(0x0000_0100_0000_01b3);
        h2 = (h2 ^ u64::from(b)).wrapping_mul(0x0000_0100_0000_0133);
    }
    key[16..24].copy_from_slice(&h1.to_le_bytes());
    key[24..32].copy_from_slice(&h2.to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

/// Uniform draw from `[0, 1)` using the top 53 bits of a `u64`.
pub(crate) fn unit(rng: &mut impl RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Uniform integer in `[0, bound)`.
pub(crate) fn index(rng: &mut impl RngCore, bound: usize) -> usize {
    debug_assert!(bound > 0);
    (rng.next_u64() % bound as u64) as usize
}

/// Evenly spaced grid over `[0, 1]` with both endpoints, `density >= 2`
/// nodes, followed by `extra` seeded uniform draws.
pub(crate) fn unit_grid(density: usize, extra: usize, seed: u64, context: &str) -> Vec<f64> {
    let d = density.max(2);
    let mut pts = Vec::with_capacity(d + extra);
    for i in 0..d {
        pts.push(i as f64 / (d - 1) as f64);
    }
    let mut rng = stream(seed, context, 0);
    for _ in 0..extra {
        pts.push(unit(&mut rng));
    }
    pts
}
