//! Deterministic seeding.
//!
//! Every random quantity in the crate is drawn from a [`ChaCha8Rng`] seeded
//! with a 64-bit value. Experiment samples get their seed from
//! [`derive_seed`], which mixes `(master_seed, n, k)` through SplitMix64:
//!
//! ```text
//! seed = mix(mix(mix(master) ^ n) ^ k)
//! mix(z) = splitmix64 finalizer of z + 0x9E3779B97F4A7C15
//! ```
//!
//! Both the mixing function and the ChaCha8 stream are fixed, so seeds and
//! the graphs built from them are stable across platforms and releases.

use rand_chacha::rand_core::{RngCore, SeedableRng};
pub use rand_chacha::ChaCha8Rng;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// One SplitMix64 output for state `z`.
pub fn splitmix64(z: u64) -> u64 {
    let mut z = z.wrapping_add(GOLDEN_GAMMA);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for sample `k` of the size-`n` point of an experiment.
pub fn derive_seed(master_seed: u64, n: u64, k: u64) -> u64 {
    splitmix64(splitmix64(splitmix64(master_seed) ^ n) ^ k)
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform draw in `[0, 1)` with 53 bits of resolution.
pub fn unit_f64(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}
