//! Counter-based random streams.
//!
//! All randomness in the crate flows through a splitmix64-style bijective
//! mixer keyed by (seed, stream, counter). A draw is a pure function of its
//! coordinates, so parallel evaluation order never changes results and
//! identical seeds reproduce identical artifacts byte for byte.

use std::f64::consts::TAU;

/// splitmix64 finalizer; bijective on u64.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Derive a sub-seed from a master seed and a label.
///
/// The top-level seed splitting rule: every stage (capture noise, mock
/// weights, optimizer iterations, ...) derives its own stream with a distinct
/// label, so streams never collide or alias across stages.
pub fn derive_seed(master: u64, label: &str) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64; // FNV-1a offset basis
    for b in label.as_bytes() {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    mix64(master ^ h)
}

/// A keyed counter stream of uniforms and gaussians.
#[derive(Debug, Clone, Copy)]
pub struct CounterRng {
    key: u64,
}

impl CounterRng {
    pub fn new(seed: u64, stream: u64) -> Self {
        CounterRng {
            key: mix64(seed ^ mix64(stream)),
        }
    }

    #[inline]
    fn word(&self, counter: u64) -> u64 {
        mix64(self.key ^ counter.wrapping_mul(0xa076_1d64_78bd_642f))
    }

    /// Uniform in the open interval (0, 1).
    #[inline]
    pub fn uniform(&self, counter: u64) -> f64 {
        // 53 mantissa bits, offset by half an ulp so 0.0 is never produced.
        ((self.word(counter) >> 11) as f64 + 0.5) / 9_007_199_254_740_992.0
    }

    /// Standard normal via Box-Muller on two counter draws.
    #[inline]
    pub fn gaussian(&self, counter: u64) -> f64 {
        let u1 = self.uniform(counter.wrapping_mul(2));
        let u2 = self.uniform(counter.wrapping_mul(2).wrapping_add(1));
        (-2.0 * u1.ln()).sqrt() * (TAU * u2).cos()
    }
}
