//! Counter-based uniform and normal variates.
//!
//! Variate `i` for seed `s` is the `i`-th output (0-based) of a SplitMix64
//! stream started from state `s`:
//!
//! ```text
//! z = s + (i + 1) * 0x9E3779B97F4A7C15          (wrapping)
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! x = z ^ (z >> 31)
//! u = ((x >> 12) + 0.5) / 2^52                  in (0, 1)
//! Z = inverse normal CDF of u                   (AS 241)
//! ```
//!
//! Because each variate depends only on `(seed, i)`, simulations can be
//! split across threads in any way without changing a single draw.

use crate::normal;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;
const INV_2_POW_52: f64 = 1.0 / (1u64 << 52) as f64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CounterRng {
    seed: u64,
}

impl CounterRng {
    pub fn new(seed: u64) -> Self {
        Self { seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Raw 64-bit output at `index`.
    #[inline]
    pub fn bits(&self, index: u64) -> u64 {
        let mut z = self
            .seed
            .wrapping_add(index.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA));
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform on the open interval `(0, 1)`.
    #[inline]
    pub fn uniform(&self, index: u64) -> f64 {
        ((self.bits(index) >> 12) as f64 + 0.5) * INV_2_POW_52
    }

    #[inline]
    pub fn standard_normal(&self, index: u64) -> f64 {
        normal::inverse_cdf(self.uniform(index))
    }
}
