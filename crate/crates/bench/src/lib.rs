//! Benchmarks live in `benches/`; this crate only provides shared fixtures.

use subdebt_core::CapitalStructure;

/// Distressed structure: `V = 62`, faces 60 and 10, one year, 1% rate.
pub fn distressed(sigma: f64) -> CapitalStructure {
    CapitalStructure::new(62.0, 60.0, 10.0, sigma, 1.0, 0.01).expect("valid fixture")
}
