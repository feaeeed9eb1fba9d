//! Independent checks on the closed forms.
//!
//! Nothing here calls into the closed-form risk analysis: the Monte-Carlo
//! engine prices claims from simulated terminal asset values and the exact
//! maturity payoffs, the search finds the junior-value maximizer numerically,
//! and the finite differences bump volatility on the priced claim.

pub mod finite_diff;
pub mod monte_carlo;
pub mod rng;
pub mod search;

pub use finite_diff::{central_difference, finite_diff_vega};
pub use monte_carlo::{
    mc_claim_values, simulate_terminal_values, ClaimEstimates, MCConfig, MCEstimate,
};
pub use rng::CounterRng;
pub use search::{
    argmax_coarse_then_golden, argmax_sigma_numeric, golden_section_maximize, GridSpec,
};
