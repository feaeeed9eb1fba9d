//! Valuation and risk-shifting analysis for a firm financed by senior debt,
//! junior (subordinated) debt and equity.
//!
//! Firm assets follow a geometric Brownian motion under the risk-neutral
//! measure and both debt issues are zero-coupon with a common maturity.
//! The claims are then portfolios of European options on the assets:
//! senior debt is a riskless bond less a put, junior debt is a bull spread of
//! calls, and equity is a call on the total face value.
//!
//! Beyond pricing, the crate answers how junior debtholders feel about asset
//! risk. Their claim's value is hump-shaped in volatility when the firm is
//! close to distress, peaking at a closed-form `sigma_max`, and falls
//! monotonically otherwise. See [`risk`].
//!
//! Every closed form is paired with an independent check in [`oracle`]:
//! Monte-Carlo pricing, numeric argmax, and finite differences.

pub mod black_scholes;
pub mod claims;
pub mod error;
pub mod normal;
pub mod oracle;
pub mod risk;
pub mod sweep;

pub use black_scholes::{call_price, d1, d2, moneyness, put_price, vega, Moneyness, OptionInputs};
pub use claims::{
    equity_value, junior_credit_discount, junior_debt_value, junior_value_change,
    payoffs_at_maturity, senior_debt_value, value_all_claims, CapitalStructure, ClaimValues,
    MaturityPayoffs,
};
pub use error::{ModelError, Result};
pub use oracle::{
    argmax_sigma_numeric, finite_diff_vega, mc_claim_values, simulate_terminal_values,
    ClaimEstimates, GridSpec, MCConfig, MCEstimate,
};
pub use risk::{
    chosen_risk, classify_regime, junior_debt_vega, sigma_max, v_hat, v_star, Regime, RiskProfile,
};
pub use sweep::{
    sweep_sigma, sweep_structure, StructureSweep, StructureSweepSpec, SweepRow, SweepTable,
};
