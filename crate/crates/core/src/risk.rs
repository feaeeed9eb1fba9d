//! Risk preferences of junior debtholders.
//!
//! The junior claim is a bull spread, so its sensitivity to asset volatility
//! is the difference of two call vegas. The vegas cross where
//! `d1(F_S) = -d1(F_S + F_J)`, which yields two closed forms:
//!
//! ```text
//! V_hat(sigma) = exp(-(r - q + sigma^2/2) tau) * sqrt(F_S (F_S + F_J))
//! sigma_max    = sqrt( ln(F_S (F_S + F_J) / V^2) / tau - 2 (r - q) )
//! V_star       = exp(-(r - q) tau) * sqrt(F_S (F_S + F_J))
//! ```
//!
//! Below `V_hat(sigma)` the junior claim gains from more risk at `sigma`.
//! Below `V_star` the value is hump-shaped in volatility with its peak at
//! `sigma_max`; above it, the value only falls as volatility rises.

use serde::{Deserialize, Serialize};

use crate::black_scholes::vega;
use crate::claims::CapitalStructure;
use crate::error::{require_positive, Result};

/// Radicands of the `sigma_max` closed form within this band of zero are
/// treated as the boundary root `sigma_max = 0`.
pub const RADICAND_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    /// Junior value falls monotonically as asset volatility rises.
    DecreasingInRisk,
    /// Junior value rises, peaks at `sigma_max`, then falls.
    HumpShaped,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::DecreasingInRisk => "decreasing-in-risk",
            Regime::HumpShaped => "hump-shaped",
        }
    }
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RiskProfile {
    /// Volatility maximizing the junior value; `None` when no maximizer with
    /// `sigma >= 0` exists (`V > V_star`).
    pub sigma_max: Option<f64>,
    /// Risk-shifting threshold evaluated at `initial_sigma`.
    pub v_hat: f64,
    pub v_star: f64,
    pub regime: Regime,
    /// Whether the junior holders would move volatility up from `initial_sigma`.
    pub shifts_above_initial: bool,
    pub initial_sigma: f64,
}

/// `dB_J/dsigma`: vega at strike `F_S` minus vega at strike `F_S + F_J`.
pub fn junior_debt_vega(cs: &CapitalStructure) -> Result<f64> {
    let long = vega(&cs.option_at(cs.senior_face()))?;
    let short = vega(&cs.option_at(cs.total_face()))?;
    Ok(long - short)
}

/// Asset value at which the junior vega changes sign for volatility `sigma`.
pub fn v_hat(
    senior_face: f64,
    junior_face: f64,
    sigma: f64,
    maturity: f64,
    rate: f64,
    dividend_yield: f64,
) -> f64 {
    let exponent = ((rate - dividend_yield) + sigma * sigma / 2.0) * maturity;
    (-exponent).exp() * geometric_face(senior_face, junior_face)
}

/// Largest asset value for which a junior-value maximizer exists.
pub fn v_star(
    senior_face: f64,
    junior_face: f64,
    maturity: f64,
    rate: f64,
    dividend_yield: f64,
) -> f64 {
    let exponent = (rate - dividend_yield) * maturity;
    (-exponent).exp() * geometric_face(senior_face, junior_face)
}

/// `sqrt(F_S (F_S + F_J))`
fn geometric_face(senior_face: f64, junior_face: f64) -> f64 {
    (senior_face * (senior_face + junior_face)).sqrt()
}

/// `ln(F_S (F_S + F_J) / V^2) / tau - 2 (r - q)`, the squared maximizer.
fn sigma_max_radicand(cs: &CapitalStructure) -> f64 {
    let v = cs.asset_value();
    let leverage = cs.senior_face() * cs.total_face() / (v * v);
    leverage.ln() / cs.maturity() - 2.0 * (cs.rate() - cs.dividend_yield())
}

/// Volatility maximizing the junior value. The volatility carried by `cs`
/// is ignored.
///
/// Returns `Some(0.0)` on the boundary `V = V_star` (radicand within
/// [`RADICAND_TOLERANCE`] of zero) and `None` beyond it.
pub fn sigma_max(cs: &CapitalStructure) -> Option<f64> {
    let radicand = sigma_max_radicand(cs);
    if radicand.abs() <= RADICAND_TOLERANCE {
        Some(0.0)
    } else if radicand > 0.0 {
        Some(radicand.sqrt())
    } else {
        None
    }
}

pub fn classify_regime(cs: &CapitalStructure, initial_sigma: f64) -> Result<RiskProfile> {
    require_positive("initial_sigma", initial_sigma)?;
    let sigma_max = sigma_max(cs);
    let v_hat = v_hat(
        cs.senior_face(),
        cs.junior_face(),
        initial_sigma,
        cs.maturity(),
        cs.rate(),
        cs.dividend_yield(),
    );
    let v_star = v_star(
        cs.senior_face(),
        cs.junior_face(),
        cs.maturity(),
        cs.rate(),
        cs.dividend_yield(),
    );
    // sigma_max = 0 on the boundary still means the value falls for every sigma > 0.
    let regime = match sigma_max {
        Some(s) if s > 0.0 => Regime::HumpShaped,
        _ => Regime::DecreasingInRisk,
    };
    Ok(RiskProfile {
        sigma_max,
        v_hat,
        v_star,
        regime,
        shifts_above_initial: cs.asset_value() < v_hat,
        initial_sigma,
    })
}

/// Volatility the junior holders would choose starting from `initial_sigma`:
/// `sigma_max` when that lies above the starting point, otherwise no change.
pub fn chosen_risk(cs: &CapitalStructure, initial_sigma: f64) -> Result<f64> {
    let profile = classify_regime(cs, initial_sigma)?;
    Ok(match (profile.shifts_above_initial, profile.sigma_max) {
        (true, Some(s)) => s,
        _ => initial_sigma,
    })
}
