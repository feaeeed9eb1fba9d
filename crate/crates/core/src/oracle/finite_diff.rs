use crate::claims::{junior_value_change, CapitalStructure};
use crate::error::{ModelError, Result};

/// `[f(x + h) - f(x - h)] / 2h`
pub fn central_difference<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (f(x + h) - f(x - h)) / (2.0 * h)
}

/// Central difference of the junior value in volatility.
/// The numerator comes from [`junior_value_change`].
pub fn finite_diff_vega(cs: &CapitalStructure, bump: f64) -> Result<f64> {
    let sigma = cs.volatility();
    if !(bump > 0.0 && bump.is_finite()) {
        return Err(ModelError::InvalidInput {
            field: "bump",
            value: bump,
            reason: "must be finite and > 0",
        });
    }
    if sigma - bump <= 0.0 {
        return Err(ModelError::BumpTooLarge {
            bump,
            volatility: sigma,
        });
    }
    Ok(junior_value_change(cs, sigma - bump, sigma + bump)? / (2.0 * bump))
}
