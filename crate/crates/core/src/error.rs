use thiserror::Error;

pub type Result<T> = std::result::Result<T, ModelError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    /// A parameter failed validation (non-finite, non-positive where positivity is required, ...).
    #[error("invalid {field}: {reason} (got {value})")]
    InvalidInput {
        field: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// `d1`, `d2` and vega are undefined at zero volatility. Prices use the
    /// deterministic-forward limit instead.
    #[error("volatility is zero; d1/vega are undefined in the deterministic limit")]
    DegenerateVolatility,

    #[error("finite-difference bump {bump} is not smaller than volatility {volatility}")]
    BumpTooLarge { bump: f64, volatility: f64 },

    #[error("invalid search grid: {0}")]
    InvalidGrid(&'static str),

    #[error("invalid Monte-Carlo configuration: {0}")]
    InvalidMonteCarlo(&'static str),

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),
}

pub(crate) fn require_positive(field: &'static str, value: f64) -> Result<()> {
    if !value.is_finite() || value <= 0.0 {
        return Err(ModelError::InvalidInput {
            field,
            value,
            reason: "must be finite and > 0",
        });
    }
    Ok(())
}

pub(crate) fn require_nonnegative(field: &'static str, value: f64) -> Result<()> {
    if !value.is_finite() || value < 0.0 {
        return Err(ModelError::InvalidInput {
            field,
            value,
            reason: "must be finite and >= 0",
        });
    }
    Ok(())
}

pub(crate) fn require_finite(field: &'static str, value: f64) -> Result<()> {
    if !value.is_finite() {
        return Err(ModelError::InvalidInput {
            field,
            value,
            reason: "must be finite",
        });
    }
    Ok(())
}
