//! European option primitives on the firm's assets.
//!
//! All rates and yields are continuously compounded annual rates and
//! maturities are year fractions, so discounting is `exp(-r * tau)`.
//! At zero volatility the prices collapse to the discounted deterministic
//! forward payoff; `d1`, `d2` and vega have no such limit and return
//! [`ModelError::DegenerateVolatility`].

use serde::{Deserialize, Serialize};

use crate::error::{require_finite, require_nonnegative, require_positive, ModelError, Result};
use crate::normal;

/// Inputs to a single European option on the asset value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OptionInputs {
    asset_value: f64,
    strike: f64,
    volatility: f64,
    maturity: f64,
    rate: f64,
    dividend_yield: f64,
}

impl OptionInputs {
    pub fn new(
        asset_value: f64,
        strike: f64,
        volatility: f64,
        maturity: f64,
        rate: f64,
        dividend_yield: f64,
    ) -> Result<Self> {
        require_positive("asset_value", asset_value)?;
        require_positive("strike", strike)?;
        require_nonnegative("volatility", volatility)?;
        require_positive("maturity", maturity)?;
        require_finite("rate", rate)?;
        require_nonnegative("dividend_yield", dividend_yield)?;
        Ok(Self {
            asset_value,
            strike,
            volatility,
            maturity,
            rate,
            dividend_yield,
        })
    }

    pub fn with_volatility(self, volatility: f64) -> Result<Self> {
        require_nonnegative("volatility", volatility)?;
        Ok(Self { volatility, ..self })
    }

    pub fn with_strike(self, strike: f64) -> Result<Self> {
        require_positive("strike", strike)?;
        Ok(Self { strike, ..self })
    }

    pub fn asset_value(&self) -> f64 {
        self.asset_value
    }

    pub fn strike(&self) -> f64 {
        self.strike
    }

    pub fn volatility(&self) -> f64 {
        self.volatility
    }

    pub fn maturity(&self) -> f64 {
        self.maturity
    }

    pub fn rate(&self) -> f64 {
        self.rate
    }

    pub fn dividend_yield(&self) -> f64 {
        self.dividend_yield
    }

    /// `V * exp(-q tau)`
    pub fn discounted_asset(&self) -> f64 {
        self.asset_value * (-self.dividend_yield * self.maturity).exp()
    }

    /// `K * exp(-r tau)`
    pub fn discounted_strike(&self) -> f64 {
        self.strike * (-self.rate * self.maturity).exp()
    }
}

/// The pair `(d1, d2)` with `d2 = d1 - sigma * sqrt(tau)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Moneyness {
    pub d1: f64,
    pub d2: f64,
}

/// `[ln(V/K) + (r - q + sigma^2/2) tau] / (sigma sqrt(tau))` together with `d2`.
pub fn moneyness(inputs: &OptionInputs) -> Result<Moneyness> {
    let sigma = inputs.volatility;
    if sigma == 0.0 {
        return Err(ModelError::DegenerateVolatility);
    }
    let tau = inputs.maturity;
    let sd = sigma * tau.sqrt();
    let drift = (inputs.rate - inputs.dividend_yield + 0.5 * sigma * sigma) * tau;
    let d1 = ((inputs.asset_value / inputs.strike).ln() + drift) / sd;
    Ok(Moneyness { d1, d2: d1 - sd })
}

pub fn d1(inputs: &OptionInputs) -> Result<f64> {
    moneyness(inputs).map(|m| m.d1)
}

pub fn d2(inputs: &OptionInputs) -> Result<f64> {
    moneyness(inputs).map(|m| m.d2)
}

/// European call. Clamped to the no-arbitrage band
/// `[max(V e^{-q tau} - K e^{-r tau}, 0), V e^{-q tau}]` to absorb rounding.
pub fn call_price(inputs: &OptionInputs) -> f64 {
    let fwd_asset = inputs.discounted_asset();
    let fwd_strike = inputs.discounted_strike();
    let intrinsic = (fwd_asset - fwd_strike).max(0.0);
    match moneyness(inputs) {
        Ok(m) => {
            let raw = fwd_asset * normal::cdf(m.d1) - fwd_strike * normal::cdf(m.d2);
            raw.clamp(intrinsic, fwd_asset)
        }
        Err(_) => intrinsic,
    }
}

/// European put, evaluated from the lower-tail form
/// `K e^{-r tau} N(-d2) - V e^{-q tau} N(-d1)` so that deep out-of-the-money
/// values keep their relative accuracy.
pub fn put_price(inputs: &OptionInputs) -> f64 {
    let fwd_asset = inputs.discounted_asset();
    let fwd_strike = inputs.discounted_strike();
    let intrinsic = (fwd_strike - fwd_asset).max(0.0);
    match moneyness(inputs) {
        Ok(m) => {
            let raw = fwd_strike * normal::cdf(-m.d2) - fwd_asset * normal::cdf(-m.d1);
            raw.clamp(intrinsic, fwd_strike)
        }
        Err(_) => intrinsic,
    }
}

/// `dC/dsigma = V e^{-q tau} sqrt(tau) phi(d1)`; identical for calls and puts.
pub fn vega(inputs: &OptionInputs) -> Result<f64> {
    let m = moneyness(inputs)?;
    Ok(inputs.discounted_asset() * inputs.maturity.sqrt() * normal::pdf(m.d1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn opt(v: f64, k: f64, sigma: f64, tau: f64, r: f64, q: f64) -> OptionInputs {
        OptionInputs::new(v, k, sigma, tau, r, q).unwrap()
    }

    #[test]
    fn d1_at_the_money_without_drift() {
        let m = moneyness(&opt(100.0, 100.0, 0.2, 1.0, 0.0, 0.0)).unwrap();
        assert!((m.d1 - 0.1).abs() < 1e-15);
        assert!((m.d2 + 0.1).abs() < 1e-15);
    }

    #[test]
    fn d1_reference_case() {
        let got = d1(&opt(62.0, 60.0, 0.262, 1.0, 0.01, 0.0)).unwrap();
        let expected = ((62.0f64 / 60.0).ln() + 0.01 + 0.262 * 0.262 / 2.0) / 0.262;
        assert!((got - expected).abs() < 1e-14);
        // mpmath, 50 digits
        assert!((got - 0.294_319_934_438_896_45).abs() < 1e-13);
    }

    #[test]
    fn d1_out_of_the_money_is_negative() {
        assert!(d1(&opt(62.0, 70.0, 0.262, 1.0, 0.01, 0.0)).unwrap() < 0.0);
    }

    #[test]
    fn zero_volatility_is_degenerate_for_d1_and_vega() {
        let o = opt(100.0, 60.0, 0.0, 1.0, 0.01, 0.0);
        assert_eq!(d1(&o), Err(ModelError::DegenerateVolatility));
        assert_eq!(vega(&o), Err(ModelError::DegenerateVolatility));
    }

    #[test]
    fn zero_volatility_prices_are_forward_limits() {
        let itm = opt(100.0, 60.0, 0.0, 1.0, 0.01, 0.0);
        assert!((call_price(&itm) - (100.0 - 60.0 * (-0.01f64).exp())).abs() < 1e-12);
        assert_eq!(put_price(&itm), 0.0);

        let otm = opt(50.0, 60.0, 0.0, 1.0, 0.01, 0.0);
        assert_eq!(call_price(&otm), 0.0);
        assert!((put_price(&otm) - (60.0 * (-0.01f64).exp() - 50.0)).abs() < 1e-12);
    }

    #[test]
    fn reference_prices() {
        // mpmath at 50 digits
        let o = opt(62.0, 60.0, 0.262, 1.0, 0.01, 0.0);
        assert!((call_price(&o) - 7.708_792_047_704_426).abs() < 1e-12);
        assert!((put_price(&o) - 5.111_782_072_654_509).abs() < 1e-12);
        assert!((vega(&o).unwrap() - 23.685_990_138_029_393).abs() < 1e-11);
    }

    #[test]
    fn vega_at_zero_d1() {
        let (k, r, q, sigma, tau): (f64, f64, f64, f64, f64) = (80.0, 0.03, 0.01, 0.25, 2.0);
        let v = k * (-(r - q + sigma * sigma / 2.0) * tau).exp();
        let o = opt(v, k, sigma, tau, r, q);
        assert!(d1(&o).unwrap().abs() < 1e-14);
        let expected = v * (-q * tau).exp() * tau.sqrt() * normal::INV_SQRT_2PI;
        assert!((vega(&o).unwrap() - expected).abs() < 1e-12);
    }

    #[test]
    fn vega_matches_central_difference() {
        let h = 1e-5;
        for &(v, k, sigma) in &[(62.0, 60.0, 0.262), (100.0, 70.0, 0.1), (40.0, 60.0, 0.5)] {
            let o = opt(v, k, sigma, 1.0, 0.01, 0.0);
            let up = call_price(&o.with_volatility(sigma + h).unwrap());
            let down = call_price(&o.with_volatility(sigma - h).unwrap());
            let fd = (up - down) / (2.0 * h);
            let analytic = vega(&o).unwrap();
            assert!(
                ((fd - analytic) / analytic).abs() < 1e-6,
                "{fd} vs {analytic}"
            );
        }
    }

    #[test]
    fn vega_vanishes_deep_out_of_the_money() {
        assert!(vega(&opt(1.0, 1000.0, 0.1, 1.0, 0.01, 0.0)).unwrap() < 1e-10);
    }

    #[test]
    fn vega_vanishes_at_large_volatility() {
        let o = opt(100.0, 100.0, 50.0, 1.0, 0.01, 0.0);
        assert!(vega(&o).unwrap() < 1e-100);
    }

    #[test]
    fn rejects_invalid_inputs() {
        assert!(OptionInputs::new(0.0, 1.0, 0.1, 1.0, 0.0, 0.0).is_err());
        assert!(OptionInputs::new(1.0, -1.0, 0.1, 1.0, 0.0, 0.0).is_err());
        assert!(OptionInputs::new(1.0, 1.0, -0.1, 1.0, 0.0, 0.0).is_err());
        assert!(OptionInputs::new(1.0, 1.0, 0.1, 0.0, 0.0, 0.0).is_err());
        assert!(OptionInputs::new(1.0, 1.0, 0.1, 1.0, f64::NAN, 0.0).is_err());
        assert!(OptionInputs::new(1.0, 1.0, 0.1, 1.0, 0.0, -0.01).is_err());
    }

    fn inputs_strategy() -> impl Strategy<Value = OptionInputs> {
        (
            1.0f64..500.0,
            1.0f64..500.0,
            0.0f64..2.0,
            0.01f64..10.0,
            -0.02f64..0.1,
            0.0f64..0.08,
        )
            .prop_map(|(v, k, s, t, r, q)| OptionInputs::new(v, k, s, t, r, q).unwrap())
    }

    proptest! {
        #[test]
        fn put_call_parity(o in inputs_strategy()) {
            let lhs = call_price(&o) - put_price(&o);
            let rhs = o.discounted_asset() - o.discounted_strike();
            prop_assert!((lhs - rhs).abs() < 1e-10, "{} vs {}", lhs, rhs);
        }

        #[test]
        fn call_bounds(o in inputs_strategy()) {
            let c = call_price(&o);
            prop_assert!(c >= (o.discounted_asset() - o.discounted_strike()).max(0.0));
            prop_assert!(c <= o.discounted_asset());
            let p = put_price(&o);
            prop_assert!((0.0..=o.discounted_strike()).contains(&p));
        }

        #[test]
        fn call_monotone_in_strike_and_volatility(
            o in inputs_strategy(), dk in 0.0f64..50.0, ds in 0.0f64..0.5,
        ) {
            let higher_strike = o.with_strike(o.strike() + dk).unwrap();
            prop_assert!(call_price(&higher_strike) <= call_price(&o) + 1e-12);
            let higher_vol = o.with_volatility(o.volatility() + ds).unwrap();
            prop_assert!(call_price(&higher_vol) + 1e-12 >= call_price(&o));
        }

        #[test]
        fn vega_nonnegative(o in inputs_strategy()) {
            prop_assume!(o.volatility() > 0.0);
            prop_assert!(vega(&o).unwrap() >= 0.0);
        }
    }
}
