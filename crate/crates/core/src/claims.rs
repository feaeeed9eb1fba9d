//! Valuation of the three claims on a firm funded by senior debt, junior
//! debt and equity.
//!
//! Both debt issues are zero-coupon with a common maturity and absolute
//! priority applies at that date:
//!
//! ```text
//! senior  = min(V_T, F_S)                   = F_S e^{-r tau} - Put(F_S)
//! junior  = clamp(V_T - F_S, 0, F_J)        = Call(F_S) - Call(F_S + F_J)
//! equity  = max(V_T - F_S - F_J, 0)         = Call(F_S + F_J)
//! ```
//!
//! With a dividend yield `q` the three present values add up to
//! `V e^{-q tau}` rather than `V`.

use serde::{Deserialize, Serialize};

use crate::black_scholes::{call_price, put_price, OptionInputs};
use crate::error::{require_finite, require_nonnegative, require_positive, Result};

/// Firm state: asset value, debt faces, volatility and market parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CapitalStructure {
    asset_value: f64,
    senior_face: f64,
    junior_face: f64,
    volatility: f64,
    maturity: f64,
    rate: f64,
    dividend_yield: f64,
}

impl CapitalStructure {
    pub fn new(
        asset_value: f64,
        senior_face: f64,
        junior_face: f64,
        volatility: f64,
        maturity: f64,
        rate: f64,
    ) -> Result<Self> {
        Self::with_dividends(
            asset_value,
            senior_face,
            junior_face,
            volatility,
            maturity,
            rate,
            0.0,
        )
    }

    pub fn with_dividends(
        asset_value: f64,
        senior_face: f64,
        junior_face: f64,
        volatility: f64,
        maturity: f64,
        rate: f64,
        dividend_yield: f64,
    ) -> Result<Self> {
        require_positive("asset_value", asset_value)?;
        require_positive("senior_face", senior_face)?;
        require_positive("junior_face", junior_face)?;
        require_nonnegative("volatility", volatility)?;
        require_positive("maturity", maturity)?;
        require_finite("rate", rate)?;
        require_nonnegative("dividend_yield", dividend_yield)?;
        Ok(Self {
            asset_value,
            senior_face,
            junior_face,
            volatility,
            maturity,
            rate,
            dividend_yield,
        })
    }

    pub fn asset_value(&self) -> f64 {
        self.asset_value
    }

    pub fn senior_face(&self) -> f64 {
        self.senior_face
    }

    pub fn junior_face(&self) -> f64 {
        self.junior_face
    }

    /// `F_S + F_J`
    pub fn total_face(&self) -> f64 {
        self.senior_face + self.junior_face
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

    pub fn discount_factor(&self) -> f64 {
        (-self.rate * self.maturity).exp()
    }

    pub fn with_volatility(self, volatility: f64) -> Result<Self> {
        require_nonnegative("volatility", volatility)?;
        Ok(Self { volatility, ..self })
    }

    pub fn with_asset_value(self, asset_value: f64) -> Result<Self> {
        require_positive("asset_value", asset_value)?;
        Ok(Self {
            asset_value,
            ..self
        })
    }

    pub fn with_faces(self, senior_face: f64, junior_face: f64) -> Result<Self> {
        require_positive("senior_face", senior_face)?;
        require_positive("junior_face", junior_face)?;
        Ok(Self {
            senior_face,
            junior_face,
            ..self
        })
    }

    pub fn with_dividend_yield(self, dividend_yield: f64) -> Result<Self> {
        require_nonnegative("dividend_yield", dividend_yield)?;
        Ok(Self {
            dividend_yield,
            ..self
        })
    }

    /// Option on the firm's assets struck at `strike`, sharing every other parameter.
    pub fn option_at(&self, strike: f64) -> OptionInputs {
        // Every field was validated on construction; only the strike is new and
        // both callers pass a positive face value.
        OptionInputs::new(
            self.asset_value,
            strike,
            self.volatility,
            self.maturity,
            self.rate,
            self.dividend_yield,
        )
        .expect("capital structure fields are validated on construction")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClaimValues {
    pub senior_value: f64,
    pub junior_value: f64,
    pub equity_value: f64,
    pub total: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MaturityPayoffs {
    pub senior_payoff: f64,
    pub junior_payoff: f64,
    pub equity_payoff: f64,
}

/// Absolute-priority split of the terminal asset value.
///
/// Equity is computed as the remainder after the junior tranche so the three
/// components add back to `terminal_value`.
pub fn payoffs_at_maturity(
    terminal_value: f64,
    senior_face: f64,
    junior_face: f64,
) -> MaturityPayoffs {
    let terminal_value = terminal_value.max(0.0);
    let senior_payoff = terminal_value.min(senior_face);
    let after_senior = terminal_value - senior_payoff;
    let junior_payoff = after_senior.min(junior_face);
    MaturityPayoffs {
        senior_payoff,
        junior_payoff,
        equity_payoff: after_senior - junior_payoff,
    }
}

/// Riskless bond on `F_S` less a put struck at `F_S`.
pub fn senior_debt_value(cs: &CapitalStructure) -> f64 {
    let riskless = cs.senior_face * cs.discount_factor();
    (riskless - put_price(&cs.option_at(cs.senior_face))).clamp(0.0, riskless)
}

/// Bull spread: long a call at `F_S`, short a call at `F_S + F_J`.
pub fn junior_debt_value(cs: &CapitalStructure) -> f64 {
    let long = call_price(&cs.option_at(cs.senior_face));
    let short = call_price(&cs.option_at(cs.total_face()));
    (long - short).clamp(0.0, cs.junior_face * cs.discount_factor())
}

/// Shortfall of the junior claim below its riskless value,
/// `F_J e^{-r tau} - B_J`, evaluated as the put spread
/// `Put(F_S + F_J) - Put(F_S)`.
///
/// The put spread carries full relative precision when default is remote,
/// where `B_J` itself rounds to the riskless value. Consecutive differences
/// of this quantity are the negated consecutive differences of `B_J`.
pub fn junior_credit_discount(cs: &CapitalStructure) -> f64 {
    let upper = put_price(&cs.option_at(cs.total_face()));
    let lower = put_price(&cs.option_at(cs.senior_face));
    (upper - lower).max(0.0)
}

/// `B_J(to) - B_J(from)` for two volatilities, holding everything else fixed.
///
/// The discounted junior face is constant in volatility, so the change is
/// taken from whichever of `B_J` and the credit discount is smaller at `from`;
/// differencing the larger one would lose the change to rounding.
pub fn junior_value_change(cs: &CapitalStructure, from: f64, to: f64) -> Result<f64> {
    let a = cs.with_volatility(from)?;
    let b = cs.with_volatility(to)?;
    if junior_credit_discount(&a) < junior_debt_value(&a) {
        Ok(junior_credit_discount(&a) - junior_credit_discount(&b))
    } else {
        Ok(junior_debt_value(&b) - junior_debt_value(&a))
    }
}

pub fn equity_value(cs: &CapitalStructure) -> f64 {
    call_price(&cs.option_at(cs.total_face()))
}

pub fn value_all_claims(cs: &CapitalStructure) -> ClaimValues {
    let senior_value = senior_debt_value(cs);
    let junior_value = junior_debt_value(cs);
    let equity_value = equity_value(cs);
    ClaimValues {
        senior_value,
        junior_value,
        equity_value,
        total: senior_value + junior_value + equity_value,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn junior_value_change_matches_plain_difference_near_distress() {
        let cs = CapitalStructure::new(62.0, 60.0, 10.0, 0.2, 1.0, 0.01).unwrap();
        let plain = junior_debt_value(&cs.with_volatility(0.3).unwrap())
            - junior_debt_value(&cs.with_volatility(0.2).unwrap());
        let change = junior_value_change(&cs, 0.2, 0.3).unwrap();
        assert!((change - plain).abs() < 1e-13);
    }

    #[test]
    fn junior_value_change_resolves_remote_default() {
        let cs = CapitalStructure::new(100.0, 60.0, 10.0, 0.02, 1.0, 0.01).unwrap();
        let plain = junior_debt_value(&cs.with_volatility(0.03).unwrap())
            - junior_debt_value(&cs.with_volatility(0.02).unwrap());
        assert_eq!(plain, 0.0);
        assert!(junior_value_change(&cs, 0.02, 0.03).unwrap() < 0.0);
    }

    const R: f64 = 0.01;

    fn cs(v: f64, fs: f64, fj: f64, sigma: f64) -> CapitalStructure {
        CapitalStructure::new(v, fs, fj, sigma, 1.0, R).unwrap()
    }

    #[test]
    fn payoffs_solvent() {
        let p = payoffs_at_maturity(100.0, 60.0, 10.0);
        assert_eq!(
            (p.senior_payoff, p.junior_payoff, p.equity_payoff),
            (60.0, 10.0, 30.0)
        );
    }

    #[test]
    fn payoffs_junior_is_residual() {
        let p = payoffs_at_maturity(65.0, 60.0, 10.0);
        assert_eq!(
            (p.senior_payoff, p.junior_payoff, p.equity_payoff),
            (60.0, 5.0, 0.0)
        );
    }

    #[test]
    fn payoffs_senior_absorbs_all() {
        let p = payoffs_at_maturity(40.0, 60.0, 10.0);
        assert_eq!(
            (p.senior_payoff, p.junior_payoff, p.equity_payoff),
            (40.0, 0.0, 0.0)
        );
    }

    #[test]
    fn zero_volatility_limits() {
        let df = (-R).exp();
        let c = value_all_claims(&cs(100.0, 60.0, 10.0, 0.0));
        assert!((c.senior_value - 60.0 * df).abs() < 1e-12);
        assert!((c.junior_value - 10.0 * df).abs() < 1e-12);
        assert!((c.equity_value - (100.0 - 70.0 * df)).abs() < 1e-12);

        assert!((senior_debt_value(&cs(40.0, 60.0, 10.0, 0.0)) - 40.0).abs() < 1e-12);
        // V_T = 65 e^{r} lands inside the junior tranche
        assert!((junior_debt_value(&cs(65.0, 60.0, 10.0, 0.0)) - (65.0 - 60.0 * df)).abs() < 1e-12);
        assert_eq!(equity_value(&cs(62.0, 60.0, 10.0, 0.0)), 0.0);
    }

    #[test]
    fn reference_values() {
        // mpmath at 50 digits
        let cases = [
            (
                62.0,
                0.262,
                54.291_207_952_295_574,
                3.913_311_660_233_279,
                3.795_480_387_471_147,
            ),
            (
                62.0,
                0.10,
                58.062_803_101_106_433,
                3.499_725_433_116_392,
                0.437_471_465_777_175_2,
            ),
            (
                62.0,
                0.50,
                48.675_311_057_968_29,
                3.702_836_547_974_098,
                9.621_852_394_057_613,
            ),
            (
                100.0,
                0.10,
                59.402_989_892_934_676,
                9.900_251_079_142_588,
                30.696_759_027_922_737,
            ),
        ];
        for (v, sigma, senior, junior, equity) in cases {
            let c = value_all_claims(&cs(v, 60.0, 10.0, sigma));
            assert!(
                (c.senior_value - senior).abs() < 1e-11,
                "senior {v} {sigma}"
            );
            assert!(
                (c.junior_value - junior).abs() < 1e-11,
                "junior {v} {sigma}"
            );
            assert!(
                (c.equity_value - equity).abs() < 1e-11,
                "equity {v} {sigma}"
            );
        }
    }

    #[test]
    fn credit_discount_matches_riskless_gap() {
        let s = cs(62.0, 60.0, 10.0, 0.262);
        let gap = 10.0 * s.discount_factor() - junior_debt_value(&s);
        assert!((junior_credit_discount(&s) - gap).abs() < 1e-12);
    }

    #[test]
    fn credit_discount_resolves_remote_default() {
        // B_J rounds to the riskless value at both points, the discount does not.
        let a = cs(100.0, 60.0, 10.0, 0.010);
        let b = cs(100.0, 60.0, 10.0, 0.014);
        assert_eq!(junior_debt_value(&a), junior_debt_value(&b));
        let (da, db) = (junior_credit_discount(&a), junior_credit_discount(&b));
        assert!(da > 0.0 && db > da, "{da} {db}");
    }

    #[test]
    fn dividends_shift_the_sum_identity() {
        let s = CapitalStructure::with_dividends(80.0, 60.0, 10.0, 0.3, 2.0, 0.02, 0.03).unwrap();
        let c = value_all_claims(&s);
        assert!((c.total - 80.0 * (-0.06f64).exp()).abs() < 1e-10);
    }

    #[test]
    fn junior_tends_to_long_call_for_huge_junior_face() {
        let s = cs(62.0, 60.0, 1e9, 0.3);
        let call = call_price(&s.option_at(60.0));
        assert!((junior_debt_value(&s) - call).abs() < 1e-9);
    }

    #[test]
    fn junior_vanishes_at_extreme_volatility() {
        assert!(junior_debt_value(&cs(62.0, 60.0, 10.0, 40.0)) < 1e-12);
    }

    #[test]
    fn rejects_missing_tranches() {
        assert!(CapitalStructure::new(62.0, 0.0, 10.0, 0.1, 1.0, R).is_err());
        assert!(CapitalStructure::new(62.0, 60.0, 0.0, 0.1, 1.0, R).is_err());
        assert!(CapitalStructure::new(62.0, 60.0, 10.0, 0.1, -1.0, R).is_err());
    }

    fn structure() -> impl Strategy<Value = CapitalStructure> {
        (
            1.0f64..300.0,
            1.0f64..200.0,
            0.5f64..100.0,
            0.0f64..1.5,
            0.05f64..10.0,
            -0.01f64..0.08,
        )
            .prop_map(|(v, fs, fj, s, t, r)| CapitalStructure::new(v, fs, fj, s, t, r).unwrap())
    }

    proptest! {
        #[test]
        fn claims_sum_to_asset_value(s in structure()) {
            let c = value_all_claims(&s);
            prop_assert!((c.total - s.asset_value()).abs() < 1e-10 * s.asset_value());
            for part in [c.senior_value, c.junior_value, c.equity_value] {
                prop_assert!(part >= 0.0 && part <= s.asset_value() * (1.0 + 1e-12));
            }
        }

        #[test]
        fn payoffs_add_back_to_terminal_value(vt in 0.0f64..500.0, fs in 0.1f64..200.0, fj in 0.1f64..200.0) {
            let p = payoffs_at_maturity(vt, fs, fj);
            let sum = p.senior_payoff + p.junior_payoff + p.equity_payoff;
            prop_assert!((sum - vt).abs() <= f64::EPSILON * vt);
        }

        #[test]
        fn junior_payoff_forms_agree(vt in 0.0f64..500.0, fs in 0.1f64..200.0, fj in 0.1f64..200.0) {
            let clamp = payoffs_at_maturity(vt, fs, fj).junior_payoff;
            let max_of_min = (vt - fs).min(fj).max(0.0);
            let call_spread = (vt - fs).max(0.0) - (vt - fs - fj).max(0.0);
            prop_assert!((clamp - max_of_min).abs() <= 1e-12 * vt.max(1.0));
            prop_assert!((clamp - call_spread).abs() <= 1e-12 * vt.max(1.0));
        }

        #[test]
        fn junior_monotone_in_asset_value_and_junior_face(
            s in structure(), dv in 0.0f64..50.0, dfj in 0.0f64..50.0,
        ) {
            let richer = s.with_asset_value(s.asset_value() + dv).unwrap();
            prop_assert!(junior_debt_value(&richer) + 1e-12 >= junior_debt_value(&s));
            let bigger = s.with_faces(s.senior_face(), s.junior_face() + dfj).unwrap();
            prop_assert!(junior_debt_value(&bigger) + 1e-12 >= junior_debt_value(&s));
        }

        #[test]
        fn senior_monotone(s in structure(), dv in 0.0f64..50.0, ds in 0.0f64..1.0) {
            let richer = s.with_asset_value(s.asset_value() + dv).unwrap();
            prop_assert!(senior_debt_value(&richer) + 1e-12 >= senior_debt_value(&s));
            let riskier = s.with_volatility(s.volatility() + ds).unwrap();
            prop_assert!(senior_debt_value(&riskier) <= senior_debt_value(&s) + 1e-12);
        }

        #[test]
        fn equity_nondecreasing_in_volatility(s in structure(), ds in 0.0f64..1.0) {
            let riskier = s.with_volatility(s.volatility() + ds).unwrap();
            prop_assert!(equity_value(&riskier) + 1e-12 >= equity_value(&s));
        }

        #[test]
        fn junior_bounded_by_riskless_face(s in structure()) {
            let b = junior_debt_value(&s);
            prop_assert!(b >= 0.0 && b <= s.junior_face() * s.discount_factor());
        }
    }
}
