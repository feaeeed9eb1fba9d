//! Numeric maximization of the junior value over volatility.
//!
//! A 64-point log-spaced scan over `[lower, upper]` locates the best grid
//! point. If it is interior, its two neighbours bracket the maximum of a
//! unimodal function and golden-section search narrows the bracket to
//! `tolerance`. A best point at either end means there is no interior
//! maximizer on the grid.

use serde::{Deserialize, Serialize};

use crate::claims::{junior_debt_value, CapitalStructure};
use crate::error::{ModelError, Result};

pub const COARSE_POINTS: usize = 64;

/// `(sqrt(5) - 1) / 2`
const INV_PHI: f64 = 0.618_033_988_749_894_9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub lower: f64,
    pub upper: f64,
    pub tolerance: f64,
}

impl GridSpec {
    pub fn new(lower: f64, upper: f64, tolerance: f64) -> Result<Self> {
        let grid = Self {
            lower,
            upper,
            tolerance,
        };
        grid.validate()?;
        Ok(grid)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.lower.is_finite() && self.upper.is_finite() && self.tolerance.is_finite()) {
            return Err(ModelError::InvalidGrid(
                "bounds and tolerance must be finite",
            ));
        }
        if self.lower <= 0.0 {
            return Err(ModelError::InvalidGrid("lower bound must be > 0"));
        }
        if self.lower >= self.upper {
            return Err(ModelError::InvalidGrid(
                "lower bound must be below upper bound",
            ));
        }
        if self.tolerance <= 0.0 {
            return Err(ModelError::InvalidGrid("tolerance must be > 0"));
        }
        Ok(())
    }

    fn coarse_points(&self) -> Vec<f64> {
        let (lo, hi) = (self.lower.ln(), self.upper.ln());
        let step = (hi - lo) / (COARSE_POINTS - 1) as f64;
        (0..COARSE_POINTS)
            .map(|i| match i {
                0 => self.lower,
                i if i == COARSE_POINTS - 1 => self.upper,
                i => (lo + step * i as f64).exp(),
            })
            .collect()
    }
}

/// Golden-section search for the maximum of a unimodal `f` on `[a, b]`.
pub fn golden_section_maximize<F: Fn(f64) -> f64>(
    f: F,
    mut a: f64,
    mut b: f64,
    tolerance: f64,
) -> f64 {
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > tolerance {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}

/// Coarse log-grid scan followed by golden-section refinement.
pub fn argmax_coarse_then_golden<F: Fn(f64) -> f64>(f: F, grid: &GridSpec) -> Result<Option<f64>> {
    grid.validate()?;
    let points = grid.coarse_points();
    let mut best = 0;
    let mut best_value = f(points[0]);
    for (i, &x) in points.iter().enumerate().skip(1) {
        let value = f(x);
        if value > best_value {
            best = i;
            best_value = value;
        }
    }
    if best == 0 || best == points.len() - 1 {
        return Ok(None);
    }
    Ok(Some(golden_section_maximize(
        &f,
        points[best - 1],
        points[best + 1],
        grid.tolerance,
    )))
}

/// Volatility maximizing the junior value, found numerically.
pub fn argmax_sigma_numeric(cs: &CapitalStructure, grid: &GridSpec) -> Result<Option<f64>> {
    argmax_coarse_then_golden(
        |sigma| {
            let bumped = cs
                .with_volatility(sigma)
                .expect("grid volatilities are positive");
            junior_debt_value(&bumped)
        },
        grid,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reference(v: f64) -> CapitalStructure {
        CapitalStructure::new(v, 60.0, 10.0, 0.1, 1.0, 0.01).unwrap()
    }

    #[test]
    fn known_quadratic_optimum() {
        let grid = GridSpec::new(0.01, 1.0, 1e-8).unwrap();
        let got = argmax_coarse_then_golden(|x| -(x - 0.3) * (x - 0.3), &grid)
            .unwrap()
            .unwrap();
        assert!((got - 0.3).abs() < 1e-8, "{got}");
    }

    #[test]
    fn golden_section_on_plain_interval() {
        let got = golden_section_maximize(|x: f64| (x * 2.0).sin(), 0.0, 1.5, 1e-10);
        // value differences vanish below ~sqrt(eps) from the peak
        assert!((got - std::f64::consts::FRAC_PI_4).abs() < 1e-7);
    }

    #[test]
    fn reference_hump() {
        let grid = GridSpec::new(0.01, 1.5, 1e-6).unwrap();
        let got = argmax_sigma_numeric(&reference(62.0), &grid)
            .unwrap()
            .unwrap();
        // sqrt(ln(4200 / 62^2) - 0.02), evaluated independently
        assert!((got - 0.261_860_715_230_972_6).abs() < 1e-4, "{got}");
    }

    #[test]
    fn solvent_has_no_interior_maximum() {
        let grid = GridSpec::new(0.01, 1.5, 1e-6).unwrap();
        assert_eq!(
            argmax_sigma_numeric(&reference(100.0), &grid).unwrap(),
            None
        );
    }

    #[test]
    fn increasing_function_has_no_interior_maximum() {
        let grid = GridSpec::new(0.01, 1.0, 1e-6).unwrap();
        assert_eq!(argmax_coarse_then_golden(|x| x, &grid).unwrap(), None);
    }

    #[test]
    fn grid_validation() {
        assert!(GridSpec::new(0.0, 1.0, 1e-6).is_err());
        assert!(GridSpec::new(0.5, 0.5, 1e-6).is_err());
        assert!(GridSpec::new(0.1, 1.0, 0.0).is_err());
        assert!(GridSpec::new(0.1, f64::INFINITY, 1e-6).is_err());
    }

    #[test]
    fn coarse_grid_is_log_spaced_and_hits_bounds() {
        let grid = GridSpec::new(0.01, 1.5, 1e-6).unwrap();
        let pts = grid.coarse_points();
        assert_eq!(pts.len(), COARSE_POINTS);
        assert_eq!(pts[0], 0.01);
        assert_eq!(pts[COARSE_POINTS - 1], 1.5);
        let r0 = pts[1] / pts[0];
        for w in pts.windows(2) {
            assert!((w[1] / w[0] - r0).abs() < 1e-12);
        }
    }
}
