//! Parameter sweeps producing plot-ready tables.

use serde::{Deserialize, Serialize};

use crate::claims::{junior_credit_discount, value_all_claims, CapitalStructure};
use crate::error::{require_positive, ModelError, Result};
use crate::risk::{chosen_risk, classify_regime, junior_debt_vega};

/// Column order of [`sweep_sigma`] tables, after the `sigma` column.
pub const SIGMA_SWEEP_COLUMNS: [&str; 5] = [
    "junior_value",
    "senior_value",
    "equity_value",
    "junior_vega",
    "junior_credit_discount",
];

/// Column order of [`sweep_structure`] tables, after the `asset_value` column.
pub const STRUCTURE_SWEEP_COLUMNS: [&str; 4] = ["chosen_risk", "sigma_max", "v_hat", "v_star"];

/// Rows keyed by a strictly increasing independent variable; every row
/// carries one value per output column. Missing values are NaN.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepTable {
    independent_name: String,
    columns: Vec<String>,
    rows: Vec<SweepRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub independent: f64,
    pub values: Vec<f64>,
}

impl SweepTable {
    pub fn new<S: Into<String>>(independent_name: S, columns: Vec<String>) -> Self {
        Self {
            independent_name: independent_name.into(),
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, independent: f64, values: Vec<f64>) -> Result<()> {
        if values.len() != self.columns.len() {
            return Err(ModelError::InvalidSweep(format!(
                "row has {} values for {} columns",
                values.len(),
                self.columns.len()
            )));
        }
        if let Some(last) = self.rows.last() {
            if !(independent > last.independent) {
                return Err(ModelError::InvalidSweep(format!(
                    "{} must be strictly increasing ({} after {})",
                    self.independent_name, independent, last.independent
                )));
            }
        }
        self.rows.push(SweepRow {
            independent,
            values,
        });
        Ok(())
    }

    pub fn independent_name(&self) -> &str {
        &self.independent_name
    }

    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    pub fn rows(&self) -> &[SweepRow] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn independent_values(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.independent).collect()
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let idx = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r.values[idx]).collect())
    }
}

/// `steps` evenly spaced points from `lower` to `upper` inclusive.
pub fn linspace(lower: f64, upper: f64, steps: usize) -> Result<Vec<f64>> {
    if steps < 2 {
        return Err(ModelError::InvalidSweep(
            "at least two steps are required".into(),
        ));
    }
    if !(lower.is_finite() && upper.is_finite()) || lower >= upper {
        return Err(ModelError::InvalidSweep(format!(
            "range [{lower}, {upper}] must be finite with lower < upper"
        )));
    }
    let step = (upper - lower) / (steps - 1) as f64;
    Ok((0..steps)
        .map(|i| {
            if i == steps - 1 {
                upper
            } else {
                lower + step * i as f64
            }
        })
        .collect())
}

/// Claim values and junior vega across volatilities in `[lower, upper]`.
pub fn sweep_sigma(
    cs: &CapitalStructure,
    lower: f64,
    upper: f64,
    steps: usize,
) -> Result<SweepTable> {
    if !(lower > 0.0) {
        return Err(ModelError::InvalidSweep(format!(
            "sigma lower bound must be > 0 (got {lower})"
        )));
    }
    let mut table = SweepTable::new(
        "sigma",
        SIGMA_SWEEP_COLUMNS.iter().map(|c| c.to_string()).collect(),
    );
    for sigma in linspace(lower, upper, steps)? {
        let at = cs.with_volatility(sigma)?;
        let claims = value_all_claims(&at);
        table.push_row(
            sigma,
            vec![
                claims.junior_value,
                claims.senior_value,
                claims.equity_value,
                junior_debt_vega(&at)?,
                junior_credit_discount(&at),
            ],
        )?;
    }
    Ok(table)
}

/// Split of a fixed total face value between senior and junior debt, swept
/// over asset values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StructureSweepSpec {
    pub total_face: f64,
    pub junior_proportions: Vec<f64>,
    pub asset_lower: f64,
    pub asset_upper: f64,
    pub steps: usize,
    pub initial_sigma: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StructureSweep {
    pub junior_proportion: f64,
    pub senior_face: f64,
    pub junior_face: f64,
    pub table: SweepTable,
}

/// For each junior proportion `p`, `F_J = p * total` and `F_S = (1 - p) * total`;
/// rows report chosen risk, `sigma_max` (NaN when absent), `V_hat(sigma_0)` and
/// `V_star` against asset value. Maturity, rate and dividend yield come from `base`.
pub fn sweep_structure(
    base: &CapitalStructure,
    spec: &StructureSweepSpec,
) -> Result<Vec<StructureSweep>> {
    require_positive("total_face", spec.total_face)?;
    require_positive("initial_sigma", spec.initial_sigma)?;
    require_positive("asset_lower", spec.asset_lower)?;
    if spec.junior_proportions.is_empty() {
        return Err(ModelError::InvalidSweep(
            "no junior proportions given".into(),
        ));
    }
    let asset_values = linspace(spec.asset_lower, spec.asset_upper, spec.steps)?;

    spec.junior_proportions
        .iter()
        .map(|&p| {
            if !(p > 0.0 && p < 1.0) {
                return Err(ModelError::InvalidSweep(format!(
                    "junior proportion must lie in (0, 1) (got {p})"
                )));
            }
            let junior_face = p * spec.total_face;
            let senior_face = (1.0 - p) * spec.total_face;
            let structure = base
                .with_faces(senior_face, junior_face)?
                .with_volatility(spec.initial_sigma)?;
            let mut table = SweepTable::new(
                "asset_value",
                STRUCTURE_SWEEP_COLUMNS
                    .iter()
                    .map(|c| c.to_string())
                    .collect(),
            );
            for &v in &asset_values {
                let at = structure.with_asset_value(v)?;
                let profile = classify_regime(&at, spec.initial_sigma)?;
                table.push_row(
                    v,
                    vec![
                        chosen_risk(&at, spec.initial_sigma)?,
                        profile.sigma_max.unwrap_or(f64::NAN),
                        profile.v_hat,
                        profile.v_star,
                    ],
                )?;
            }
            Ok(StructureSweep {
                junior_proportion: p,
                senior_face,
                junior_face,
                table,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reference(v: f64) -> CapitalStructure {
        CapitalStructure::new(v, 60.0, 10.0, 0.1, 1.0, 0.01).unwrap()
    }

    #[test]
    fn linspace_endpoints() {
        let xs = linspace(0.01, 0.8, 200).unwrap();
        assert_eq!(xs.len(), 200);
        assert_eq!(xs[0], 0.01);
        assert_eq!(xs[199], 0.8);
        assert!(xs.windows(2).all(|w| w[1] > w[0]));
        assert!(linspace(1.0, 1.0, 5).is_err());
        assert!(linspace(0.0, 1.0, 1).is_err());
    }

    #[test]
    fn table_rejects_bad_rows() {
        let mut t = SweepTable::new("x", vec!["a".into()]);
        t.push_row(1.0, vec![2.0]).unwrap();
        assert!(t.push_row(1.0, vec![2.0]).is_err());
        assert!(t.push_row(2.0, vec![2.0, 3.0]).is_err());
        assert_eq!(t.column("a"), Some(vec![2.0]));
        assert_eq!(t.column("b"), None);
    }

    #[test]
    fn sigma_sweep_rejects_nonpositive_lower() {
        assert!(sweep_sigma(&reference(62.0), 0.0, 0.8, 10).is_err());
        assert!(sweep_sigma(&reference(62.0), 0.5, 0.4, 10).is_err());
    }

    #[test]
    fn sigma_sweep_peak_near_closed_form() {
        let t = sweep_sigma(&reference(62.0), 0.01, 0.8, 200).unwrap();
        let bj = t.column("junior_value").unwrap();
        let sig = t.independent_values();
        let peak = (0..bj.len())
            .max_by(|&a, &b| bj[a].total_cmp(&bj[b]))
            .unwrap();
        assert!((sig[peak] - 0.2619).abs() < 0.004);
    }

    #[test]
    fn structure_sweep_rejects_bad_proportion() {
        let spec = StructureSweepSpec {
            total_face: 100.0,
            junior_proportions: vec![0.1, 1.0],
            asset_lower: 50.0,
            asset_upper: 70.0,
            steps: 5,
            initial_sigma: 0.1,
        };
        assert!(sweep_structure(&reference(62.0), &spec).is_err());
    }

    #[test]
    fn structure_sweep_ten_percent_junior_at_62() {
        let spec = StructureSweepSpec {
            total_face: 100.0,
            junior_proportions: vec![0.1],
            asset_lower: 50.0,
            asset_upper: 70.0,
            steps: 21,
            initial_sigma: 0.1,
        };
        let sweeps = sweep_structure(&reference(62.0), &spec).unwrap();
        let s = &sweeps[0];
        assert_eq!((s.senior_face, s.junior_face), (90.0, 10.0));
        let v = s.table.independent_values();
        let idx = v.iter().position(|&x| x == 62.0).unwrap();
        let chosen = s.table.column("chosen_risk").unwrap()[idx];
        let expected = ((9000.0f64 / 3844.0).ln() - 0.02).sqrt();
        assert!((chosen - expected).abs() < 1e-14);
    }
}
