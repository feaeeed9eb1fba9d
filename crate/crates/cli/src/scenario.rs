//! Scenario files: one capital structure per TOML file, with optional
//! sections for Monte-Carlo, search and sweep settings.
//!
//! ```toml
//! name = "distressed"
//! asset_value = 62.0
//! senior_face = 60.0
//! junior_face = 10.0
//! sigma = 0.10
//! initial_sigma = 0.10
//! maturity = 1.0
//! rate = 0.01
//! dividend_yield = 0.0   # optional
//!
//! [monte_carlo]          # optional
//! paths = 1000000
//! seed = 1
//! ```

use std::path::Path;

use serde::Deserialize;
use subdebt_core::{CapitalStructure, GridSpec, MCConfig, StructureSweepSpec};

use crate::error::CliError;

pub const DEFAULT_PATHS: u64 = 1_000_000;
pub const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    #[serde(default)]
    pub name: Option<String>,
    pub asset_value: f64,
    pub senior_face: f64,
    pub junior_face: f64,
    pub sigma: f64,
    pub initial_sigma: f64,
    pub maturity: f64,
    pub rate: f64,
    #[serde(default)]
    pub dividend_yield: f64,
    #[serde(default)]
    pub monte_carlo: MonteCarloSection,
    #[serde(default)]
    pub search: SearchSection,
    #[serde(default)]
    pub sigma_sweep: SigmaSweepSection,
    #[serde(default)]
    pub structure_sweep: Option<StructureSweepSection>,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct MonteCarloSection {
    pub paths: u64,
    pub seed: u64,
    pub antithetic: bool,
}

impl Default for MonteCarloSection {
    fn default() -> Self {
        Self {
            paths: DEFAULT_PATHS,
            seed: DEFAULT_SEED,
            antithetic: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SearchSection {
    pub lower: f64,
    pub upper: f64,
    pub tolerance: f64,
    /// Finite-difference bump for the vega check.
    pub bump: f64,
}

impl Default for SearchSection {
    fn default() -> Self {
        Self {
            lower: 0.01,
            upper: 1.5,
            tolerance: 1e-8,
            bump: 1e-5,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SigmaSweepSection {
    pub lower: f64,
    pub upper: f64,
    pub steps: usize,
}

impl Default for SigmaSweepSection {
    fn default() -> Self {
        Self {
            lower: 0.01,
            upper: 0.8,
            steps: 200,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureSweepSection {
    pub total_face: f64,
    pub junior_proportions: Vec<f64>,
    pub asset_lower: f64,
    pub asset_upper: f64,
    pub steps: usize,
}

impl Scenario {
    pub fn from_toml(path: &Path, text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Parse {
            path: path.to_path_buf(),
            message: e.to_string(),
        })
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let scenario = Self::from_toml(path, &text)?;
        scenario.validate()?;
        Ok(scenario)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        self.structure()?;
        if !(self.initial_sigma.is_finite() && self.initial_sigma > 0.0) {
            return Err(CliError::Validation(format!(
                "initial_sigma must be finite and > 0 (got {})",
                self.initial_sigma
            )));
        }
        Ok(())
    }

    pub fn structure(&self) -> Result<CapitalStructure, CliError> {
        Ok(CapitalStructure::with_dividends(
            self.asset_value,
            self.senior_face,
            self.junior_face,
            self.sigma,
            self.maturity,
            self.rate,
            self.dividend_yield,
        )?)
    }

    pub fn mc_config(&self) -> Result<MCConfig, CliError> {
        let mc = MCConfig {
            path_count: self.monte_carlo.paths,
            seed: self.monte_carlo.seed,
            antithetic: self.monte_carlo.antithetic,
        };
        mc.validate()?;
        Ok(mc)
    }

    pub fn grid(&self) -> Result<GridSpec, CliError> {
        Ok(GridSpec::new(
            self.search.lower,
            self.search.upper,
            self.search.tolerance,
        )?)
    }

    pub fn structure_sweep_spec(&self) -> Option<StructureSweepSpec> {
        self.structure_sweep.as_ref().map(|s| StructureSweepSpec {
            total_face: s.total_face,
            junior_proportions: s.junior_proportions.clone(),
            asset_lower: s.asset_lower,
            asset_upper: s.asset_upper,
            steps: s.steps,
            initial_sigma: self.initial_sigma,
        })
    }
}
