//! Command-line front end for `subdebt-core`.
//!
//! Exit status: 0 on success, 1 on I/O failure, 2 on bad arguments,
//! 3 when the scenario file cannot be parsed, 4 when its parameters are
//! invalid and 5 when a `verify` check fails.

pub mod args;
pub mod commands;
pub mod error;
pub mod output;
pub mod scenario;

use std::path::Path;

use subdebt_core::StructureSweepSpec;

use crate::args::{Cli, Command, GlobalArgs};
use crate::error::CliError;
use crate::output::Table;
use crate::scenario::Scenario;

/// Scenario with command-line overrides applied.
pub fn resolve_scenario(path: &Path, global: &GlobalArgs) -> Result<Scenario, CliError> {
    let mut scenario = Scenario::load(path)?;
    if let Some(sigma) = global.sigma {
        scenario.sigma = sigma;
    }
    if let Some(initial) = global.initial_sigma {
        scenario.initial_sigma = initial;
    }
    if let Some(seed) = global.seed {
        scenario.monte_carlo.seed = seed;
    }
    if let Some(paths) = global.paths {
        scenario.monte_carlo.paths = paths;
    }
    scenario.validate()?;
    Ok(scenario)
}

/// Rendered output of one command.
#[derive(Debug)]
pub struct Report {
    pub text: String,
    /// Set when a `verify` check failed; the report is still written.
    pub failure: Option<CliError>,
}

impl Report {
    fn ok(text: String) -> Self {
        Self {
            text,
            failure: None,
        }
    }
}

/// Runs one command.
pub fn run(cli: &Cli, scenario_path: &Path) -> Result<Report, CliError> {
    let scenario = resolve_scenario(scenario_path, &cli.global)?;
    let format = cli.global.format;
    let table: Table = match &cli.command {
        Command::Price => commands::price(&scenario)?,
        Command::Thresholds => commands::thresholds(&scenario)?,
        Command::SweepSigma(a) => {
            let d = scenario.sigma_sweep;
            commands::sweep_sigma_table(
                &scenario,
                a.lower.unwrap_or(d.lower),
                a.upper.unwrap_or(d.upper),
                a.steps.unwrap_or(d.steps),
            )?
        }
        Command::SweepStructure(a) => {
            let base = scenario.structure_sweep_spec();
            let pick = |flag: Option<f64>, from: fn(&StructureSweepSpec) -> f64, name: &str| {
                flag.or(base.as_ref().map(from)).ok_or_else(|| {
                    CliError::Validation(format!(
                        "{name} is required (flag or [structure_sweep] section)"
                    ))
                })
            };
            let spec = StructureSweepSpec {
                total_face: pick(a.total_face, |s| s.total_face, "total_face")?,
                junior_proportions: a
                    .proportions
                    .clone()
                    .or(base.as_ref().map(|s| s.junior_proportions.clone()))
                    .ok_or_else(|| {
                        CliError::Validation("junior proportions are required".into())
                    })?,
                asset_lower: pick(a.asset_lower, |s| s.asset_lower, "asset_lower")?,
                asset_upper: pick(a.asset_upper, |s| s.asset_upper, "asset_upper")?,
                steps: a
                    .steps
                    .or(base.as_ref().map(|s| s.steps))
                    .ok_or_else(|| CliError::Validation("steps is required".into()))?,
                initial_sigma: scenario.initial_sigma,
            };
            commands::sweep_structure_table(&scenario, &spec)?
        }
        Command::Verify(a) => {
            let mc = scenario.mc_config()?;
            let grid = scenario.grid()?;
            let bump = a.bump.unwrap_or(scenario.search.bump);
            let outcome = commands::verify(&scenario, &mc, &grid, bump)?;
            let text = outcome.table.render(format)?;
            let failure = (outcome.failed > 0).then_some(CliError::Verification {
                failed: outcome.failed,
                total: outcome.total,
            });
            return Ok(Report { text, failure });
        }
    };
    Ok(Report::ok(table.render(format)?))
}
