use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "subdebt",
    version,
    about = "Price senior debt, junior debt and equity, and analyse junior risk-shifting incentives"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Scenario file (TOML).
    #[arg(long, global = true, value_name = "PATH")]
    pub scenario: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write output here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Monte-Carlo seed (overrides the scenario).
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Monte-Carlo path count (overrides the scenario).
    #[arg(long, global = true)]
    pub paths: Option<u64>,

    /// Asset volatility (overrides the scenario's `sigma`).
    #[arg(long, global = true)]
    pub sigma: Option<f64>,

    /// Initial volatility sigma_0 (overrides the scenario's `initial_sigma`).
    #[arg(long, global = true)]
    pub initial_sigma: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Claim values and junior vega.
    Price,
    /// Risk-shifting thresholds, maximizing volatility and regime.
    Thresholds,
    /// Claim values and junior vega over a volatility range.
    SweepSigma(SigmaSweepArgs),
    /// Chosen risk and thresholds against asset value for several junior shares.
    SweepStructure(StructureSweepArgs),
    /// Check closed forms against Monte-Carlo, numeric search and finite differences.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct SigmaSweepArgs {
    #[arg(long)]
    pub lower: Option<f64>,
    #[arg(long)]
    pub upper: Option<f64>,
    /// Number of points, endpoints included.
    #[arg(long)]
    pub steps: Option<usize>,
}

#[derive(Debug, Args)]
pub struct StructureSweepArgs {
    #[arg(long)]
    pub total_face: Option<f64>,
    /// Junior shares of the total face, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub proportions: Option<Vec<f64>>,
    #[arg(long)]
    pub asset_lower: Option<f64>,
    #[arg(long)]
    pub asset_upper: Option<f64>,
    /// Number of asset values, endpoints included.
    #[arg(long)]
    pub steps: Option<usize>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Finite-difference bump for the vega check.
    #[arg(long)]
    pub bump: Option<f64>,
}
