//! Subcommand implementations. Each returns a [`Table`]; `verify` also
//! reports whether every check passed.

use subdebt_core::oracle::argmax_sigma_numeric;
use subdebt_core::sweep::{sweep_sigma, sweep_structure};
use subdebt_core::{
    chosen_risk, classify_regime, finite_diff_vega, junior_debt_vega, mc_claim_values, v_star,
    value_all_claims, CapitalStructure, GridSpec, MCConfig, StructureSweepSpec,
};

use crate::error::CliError;
use crate::output::{Cell, Table};
use crate::scenario::Scenario;

/// Standard errors allowed between a closed-form value and its simulation.
/// Claims whose simulated payoff never varied use a tail bound instead; see
/// `MCEstimate::deviation_score`.
pub const MC_TOLERANCE_SE: f64 = 3.0;
/// Absolute agreement required between the closed-form and numeric maximizer.
pub const ARGMAX_TOLERANCE: f64 = 1e-4;
/// Relative agreement required between analytic and finite-difference vega.
pub const VEGA_TOLERANCE: f64 = 1e-6;

fn input_echo(cs: &CapitalStructure) -> Vec<(&'static str, Cell)> {
    vec![
        ("asset_value", Cell::number(cs.asset_value())),
        ("senior_face", Cell::number(cs.senior_face())),
        ("junior_face", Cell::number(cs.junior_face())),
        ("sigma", Cell::number(cs.volatility())),
        ("maturity", Cell::number(cs.maturity())),
        ("rate", Cell::number(cs.rate())),
        ("dividend_yield", Cell::number(cs.dividend_yield())),
    ]
}

fn single_row(fields: Vec<(&'static str, Cell)>) -> Table {
    let (names, cells): (Vec<_>, Vec<_>) = fields.into_iter().unzip();
    let mut table = Table::new(names);
    table.push(cells);
    table
}

/// Claim values and junior vega. Vega is missing at zero volatility.
pub fn price(scenario: &Scenario) -> Result<Table, CliError> {
    let cs = scenario.structure()?;
    let claims = value_all_claims(&cs);
    let vega = if cs.volatility() > 0.0 {
        Cell::number(junior_debt_vega(&cs)?)
    } else {
        Cell::Missing
    };
    let mut fields = input_echo(&cs);
    fields.extend([
        ("senior_value", Cell::number(claims.senior_value)),
        ("junior_value", Cell::number(claims.junior_value)),
        ("equity_value", Cell::number(claims.equity_value)),
        ("total", Cell::number(claims.total)),
        ("junior_vega", vega),
    ]);
    Ok(single_row(fields))
}

pub fn thresholds(scenario: &Scenario) -> Result<Table, CliError> {
    let cs = scenario.structure()?;
    let profile = classify_regime(&cs, scenario.initial_sigma)?;
    let mut fields = input_echo(&cs);
    fields.extend([
        ("initial_sigma", Cell::number(scenario.initial_sigma)),
        ("v_hat", Cell::number(profile.v_hat)),
        ("v_star", Cell::number(profile.v_star)),
        ("sigma_max", Cell::optional(profile.sigma_max)),
        ("regime", Cell::Text(profile.regime.as_str().into())),
        (
            "shifts_above_initial",
            Cell::Flag(profile.shifts_above_initial),
        ),
        (
            "chosen_risk",
            Cell::number(chosen_risk(&cs, scenario.initial_sigma)?),
        ),
    ]);
    Ok(single_row(fields))
}

pub fn sweep_sigma_table(
    scenario: &Scenario,
    lower: f64,
    upper: f64,
    steps: usize,
) -> Result<Table, CliError> {
    let cs = scenario.structure()?;
    Ok(Table::from_sweep(&sweep_sigma(&cs, lower, upper, steps)?))
}

/// One long table: each proportion's rows, led by the proportion and faces.
pub fn sweep_structure_table(
    scenario: &Scenario,
    spec: &StructureSweepSpec,
) -> Result<Table, CliError> {
    let sweeps = sweep_structure(&scenario.structure()?, spec)?;
    let mut combined: Option<Table> = None;
    for sweep in sweeps {
        let part = Table::from_sweep(&sweep.table).with_leading(
            &["junior_proportion", "senior_face", "junior_face"],
            vec![
                Cell::number(sweep.junior_proportion),
                Cell::number(sweep.senior_face),
                Cell::number(sweep.junior_face),
            ],
        );
        match combined.as_mut() {
            Some(table) => table.append(part),
            None => combined = Some(part),
        }
    }
    combined.ok_or_else(|| CliError::Validation("no junior proportions given".into()))
}

pub struct Verification {
    pub table: Table,
    pub failed: usize,
    pub total: usize,
}

struct Check {
    name: &'static str,
    closed_form: Cell,
    oracle: Cell,
    deviation: Cell,
    tolerance: f64,
    unit: &'static str,
    passed: bool,
}

/// Closed forms against simulation, numeric search and finite differences.
/// Claims are simulated at the scenario volatility; the vega check runs at
/// `initial_sigma`.
pub fn verify(
    scenario: &Scenario,
    mc: &MCConfig,
    grid: &GridSpec,
    bump: f64,
) -> Result<Verification, CliError> {
    let cs = scenario.structure()?;
    let mut checks = Vec::new();

    let closed = value_all_claims(&cs);
    let est = mc_claim_values(&cs, mc)?;
    for (name, estimate, value) in [
        ("senior_value", est.senior, closed.senior_value),
        ("junior_value", est.junior, closed.junior_value),
        ("equity_value", est.equity, closed.equity_value),
    ] {
        let deviation = estimate.deviation_score(value, cs.total_face());
        checks.push(Check {
            name,
            closed_form: Cell::number(value),
            oracle: Cell::number(estimate.mean),
            deviation: Cell::number(deviation),
            tolerance: MC_TOLERANCE_SE,
            unit: "standard_errors",
            passed: deviation <= MC_TOLERANCE_SE,
        });
    }

    let profile = classify_regime(&cs, scenario.initial_sigma)?;
    let closed_max = profile.sigma_max.filter(|&s| s > 0.0);
    let numeric_max = argmax_sigma_numeric(&cs, grid)?;
    let near_boundary = {
        let boundary = v_star(
            cs.senior_face(),
            cs.junior_face(),
            cs.maturity(),
            cs.rate(),
            cs.dividend_yield(),
        );
        (cs.asset_value() - boundary).abs() <= 1e-6 * cs.asset_value()
    };
    let (deviation, passed) = match (closed_max, numeric_max) {
        (Some(c), Some(n)) => ((c - n).abs(), (c - n).abs() < ARGMAX_TOLERANCE),
        (None, None) => (0.0, true),
        _ => (f64::NAN, near_boundary),
    };
    checks.push(Check {
        name: "sigma_max",
        closed_form: Cell::optional(closed_max),
        oracle: Cell::optional(numeric_max),
        deviation: Cell::number(deviation),
        tolerance: ARGMAX_TOLERANCE,
        unit: "absolute",
        passed,
    });

    // vega is checked at the initial volatility, where its sign decides
    // whether junior holders want more risk
    if scenario.initial_sigma > bump {
        let at_initial = cs.with_volatility(scenario.initial_sigma)?;
        let analytic = junior_debt_vega(&at_initial)?;
        let fd = finite_diff_vega(&at_initial, bump)?;
        let rel = if fd == analytic {
            0.0
        } else {
            ((fd - analytic) / analytic).abs()
        };
        checks.push(Check {
            name: "junior_vega_at_initial_sigma",
            closed_form: Cell::number(analytic),
            oracle: Cell::number(fd),
            deviation: Cell::number(rel),
            tolerance: VEGA_TOLERANCE,
            unit: "relative",
            passed: rel < VEGA_TOLERANCE,
        });
    }

    let mut table = Table::new([
        "check",
        "closed_form",
        "oracle",
        "deviation",
        "tolerance",
        "deviation_unit",
        "passed",
    ]);
    let total = checks.len();
    let mut failed = 0;
    for c in checks {
        if !c.passed {
            failed += 1;
        }
        table.push(vec![
            Cell::Text(c.name.into()),
            c.closed_form,
            c.oracle,
            c.deviation,
            Cell::number(c.tolerance),
            Cell::Text(c.unit.into()),
            Cell::Flag(c.passed),
        ]);
    }
    Ok(Verification {
        table,
        failed,
        total,
    })
}
