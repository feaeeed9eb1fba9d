//! Risk-neutral Monte-Carlo pricing of the capital-structure claims.
//!
//! Terminal asset values are drawn exactly in one step,
//! `V_T = V exp((r - q - sigma^2/2) tau + sigma sqrt(tau) Z)`, and each claim
//! is priced as the discounted mean of its absolute-priority payoff.
//!
//! With antithetic sampling, draw `i` feeds paths `2i` (`Z`) and `2i + 1`
//! (`-Z`), and the pair average is the sampling unit for the standard error.
//! Units are processed in fixed-size chunks whose partial statistics are
//! merged in chunk order, so results are bit-identical for any thread count.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::rng::CounterRng;
use crate::claims::{payoffs_at_maturity, CapitalStructure};
use crate::error::{ModelError, Result};

/// Sampling units per parallel work item.
const CHUNK_UNITS: u64 = 1 << 13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MCConfig {
    pub path_count: u64,
    pub seed: u64,
    pub antithetic: bool,
}

impl MCConfig {
    pub fn new(path_count: u64, seed: u64) -> Result<Self> {
        let config = Self {
            path_count,
            seed,
            antithetic: true,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if self.path_count < 2 {
            return Err(ModelError::InvalidMonteCarlo(
                "path_count must be at least 2",
            ));
        }
        if self.antithetic && !self.path_count.is_multiple_of(2) {
            return Err(ModelError::InvalidMonteCarlo(
                "path_count must be even with antithetic sampling",
            ));
        }
        Ok(())
    }

    fn units(&self) -> u64 {
        if self.antithetic {
            self.path_count / 2
        } else {
            self.path_count
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MCEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub path_count: u64,
}

impl MCEstimate {
    /// Distance of `value` from the mean in standard errors. Infinite when the
    /// estimate has zero spread and `value` differs from it.
    pub fn standard_errors_from(&self, value: f64) -> f64 {
        let gap = (value - self.mean).abs();
        if gap == 0.0 {
            0.0
        } else {
            gap / self.std_error
        }
    }

    /// [`standard_errors_from`](Self::standard_errors_from), except that a
    /// sample with zero spread is judged against the rule-of-three bound
    /// `3 * payoff_scale / path_count` on an event that no path reached,
    /// expressed so that 3 marks the bound.
    pub fn deviation_score(&self, value: f64, payoff_scale: f64) -> f64 {
        if self.std_error > 0.0 {
            self.standard_errors_from(value)
        } else {
            let bound = 3.0 * payoff_scale / self.path_count as f64;
            3.0 * (value - self.mean).abs() / bound
        }
    }
}

/// Discounted Monte-Carlo estimates of the three claims and of the asset itself.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClaimEstimates {
    pub senior: MCEstimate,
    pub junior: MCEstimate,
    pub equity: MCEstimate,
    /// `e^{-r tau} V_T`; its mean should approach `V e^{-q tau}`.
    pub discounted_terminal: MCEstimate,
}

struct TerminalSampler {
    log_drift: f64,
    diffusion: f64,
    asset_value: f64,
    rng: CounterRng,
    antithetic: bool,
}

impl TerminalSampler {
    fn new(cs: &CapitalStructure, mc: &MCConfig) -> Self {
        let sigma = cs.volatility();
        let tau = cs.maturity();
        Self {
            log_drift: (cs.rate() - cs.dividend_yield() - 0.5 * sigma * sigma) * tau,
            diffusion: sigma * tau.sqrt(),
            asset_value: cs.asset_value(),
            rng: CounterRng::new(mc.seed),
            antithetic: mc.antithetic,
        }
    }

    #[inline]
    fn terminal(&self, z: f64) -> f64 {
        self.asset_value * (self.log_drift + self.diffusion * z).exp()
    }

    /// Terminal values belonging to sampling unit `unit` (one or two paths).
    #[inline]
    fn unit(&self, unit: u64) -> (f64, Option<f64>) {
        let z = self.rng.standard_normal(unit);
        if self.antithetic {
            (self.terminal(z), Some(self.terminal(-z)))
        } else {
            (self.terminal(z), None)
        }
    }
}

/// Terminal asset values for every path, in path order.
pub fn simulate_terminal_values(cs: &CapitalStructure, mc: &MCConfig) -> Result<Vec<f64>> {
    mc.validate()?;
    let sampler = TerminalSampler::new(cs, mc);
    let mut out = Vec::with_capacity(mc.path_count as usize);
    for unit in 0..mc.units() {
        let (first, second) = sampler.unit(unit);
        out.push(first);
        out.extend(second);
    }
    Ok(out)
}

/// Running mean and sum of squared deviations (Welford), mergeable (Chan et al.).
#[derive(Debug, Clone, Copy, Default)]
struct Moments {
    count: u64,
    mean: f64,
    m2: f64,
}

impl Moments {
    #[inline]
    fn push(&mut self, x: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    fn merge(self, other: Moments) -> Moments {
        if self.count == 0 {
            return other;
        }
        if other.count == 0 {
            return self;
        }
        let count = self.count + other.count;
        let delta = other.mean - self.mean;
        let weight = other.count as f64 / count as f64;
        Moments {
            count,
            mean: self.mean + delta * weight,
            m2: self.m2 + other.m2 + delta * delta * self.count as f64 * weight,
        }
    }

    fn estimate(&self, discount: f64, path_count: u64) -> MCEstimate {
        let variance = if self.count > 1 {
            self.m2 / (self.count - 1) as f64
        } else {
            0.0
        };
        MCEstimate {
            mean: discount * self.mean,
            std_error: discount * (variance / self.count as f64).sqrt(),
            path_count,
        }
    }
}

/// senior, junior, equity, terminal
type UnitMoments = [Moments; 4];

fn merge_units(a: UnitMoments, b: UnitMoments) -> UnitMoments {
    [
        a[0].merge(b[0]),
        a[1].merge(b[1]),
        a[2].merge(b[2]),
        a[3].merge(b[3]),
    ]
}

pub fn mc_claim_values(cs: &CapitalStructure, mc: &MCConfig) -> Result<ClaimEstimates> {
    mc.validate()?;
    let sampler = TerminalSampler::new(cs, mc);
    let (fs, fj) = (cs.senior_face(), cs.junior_face());
    let units = mc.units();
    let chunks = units.div_ceil(CHUNK_UNITS);

    let per_chunk: Vec<UnitMoments> = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut acc = UnitMoments::default();
            let start = chunk * CHUNK_UNITS;
            let end = (start + CHUNK_UNITS).min(units);
            for unit in start..end {
                let (first, second) = sampler.unit(unit);
                let p = payoffs_at_maturity(first, fs, fj);
                let mut sample = [p.senior_payoff, p.junior_payoff, p.equity_payoff, first];
                if let Some(second) = second {
                    let q = payoffs_at_maturity(second, fs, fj);
                    let other = [q.senior_payoff, q.junior_payoff, q.equity_payoff, second];
                    for (s, o) in sample.iter_mut().zip(other) {
                        *s = 0.5 * (*s + o);
                    }
                }
                for (m, x) in acc.iter_mut().zip(sample) {
                    m.push(x);
                }
            }
            acc
        })
        .collect();

    let total = per_chunk
        .into_iter()
        .fold(UnitMoments::default(), merge_units);
    let discount = cs.discount_factor();
    let estimate = |m: &Moments| m.estimate(discount, mc.path_count);
    Ok(ClaimEstimates {
        senior: estimate(&total[0]),
        junior: estimate(&total[1]),
        equity: estimate(&total[2]),
        discounted_terminal: estimate(&total[3]),
    })
}
