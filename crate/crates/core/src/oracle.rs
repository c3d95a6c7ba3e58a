//! Stochastic search over `Γ_d(b)` used to cross-check the finite solver.
//!
//! The continuous problem minimizes `F(λ + μ)` over increasing `μ ∈ Γ_d(b)`
//! aligned with the decreasing `λ`. The search only ever tests membership,
//! so every accepted point is feasible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::completion::{gamma_membership, Potential};
use crate::error::{Error, Result};
use crate::spectrum::{NormSeq, Order, Spectrum};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OracleConfig {
    /// Total proposals, shared evenly by the starts.
    pub budget: u64,
    pub starts: usize,
    /// First transfer size as a fraction of `tr b`.
    pub initial_step: f64,
    /// Factor applied to the step after `patience` consecutive rejections.
    pub shrink: f64,
    pub patience: u32,
    /// Search for a start stops once the step falls below this fraction of `tr b`.
    pub min_step: f64,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            budget: 100_000,
            starts: 8,
            initial_step: 0.25,
            shrink: 0.5,
            patience: 40,
            min_step: 1e-13,
            seed: 0,
        }
    }
}

impl OracleConfig {
    fn validate(&self) -> Result<()> {
        let ok = self.budget >= 1
            && self.starts >= 1
            && self.initial_step > 0.0
            && self.shrink > 0.0
            && self.shrink < 1.0
            && self.patience >= 1
            && self.min_step >= 0.0;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!("invalid oracle configuration {self:?}")))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OracleResult {
    /// Increasing.
    pub mu: Spectrum,
    pub value: f64,
    /// Value after each accepted move of the winning start, starting with its
    /// initial value.
    pub history: Vec<f64>,
    pub proposals: u64,
}

/// `b` sorted increasingly and zero-padded to length `d`; when `k > d` the
/// smallest norms are merged into one entry, which only moves up in `≺`.
pub fn gamma_base(b: &NormSeq, d: usize) -> Result<Vec<f64>> {
    if d == 0 {
        return Err(Error::InvalidInput("dimension must be positive".into()));
    }
    let desc = b.values();
    let mut top: Vec<f64> = if desc.len() > d {
        let mut v = desc[..d - 1].to_vec();
        v.push(desc[d - 1..].iter().sum());
        v
    } else {
        desc.to_vec()
    };
    top.resize(d, 0.0);
    top.sort_by(|a, b| a.total_cmp(b));
    Ok(top)
}

/// Moves mass `δ ∈ (0, μ_i]` from a smaller entry `i` to a larger entry `j`.
fn transfer_up(mu: &mut [f64], rng: &mut impl Rng) {
    let d = mu.len();
    if d < 2 {
        return;
    }
    let i = rng.gen_range(0..d - 1);
    let j = rng.gen_range(i + 1..d);
    let full = rng.gen_bool(0.1);
    let delta = if full { mu[i] } else { mu[i] * rng.gen::<f64>() };
    mu[i] -= delta;
    mu[j] += delta;
    mu.sort_by(|a, b| a.total_cmp(b));
}

/// Applies `transfers` random upward transfers to [`gamma_base`].
pub fn sample_gamma_with(b: &NormSeq, d: usize, transfers: usize, rng: &mut impl Rng) -> Result<Spectrum> {
    let mut mu = gamma_base(b, d)?;
    for _ in 0..transfers {
        transfer_up(&mut mu, rng);
    }
    Spectrum::sorted(mu, Order::Increasing)
}

/// A member of `Γ_d(b)` drawn with a seeded generator.
pub fn sample_gamma(b: &NormSeq, d: usize, seed: u64) -> Result<Spectrum> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let transfers = rng.gen_range(0..=2 * d);
    sample_gamma_with(b, d, transfers, &mut rng)
}

fn objective(f: &Potential, lambda: &[f64], mu: &[f64]) -> f64 {
    f.evaluate(&lambda.iter().zip(mu).map(|(l, m)| l + m).collect::<Vec<_>>())
}

/// Multi-start pairwise-transfer descent over `Γ_d(b)`.
///
/// Each start draws a point with [`sample_gamma_with`], then proposes
/// transfers of size up to the current step between random coordinate
/// pairs, keeping a proposal when it stays in `Γ_d(b)` and lowers `F`.
/// Starts run independently; the lowest value wins, ties going to the
/// earlier start.
pub fn brute_force_min(lambda: &Spectrum, b: &NormSeq, f: &Potential, cfg: &OracleConfig) -> Result<OracleResult> {
    cfg.validate()?;
    if lambda.order() != Order::Decreasing {
        return Err(Error::InvalidInput("λ must be decreasing".into()));
    }
    let d = lambda.len();
    let per_start = (cfg.budget / cfg.starts as u64).max(1);
    let runs: Vec<Result<OracleResult>> = (0..cfg.starts)
        .into_par_iter()
        .map(|s| descend(lambda.values(), b, f, cfg, per_start, s as u64, d))
        .collect();
    let mut best: Option<OracleResult> = None;
    let mut proposals = 0;
    for run in runs {
        let run = run?;
        proposals += run.proposals;
        if best.as_ref().is_none_or(|b| run.value < b.value) {
            best = Some(run);
        }
    }
    let mut best = best.expect("at least one start");
    best.proposals = proposals;
    Ok(best)
}

fn descend(
    lambda: &[f64],
    b: &NormSeq,
    f: &Potential,
    cfg: &OracleConfig,
    budget: u64,
    start: u64,
    d: usize,
) -> Result<OracleResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(start);
    let transfers = if start == 0 { 0 } else { rng.gen_range(1..=2 * d) };
    let mut mu = sample_gamma_with(b, d, transfers, &mut rng)?.into_values();
    let mut value = objective(f, lambda, &mu);
    let mut history = vec![value];
    let trace = b.trace();
    let mut step = cfg.initial_step * trace;
    let floor = cfg.min_step * trace;
    let mut rejections = 0;
    let mut proposals = 0;
    let mut trial = mu.clone();
    while proposals < budget && step > floor && d > 1 {
        proposals += 1;
        let i = rng.gen_range(0..d);
        let mut j = rng.gen_range(0..d - 1);
        if j >= i {
            j += 1;
        }
        let delta = step * rng.gen::<f64>();
        trial.copy_from_slice(&mu);
        trial[i] += delta;
        trial[j] -= delta;
        let accepted = trial[j] >= 0.0
            && {
                trial.sort_by(|a, b| a.total_cmp(b));
                gamma_membership(&trial, b)
            }
            && {
                let v = objective(f, lambda, &trial);
                if v < value {
                    value = v;
                    true
                } else {
                    false
                }
            };
        if accepted {
            std::mem::swap(&mut mu, &mut trial);
            history.push(value);
            rejections = 0;
        } else {
            rejections += 1;
            if rejections >= cfg.patience {
                step *= cfg.shrink;
                rejections = 0;
            }
        }
    }
    Ok(OracleResult {
        mu: Spectrum::sorted(mu, Order::Increasing)?,
        value,
        history,
        proposals,
    })
}
