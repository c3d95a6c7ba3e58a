use serde::Serialize;

use crate::error::{Error, Result};
use crate::majorization::{majorized, TOL};
use crate::spectrum::{NormSeq, Order, Spectrum};

/// Rank tolerance applied to `λ(S_{F0})`, relative to `max(1, λ_1)`.
pub const RANK_TOL: f64 = 1e-10;

/// Water-filling spectrum for completions that add trace `trace_b` with rank
/// at most `k`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Waterfill {
    /// Completed spectrum, decreasing.
    pub nu: Spectrum,
    /// Added spectrum aligned with `λ`, increasing.
    pub rho: Spectrum,
    /// Number of raised tail entries.
    pub raised: usize,
    pub level: f64,
}

/// Raises the `s` smallest eigenvalues to a common level for each admissible
/// `s ≤ k` and keeps the flattest result.
///
/// For each `s` the level is `c(s) = (Σ_{i>d-s} λ_i + trace_b) / s`; the
/// candidate is admissible when `c(s) ≥ λ_{d-s+1}`. Among admissible
/// candidates the one with least `Σ ν_i²` is the majorization minimum, since
/// a minimum exists and the sum of squares is strictly Schur-convex.
pub fn waterfill_nu(lambda: &Spectrum, trace_b: f64, k: usize) -> Result<Waterfill> {
    let d = lambda.len();
    if lambda.order() != Order::Decreasing {
        return Err(Error::InvalidInput("λ must be decreasing".into()));
    }
    if !(trace_b >= 0.0 && trace_b.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "added trace must be nonnegative, got {trace_b}"
        )));
    }
    if k == 0 || k > d {
        return Err(Error::InvalidInput(format!("rank bound k={k} must lie in 1..={d}")));
    }
    let lam = lambda.values();

    let mut best: Option<(f64, Vec<f64>, usize, f64)> = None;
    let mut tail_sum = 0.0;
    for s in 1..=k {
        tail_sum += lam[d - s];
        let level = (tail_sum + trace_b) / s as f64;
        if level < lam[d - s] {
            continue;
        }
        let mut nu: Vec<f64> = lam[..d - s].to_vec();
        nu.extend(std::iter::repeat_n(level, s));
        let energy: f64 = nu.iter().map(|x| x * x).sum();
        if best.as_ref().is_none_or(|(e, ..)| energy < *e) {
            best = Some((energy, nu, s, level));
        }
    }
    let (_, nu, raised, level) = best.expect("one raised entry is always admissible");
    let rho: Vec<f64> = (0..d)
        .map(|i| {
            if i >= d - raised {
                (level - lam[i]).max(0.0)
            } else {
                0.0
            }
        })
        .collect();
    Ok(Waterfill {
        nu: Spectrum::sorted(nu, Order::Decreasing)?,
        rho: Spectrum::increasing(rho)?,
        raised,
        level,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Feasibility {
    pub feasible: bool,
    pub waterfill: Waterfill,
}

/// Checks whether `b ≺ ν(λ, d-k) - λ`, in which case the water-filling
/// completion is optimal for every convex potential.
pub fn is_feasible(lambda: &Spectrum, b: &NormSeq) -> Result<Feasibility> {
    check_rank(lambda, b.len())?;
    let k = b.len().min(lambda.len());
    let waterfill = waterfill_nu(lambda, b.trace(), k)?;
    let feasible = majorized(b.values(), waterfill.rho.values(), true)?;
    Ok(Feasibility { feasible, waterfill })
}

/// `d - rank(λ) ≤ k`, otherwise no completion spans `C^d`.
pub fn check_rank(lambda: &Spectrum, k: usize) -> Result<()> {
    let d = lambda.len();
    let deficit = d - lambda.rank(RANK_TOL);
    if deficit > k {
        return Err(Error::RankDeficient {
            dim: d,
            deficit,
            available: k,
        });
    }
    Ok(())
}

/// Membership in `Γ_d(b)`: nonnegative, increasing and majorizing `b`.
pub fn gamma_membership(mu: &[f64], b: &NormSeq) -> bool {
    let scale = mu.iter().fold(1.0_f64, |m, v| m.max(v.abs()));
    let tol = TOL * scale;
    mu.iter().all(|&v| v >= -tol && v.is_finite())
        && mu.windows(2).all(|w| w[0] <= w[1] + tol)
        && majorized(b.values(), mu, true).unwrap_or(false)
}
