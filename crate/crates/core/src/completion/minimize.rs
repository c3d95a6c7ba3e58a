use serde::Serialize;

use super::enumerate::CandidateMu;
use super::potential::Potential;
use crate::error::{Error, Result};
use crate::majorization::majorized;
use crate::spectrum::{scale_of, Spectrum};

/// Relative gap under which two potential values count as tied.
pub const TIE_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRow {
    /// Decreasing.
    pub nu: Vec<f64>,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Minimum {
    /// Position of the winner in the candidate list.
    pub index: usize,
    pub mu_star: Spectrum,
    pub nu_star: Spectrum,
    pub value: f64,
    /// One row per candidate, in candidate order.
    pub table: Vec<TableRow>,
}

/// Picks the candidate minimizing `F(λ + γ)`.
///
/// Candidates whose values tie within [`TIE_TOL`] are only a problem when
/// their completed spectra differ; distinct μ with the same `(λ+μ)↓` (which
/// repeated λ entries allow) describe the same optimum.
pub fn minimize_over_candidates(candidates: &[CandidateMu], lambda: &Spectrum, f: &Potential) -> Result<Minimum> {
    if candidates.is_empty() {
        return Err(Error::EmptyCandidates);
    }
    let table: Vec<TableRow> = candidates
        .iter()
        .map(|c| {
            let nu = c.nu(lambda).into_values();
            let value = f.evaluate(&nu);
            TableRow { nu, value }
        })
        .collect();
    let index = (0..table.len())
        .min_by(|&i, &j| table[i].value.total_cmp(&table[j].value))
        .expect("nonempty");
    let best = &table[index];
    if !best.value.is_finite() {
        return Err(Error::NoFiniteCandidate);
    }
    let tie = TIE_TOL * (1.0 + best.value.abs());
    let spectral_tol = TIE_TOL * scale_of(&best.nu);
    for (j, row) in table.iter().enumerate() {
        if j == index || (row.value - best.value).abs() > tie {
            continue;
        }
        let same = row.nu.iter().zip(&best.nu).all(|(a, b)| (a - b).abs() <= spectral_tol);
        if !same {
            return Err(Error::AmbiguousMinimum {
                first: index,
                second: j,
                value: best.value,
            });
        }
    }
    Ok(Minimum {
        index,
        mu_star: candidates[index].mu.clone(),
        nu_star: candidates[index].nu(lambda),
        value: best.value,
        table,
    })
}

/// Index of a vector majorized by every other one, if any.
///
/// The only possible such vector is one of least Euclidean norm, since
/// `x ≺ y` implies `Σx² ≤ Σy²`.
pub fn majorization_minimum(vectors: &[Vec<f64>]) -> Option<usize> {
    let energy = |v: &Vec<f64>| v.iter().map(|x| x * x).sum::<f64>();
    let index = (0..vectors.len()).min_by(|&i, &j| energy(&vectors[i]).total_cmp(&energy(&vectors[j])))?;
    vectors
        .iter()
        .all(|v| majorized(&vectors[index], v, false).unwrap_or(false))
        .then_some(index)
}

/// `(λ + μ*)↓` when it is majorized by `λ + γ` for every candidate γ.
pub fn majorization_minimizer(candidates: &[CandidateMu], lambda: &Spectrum) -> Option<Spectrum> {
    let nus: Vec<Vec<f64>> = candidates.iter().map(|c| c.nu_aligned(lambda)).collect();
    majorization_minimum(&nus).map(|i| candidates[i].nu(lambda))
}
