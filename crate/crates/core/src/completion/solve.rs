use super::enumerate::{
    enumerate_efin, CandidateBlock, CandidateMu, Caps, EnumerationMode, EnumerationProgress, EnumerationStats,
};
use super::feasibility::{check_rank, is_feasible, Waterfill};
use super::minimize::{majorization_minimizer, minimize_over_candidates, TableRow};
use super::potential::Potential;
use super::structure::{verify_minimizer_structure, StructureDiagnostics};
use crate::error::{Error, Result};
use crate::frame_design::complete_from_eigensystem;
use crate::linalg::{eig_hermitian, frame_operator, EigenSystem, VectorSequence};
use crate::spectrum::{scale_of, NormSeq, Order, Spectrum};

/// Initial data: either the vectors of `F0` or just the spectrum of `S_{F0}`.
#[derive(Clone, Debug)]
pub enum ProblemInput {
    Vectors(VectorSequence),
    Spectrum(Spectrum),
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub potential: Potential,
    pub mode: EnumerationMode,
    pub caps: Caps,
    /// Enumerate even when the water-filling spectrum is attainable.
    pub force_enumeration: bool,
    /// Equality tolerance for the level condition on `μ*`.
    pub tol: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            potential: Potential::FramePotential,
            mode: EnumerationMode::Full,
            caps: Caps::default(),
            force_enumeration: false,
            tol: 1e-9,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CompletionResult {
    /// Decreasing spectrum of `S_{F0}`.
    pub lambda: Spectrum,
    pub feasible: bool,
    pub waterfill: Waterfill,
    /// Increasing, aligned with `lambda`.
    pub mu_star: Spectrum,
    /// Decreasing.
    pub nu_star: Spectrum,
    pub value: f64,
    pub candidates: Vec<CandidateMu>,
    /// `None` on the feasible branch.
    pub stats: Option<EnumerationStats>,
    pub table: Vec<TableRow>,
    /// `ν*` when it is majorized by every candidate.
    pub majorization_min: Option<Spectrum>,
    /// `0 < μ_i = μ_{i+1}` implies `λ_i = λ_{i+1}`.
    pub equal_levels: bool,
    /// The completing vectors, in the caller's norm order.
    pub completion: Option<VectorSequence>,
    pub structure: Option<StructureDiagnostics>,
    /// Set when the caps stopped the enumeration; the answer is then the best
    /// among the candidates found so far.
    pub partial: Option<Box<EnumerationProgress>>,
}

impl CompletionResult {
    pub fn candidate_count(&self) -> usize {
        self.candidates.len()
    }
}

/// Solves the optimal completion problem for `(input, b)`.
pub fn solve(input: &ProblemInput, b: &NormSeq, opts: &SolveOptions) -> Result<CompletionResult> {
    let (lambda, eig) = match input {
        ProblemInput::Vectors(f0) => {
            let eig = eig_hermitian(&frame_operator(f0))?;
            let lambda = Spectrum::sorted(eig.values.clone(), Order::Decreasing)?;
            (lambda, Some(eig))
        }
        ProblemInput::Spectrum(s) => {
            if s.order() != Order::Decreasing {
                return Err(Error::InvalidInput("λ must be decreasing".into()));
            }
            (s.clone(), None)
        }
    };
    check_rank(&lambda, b.len())?;
    let feas = is_feasible(&lambda, b)?;

    let (candidates, stats, partial) = if feas.feasible && !opts.force_enumeration {
        (vec![waterfill_candidate(&lambda, b, &feas.waterfill)], None, None)
    } else {
        match enumerate_efin(&lambda, b, opts.mode, opts.caps) {
            Ok(e) => (e.candidates, Some(e.stats), None),
            Err(Error::CapsExceeded(progress)) if !progress.partial.candidates.is_empty() => {
                let cands = progress.partial.candidates.clone();
                let stats = progress.partial.stats.clone();
                (cands, Some(stats), Some(progress))
            }
            Err(e) => return Err(e),
        }
    };

    let min = minimize_over_candidates(&candidates, &lambda, &opts.potential)?;
    let majorization_min = majorization_minimizer(&candidates, &lambda);
    let equal_levels = equal_levels_condition(&lambda, &min.mu_star, opts.tol);

    let (completion, structure) = match (input, eig) {
        (ProblemInput::Vectors(f0), Some(eig)) => {
            let (g, diag) = build_completion(f0, &eig, &min.mu_star, b)?;
            (Some(g), Some(diag))
        }
        _ => (None, None),
    };

    Ok(CompletionResult {
        lambda,
        feasible: feas.feasible,
        waterfill: feas.waterfill,
        mu_star: min.mu_star,
        nu_star: min.nu_star,
        value: min.value,
        candidates,
        stats,
        table: min.table,
        majorization_min,
        equal_levels,
        completion,
        structure,
        partial,
    })
}

fn build_completion(
    f0: &VectorSequence,
    eig: &EigenSystem,
    mu: &Spectrum,
    b: &NormSeq,
) -> Result<(VectorSequence, StructureDiagnostics)> {
    let g = complete_from_eigensystem(eig, mu, b)?;
    let diag = verify_minimizer_structure(f0, &g)?;
    Ok((g, diag))
}

/// The water-filling spectrum as a one-block candidate: the raised tail
/// absorbs every norm.
fn waterfill_candidate(lambda: &Spectrum, b: &NormSeq, w: &Waterfill) -> CandidateMu {
    let d = lambda.len();
    let r = d - w.raised;
    CandidateMu {
        mu: w.rho.clone(),
        r,
        blocks: vec![CandidateBlock {
            lambda_indices: (r..d).collect(),
            norm_indices: (0..b.len()).collect(),
            level: w.level,
        }],
        strict: false,
    }
}

/// Checks `0 < μ_i = μ_{i+1} ⟹ λ_i = λ_{i+1}` with equalities judged
/// within `tol · max(1, max λ, max μ)`.
pub fn equal_levels_condition(lambda: &Spectrum, mu: &Spectrum, tol: f64) -> bool {
    let (l, m) = (lambda.values(), mu.values());
    let eps = tol * scale_of(l).max(scale_of(m));
    (0..l.len().saturating_sub(1)).all(|i| {
        let tied = m[i] > eps && (m[i] - m[i + 1]).abs() <= eps;
        !tied || (l[i] - l[i + 1]).abs() <= eps
    })
}
