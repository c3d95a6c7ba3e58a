use thiserror::Error;

use crate::completion::EnumerationProgress;

/// Errors produced by the solver and its supporting kernels.
#[derive(Debug, Error)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("trace mismatch: {left} vs {right}")]
    TraceMismatch { left: f64, right: f64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("not a frame: smallest eigenvalue {min_eigenvalue:e} of the frame operator is numerically zero")]
    NotAFrame { min_eigenvalue: f64 },

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_diagonal:e})")]
    NoConvergence { sweeps: usize, off_diagonal: f64 },

    #[error("infeasible design: {0}")]
    InfeasibleDesign(String),

    /// `d - rank(S0) > k`: the completion can never span the space.
    #[error("completion cannot span C^{dim}: rank deficit {deficit} exceeds the {available} prescribed norms")]
    RankDeficient {
        dim: usize,
        deficit: usize,
        available: usize,
    },

    #[error(
        "enumeration cap of {} partition pairs exceeded after {} pairs; resume with a larger cap or use consecutive mode",
        .0.cap,
        .0.pairs_explored
    )]
    CapsExceeded(Box<EnumerationProgress>),

    #[error("empty candidate set")]
    EmptyCandidates,

    #[error("ambiguous minimum: candidates {first} and {second} both reach {value}")]
    AmbiguousMinimum { first: usize, second: usize, value: f64 },

    #[error("no frame completion under this potential: every candidate evaluates to +inf")]
    NoFiniteCandidate,

    #[error("not an optimal matching pair (eigenvalue gap {gap:e})")]
    NotOptimalMatching { gap: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
