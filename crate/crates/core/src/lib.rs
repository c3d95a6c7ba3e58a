//! Optimal frame completions with prescribed norms.
//!
//! Given an initial family `F0` in `C^d` (or just the spectrum `λ` of its
//! frame operator) and squared norms `b`, the solver finds completing vectors
//! with those norms that minimize a convex potential `tr f(S_F)` of the
//! completed frame operator.
//!
//! ```
//! use frame_completion::{solve, NormSeq, ProblemInput, SolveOptions, Spectrum};
//!
//! let lambda = Spectrum::decreasing(vec![9.0, 5.0, 4.0, 2.0, 1.0])?;
//! let b = NormSeq::new(&[3.5, 2.0])?;
//! let result = solve(&ProblemInput::Spectrum(lambda), &b, &SolveOptions::default())?;
//! assert_eq!(result.nu_star.values(), &[9.0, 5.0, 4.5, 4.0, 4.0]);
//! # Ok::<(), frame_completion::Error>(())
//! ```

pub mod cli;
pub mod completion;
pub mod error;
pub mod frame_design;
pub mod linalg;
pub mod majorization;
pub mod matching;
pub mod oracle;
pub mod spectrum;

pub use completion::{
    enumerate_efin, gamma_membership, is_feasible, majorization_minimizer, minimize_over_candidates, solve,
    waterfill_nu, CandidateMu, Caps, CompletionResult, EnumerationMode, Potential, ProblemInput, SolveOptions,
};
pub use error::{Error, Result};
pub use frame_design::{complete_frame, design_vectors, schur_horn_matrix};
pub use linalg::{eig_hermitian, frame_operator, EigenSystem, HermitianMatrix, VectorSequence, C64};
pub use majorization::{majorized, prec_compare, submajorized, MajorizationOrder};
pub use spectrum::{NormSeq, Order, Spectrum};
