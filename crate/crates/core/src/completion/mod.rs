//! Optimal completion of a frame by vectors with prescribed norms.

mod enumerate;
mod feasibility;
mod minimize;
mod potential;
mod solve;
mod structure;

pub use enumerate::{
    enumerate_efin, resume_efin, CandidateBlock, CandidateMu, Caps, Enumeration, EnumerationMode, EnumerationProgress,
    EnumerationStats, WorkItem,
};
pub use feasibility::{check_rank, gamma_membership, is_feasible, waterfill_nu, Feasibility, Waterfill, RANK_TOL};
pub use minimize::{
    majorization_minimizer, majorization_minimum, minimize_over_candidates, Minimum, TableRow, TIE_TOL,
};
pub use potential::{CustomPotential, Potential};
pub use solve::{equal_levels_condition, solve, CompletionResult, ProblemInput, SolveOptions};
pub use structure::{
    irreducible_partition, verify_minimizer_structure, BlockDiagnostic, StructureDiagnostics, ORTHO_TOL, STRUCTURE_TOL,
};
