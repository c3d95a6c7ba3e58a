//! Enumerates the finite candidate set on four reference instances, in both
//! modes, and reports the three candidate counts alongside the optimum.
//!
//! Run with `cargo run --release --example candidate_enumeration`.

use std::time::Instant;

use frame_completion::completion::{enumerate_efin, majorization_minimizer, minimize_over_candidates};
use frame_completion::{Caps, EnumerationMode, NormSeq, Potential, Spectrum};

fn main() -> frame_completion::Result<()> {
    let instances: [(&str, &[f64], &[f64]); 4] = [
        ("two norms", &[9.0, 5.0, 4.0, 2.0, 1.0], &[3.5, 2.0]),
        ("four norms", &[9.0, 5.0, 4.0, 2.0, 1.0], &[2.0, 0.25, 0.25, 0.25]),
        (
            "seven norms",
            &[5.75, 5.4, 4.25, 4.25, 3.0, 2.0],
            &[5.35, 4.66, 3.2, 2.5, 1.2, 1.0, 0.65],
        ),
        (
            "eight eigenvalues",
            &[7.0, 6.0, 5.5, 4.0, 2.5, 1.0, 0.5, 0.3],
            &[5.0, 4.5, 1.2, 1.0, 0.8, 0.5],
        ),
    ];
    for (name, lambda, b) in instances {
        let lambda = Spectrum::decreasing(lambda.to_vec())?;
        let b = NormSeq::new(b)?;
        println!("{name}: λ = {:?}, b = {:?}", lambda.values(), b.values());
        for mode in [EnumerationMode::Full, EnumerationMode::Consecutive] {
            let t = Instant::now();
            let e = enumerate_efin(&lambda, &b, mode, Caps::default())?;
            let elapsed = t.elapsed();
            let min = minimize_over_candidates(&e.candidates, &lambda, &Potential::FramePotential)?;
            let maj = majorization_minimizer(&e.candidates, &lambda);
            println!(
                "  {mode:?}: {} distinct, {} provenances ({} strict), {} pairs in {:.3?}",
                e.stats.distinct, e.stats.provenances, e.stats.strict_provenances, e.stats.pairs_explored, elapsed
            );
            println!(
                "    ν* = {:.6?}, F = {:.6}, majorization minimum: {}",
                min.nu_star.values(),
                min.value,
                if maj.is_some() { "yes" } else { "no" }
            );
        }
    }
    Ok(())
}
