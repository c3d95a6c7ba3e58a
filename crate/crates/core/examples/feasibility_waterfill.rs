//! Water-filling and the feasibility test: when `b` is majorized by the
//! water-filling increment, one completion is optimal for every potential.
//!
//! Run with `cargo run --example feasibility_waterfill`.

use frame_completion::majorization::first_violation;
use frame_completion::{is_feasible, waterfill_nu, NormSeq, Spectrum};

fn report(lambda: &[f64], b: &[f64]) -> frame_completion::Result<()> {
    let lambda = Spectrum::decreasing(lambda.to_vec())?;
    let b = NormSeq::new(b)?;
    let f = is_feasible(&lambda, &b)?;
    println!("λ = {:?}, b = {:?}", lambda.values(), b.values());
    println!("  ν(λ) = {:?}", f.waterfill.nu.values());
    println!(
        "  μ    = {:?} ({} raised to {})",
        f.waterfill.rho.values(),
        f.waterfill.raised,
        f.waterfill.level
    );
    match first_violation(b.values(), f.waterfill.rho.values(), true)? {
        None => println!("  feasible: the water-filling spectrum is attainable"),
        Some(i) => println!("  infeasible: prefix {} of b exceeds that of μ", i + 1),
    }
    Ok(())
}

fn main() -> frame_completion::Result<()> {
    // rank bound alone: two norms may raise at most two eigenvalues
    let w = waterfill_nu(&Spectrum::decreasing(vec![9.0, 5.0, 4.0, 2.0, 1.0])?, 5.5, 2)?;
    println!("waterfill_nu(k = 2) = {:?}\n", w.nu.values());

    report(&[9.0, 5.0, 4.0, 2.0, 1.0], &[3.5, 2.0])?;
    report(&[9.0, 5.0, 4.0, 2.0, 1.0], &[2.5, 2.0, 1.0])?;
    report(&[1.0, 1.0], &[1.0, 1.0])?;
    report(&[1.0, 1.0], &[10.0, 0.1])?;
    Ok(())
}
