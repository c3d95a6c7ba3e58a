//! The same candidate set minimized under different convex potentials. The
//! optimum moves only when no candidate is a majorization minimum.
//!
//! Run with `cargo run --release --example potentials`.

use frame_completion::{solve, NormSeq, Potential, ProblemInput, SolveOptions, Spectrum};

fn main() -> frame_completion::Result<()> {
    let potentials = [
        Potential::FramePotential,
        Potential::Mse,
        Potential::power(1.5)?,
        Potential::power(4.0)?,
        Potential::custom("exp", f64::exp, true)?,
        Potential::custom("x log x", |x: f64| if x > 0.0 { x * x.ln() } else { 0.0 }, true)?,
    ];
    let instances: [(&[f64], &[f64]); 3] = [
        (&[9.0, 5.0, 4.0, 2.0, 1.0], &[2.0, 0.25, 0.25, 0.25]),
        (
            &[7.0, 6.0, 5.5, 4.0, 2.5, 1.0, 0.5, 0.3],
            &[5.0, 4.5, 1.2, 1.0, 0.8, 0.5],
        ),
        (&[3.0, 1.0, 0.5], &[2.0, 1.5]),
    ];
    for (lambda, b) in instances {
        let lambda = Spectrum::decreasing(lambda.to_vec())?;
        let b = NormSeq::new(b)?;
        println!("λ = {:?}, b = {:?}", lambda.values(), b.values());
        for f in &potentials {
            let opts = SolveOptions {
                potential: f.clone(),
                ..SolveOptions::default()
            };
            let r = solve(&ProblemInput::Spectrum(lambda.clone()), &b, &opts)?;
            println!(
                "  {:<16} ν* = {:.4?}  F = {:.6}  majorization minimum: {}",
                f.to_string(),
                r.nu_star.values(),
                r.value,
                r.majorization_min.is_some()
            );
        }
    }
    Ok(())
}
