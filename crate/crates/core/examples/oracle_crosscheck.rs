//! Cross-checks the finite solver with stochastic descent over the whole
//! continuous feasible set, for three potentials.
//!
//! Run with `cargo run --release --example oracle_crosscheck`.

use frame_completion::oracle::{brute_force_min, OracleConfig};
use frame_completion::{solve, NormSeq, Potential, ProblemInput, SolveOptions, Spectrum};

fn main() -> frame_completion::Result<()> {
    let instances: [(&[f64], &[f64]); 3] = [
        (&[9.0, 5.0, 4.0, 2.0, 1.0], &[3.5, 2.0]),
        (&[9.0, 5.0, 4.0, 2.0, 1.0], &[2.0, 0.25, 0.25, 0.25]),
        (
            &[5.75, 5.4, 4.25, 4.25, 3.0, 2.0],
            &[5.35, 4.66, 3.2, 2.5, 1.2, 1.0, 0.65],
        ),
    ];
    let cfg = OracleConfig {
        seed: 11,
        ..OracleConfig::default()
    };
    println!(
        "{:<10} {:>14} {:>14} {:>12}",
        "potential", "solver", "oracle", "rel. gap"
    );
    for (lambda, b) in instances {
        let lambda = Spectrum::decreasing(lambda.to_vec())?;
        let b = NormSeq::new(b)?;
        println!("λ = {:?}, b = {:?}", lambda.values(), b.values());
        for f in [Potential::FramePotential, Potential::Mse, Potential::power(3.0)?] {
            let opts = SolveOptions {
                potential: f.clone(),
                ..SolveOptions::default()
            };
            let r = solve(&ProblemInput::Spectrum(lambda.clone()), &b, &opts)?;
            let o = brute_force_min(&lambda, &b, &f, &cfg)?;
            println!(
                "{:<10} {:>14.6} {:>14.6} {:>12.2e}",
                f.to_string(),
                r.value,
                o.value,
                (o.value - r.value) / r.value
            );
        }
    }
    Ok(())
}
