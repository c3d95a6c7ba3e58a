//! End-to-end completion of a given frame: seven vectors in `R^5` receive
//! two new vectors with squared norms 3.5 and 2, minimizing the frame
//! potential. Prints the new synthesis matrix and the structure checks.
//!
//! Run with `cargo run --example optimal_completion`.

use frame_completion::completion::equal_levels_condition;
use frame_completion::{frame_operator, solve, NormSeq, ProblemInput, SolveOptions, VectorSequence, C64};

const F0: [[f64; 7]; 5] = [
    [0.9202, -0.7476, -0.4674, 0.9164, 0.1621, 0.3172, -0.5815],
    [0.4556, 0.0164, 0.0636, 1.0372, -1.6172, 0.3688, 0.2559],
    [-0.0885, -0.3495, -0.9103, 0.3672, -0.6706, -0.9252, 0.6281],
    [0.1380, -0.4672, -0.6228, -0.1660, 0.9419, 1.0760, 1.1687],
    [0.7082, 0.2412, -0.1579, -1.8922, -0.4026, 0.1040, 1.6648],
];

fn main() -> frame_completion::Result<()> {
    let rows: Vec<Vec<C64>> = F0
        .iter()
        .map(|r| r.iter().map(|&x| C64::new(x, 0.0)).collect())
        .collect();
    let f0 = VectorSequence::from_synthesis_columns(&rows)?;
    let b = NormSeq::new(&[3.5, 2.0])?;
    let r = solve(&ProblemInput::Vectors(f0.clone()), &b, &SolveOptions::default())?;

    println!("λ(S_F0) = {:.6?}", r.lambda.values());
    println!("feasible: {}", r.feasible);
    for row in &r.table {
        println!("  candidate ν = {:.4?}  F = {:.4}", row.nu, row.value);
    }
    println!("ν* = {:.4?}, μ* = {:.4?}", r.nu_star.values(), r.mu_star.values());
    println!(
        "equal levels on μ*: {}",
        equal_levels_condition(&r.lambda, &r.mu_star, 1e-9)
    );

    let g = r.completion.as_ref().expect("vector input yields a completion");
    println!("completion (vectors as columns), norms² {:.12?}:", g.squared_norms());
    for row in g.synthesis_columns() {
        let cells: Vec<String> = row.iter().map(|z| format!("{:8.4}", z.re)).collect();
        println!("  [{}]", cells.join(" "));
    }
    let s = frame_operator(&f0.concat(g)?);
    println!("tr S_F = {:.6} (= tr S_F0 + 5.5)", s.trace());

    let st = r.structure.as_ref().expect("structure diagnostics");
    for block in &st.blocks {
        println!(
            "  block {:?}: level {:.4}, ‖[S_F0, S_block]‖ = {:.2e}, residual {:.2e}",
            block.indices, block.level, block.commutator, block.residual
        );
    }
    println!("structure consistent: {}", st.consistent);
    Ok(())
}
