//! Vectors with prescribed norms and prescribed frame operator, through a
//! real symmetric matrix with prescribed diagonal and spectrum.
//!
//! Run with `cargo run --example schur_horn_design`.

use frame_completion::linalg::{canonical_dual, frame_bounds};
use frame_completion::{design_vectors, eig_hermitian, frame_operator, schur_horn_matrix, HermitianMatrix, NormSeq};

fn main() -> frame_completion::Result<()> {
    // a symmetric matrix with spectrum (4, 2, 1, 0) and constant diagonal
    let m = schur_horn_matrix(&[4.0, 2.0, 1.0, 0.0], &[1.75; 4])?;
    println!("Schur-Horn matrix diagonal {:.12?}", m.diagonal());
    println!("  spectrum {:.12?}", eig_hermitian(&m)?.values);

    // five unit vectors in C^3 whose frame operator is diag(2, 2, 1)
    let target = HermitianMatrix::from_real_diagonal(&[2.0, 2.0, 1.0]);
    let norms = NormSeq::new(&[1.0; 5])?;
    let v = design_vectors(&target, &norms)?;
    println!("designed vectors, norms² {:.12?}", v.squared_norms());
    for (i, f) in v.vectors().iter().enumerate() {
        let re: Vec<f64> = f.iter().map(|z| z.re).collect();
        println!("  f{} = {:.4?}", i + 1, re);
    }
    let s = frame_operator(&v);
    println!("‖S_V - target‖_F = {:.2e}", s.sub(&target)?.frobenius_norm());
    let (lo, hi) = frame_bounds(&v)?;
    println!("frame bounds ({lo:.6}, {hi:.6})");
    let dual = canonical_dual(&v)?;
    println!("canonical dual norms² {:.6?}", dual.squared_norms());

    // a tight frame: four unit vectors in R^2
    let tight = design_vectors(
        &HermitianMatrix::from_real_diagonal(&[2.0, 2.0]),
        &NormSeq::new(&[1.0; 4])?,
    )?;
    println!("tight frame bounds {:.6?}", frame_bounds(&tight)?);

    // the diagonal must be majorized by the spectrum
    match schur_horn_matrix(&[1.0, 1.0], &[2.0, 0.0]) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
