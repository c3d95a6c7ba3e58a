//! Lindskii's inequality `λ(S0 + S1) ≺ (λ↓(S0) + λ↑(S1))↓` and its equality
//! case, where `S1` commutes with `S0` and pairs large with small.
//!
//! Run with `cargo run --example lindskii_matching`.

use frame_completion::matching::{
    common_onb_pairing, is_optimal_matching, lindskii_check, rearrangement_product_check, weyl_check,
};
use frame_completion::{HermitianMatrix, C64};

fn show(name: &str, s0: &HermitianMatrix, s1: &HermitianMatrix) -> frame_completion::Result<()> {
    let l = lindskii_check(s0, s1)?;
    let w = weyl_check(s0, s1)?;
    let m = is_optimal_matching(s0, s1)?;
    println!("{name}:");
    println!("  λ(S0 + S1)         = {:.6?}", l.lhs);
    println!("  (λ↓ + μ↑)↓         = {:.6?}", l.rhs);
    println!("  Lindskii {}, Weyl {}", l.holds, w.holds);
    println!(
        "  equality {} (gap {:.2e}), commutator {:.2e}",
        m.is_equality, m.gap, m.commutator
    );
    Ok(())
}

fn main() -> frame_completion::Result<()> {
    let s0 = HermitianMatrix::from_real_diagonal(&[3.0, 2.0, 1.0]);
    let opposite = HermitianMatrix::from_real_diagonal(&[1.0, 2.0, 5.0]);
    let aligned = HermitianMatrix::from_real_diagonal(&[5.0, 2.0, 1.0]);
    let i = C64::new(0.0, 1.0);
    let one = C64::new(1.0, 0.0);
    let zero = C64::new(0.0, 0.0);
    let twisted = HermitianMatrix::from_rows(&[
        vec![one * 2.0, i, zero],
        vec![-i, one * 2.0, zero],
        vec![zero, zero, one],
    ])?;

    show("opposite order", &s0, &opposite)?;
    show("same order", &s0, &aligned)?;
    show("non-commuting", &s0, &twisted)?;

    // repeated eigenvalue of S0: the pairing rotates inside the eigenspace
    let s0 = HermitianMatrix::from_real_diagonal(&[2.0, 2.0, 0.0]);
    let s1 = HermitianMatrix::from_real_rows(&[vec![1.0, 1.0, 0.0], vec![1.0, 1.0, 0.0], vec![0.0, 0.0, 3.0]])?;
    show("degenerate S0", &s0, &s1)?;
    let basis = common_onb_pairing(&s0, &s1)?;
    for ((v, l), m) in basis.vectors.iter().zip(&basis.lambda).zip(&basis.mu) {
        let re: Vec<f64> = v.iter().map(|z| z.re).collect();
        println!("  λ = {l:.3}, μ = {m:.3}, v = {re:.4?}");
    }
    println!("  reconstruction error {:.2e}", basis.reconstruction_error(&s0, &s1)?);

    // opposite pairing maximizes Π (λ_i + μ_σ(i))
    let (lambda, mu) = ([3.0, 2.0, 1.0], [1.0, 2.0, 5.0]);
    for sigma in [[0, 1, 2], [2, 1, 0], [1, 0, 2]] {
        println!(
            "σ = {sigma:?}: identity pairing dominates: {}",
            rearrangement_product_check(&lambda, &mu, &sigma)?
        );
    }
    Ok(())
}
