//! Eigenvalue inequalities for sums of Hermitian matrices and the equality
//! case of Lindskii's inequality.
//!
//! `S1` is an optimal matching for `S0` when
//! `λ(S0 + S1) = (λ↓(S0) + λ↑(S1))↓`. Such pairs commute and share an
//! orthonormal eigenbasis pairing the largest eigenvalues of `S0` with the
//! smallest of `S1`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{commutator_norm, distance, eig_hermitian, inner, HermitianMatrix, C64};
use crate::majorization::{prefix_slacks, sort_desc};

/// Tolerance for the inequalities, relative to `max(1, ‖A‖ + ‖B‖)`.
pub const INEQUALITY_TOL: f64 = 1e-9;
/// Equality detection, relative to `‖S0‖ + ‖S1‖`.
pub const EQUALITY_TOL: f64 = 1e-8;
/// Commutator and eigenvector residual bound, relative to `‖S0‖ + ‖S1‖`.
pub const CERTIFICATE_TOL: f64 = 1e-7;

fn scale(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<f64> {
    Ok(a.spectral_norm()? + b.spectral_norm()?)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LindskiiCheck {
    /// `(λ↓(A) + λ↑(B))↓`.
    pub lhs: Vec<f64>,
    /// `λ↓(A + B)`.
    pub rhs: Vec<f64>,
    pub holds: bool,
}

/// Evaluates `λ(A) + λ↑(B) ≺ λ(A + B)`.
pub fn lindskii_check(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<LindskiiCheck> {
    let la = eig_hermitian(a)?.values;
    let mut lb = eig_hermitian(b)?.values;
    lb.reverse();
    let rhs = eig_hermitian(&a.add(b)?)?.values;
    let lhs = sort_desc(&la.iter().zip(&lb).map(|(x, y)| x + y).collect::<Vec<_>>());
    let tol = INEQUALITY_TOL * scale(a, b)?.max(1.0);
    let slacks = prefix_slacks(&lhs, &rhs)?;
    let holds = slacks.iter().all(|&s| s >= -tol) && slacks.last().is_none_or(|s| s.abs() <= tol);
    Ok(LindskiiCheck { lhs, rhs, holds })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WeylCheck {
    pub holds: bool,
    /// Largest amount by which any instance fails (0 when all hold).
    pub max_violation: f64,
    /// `λ_j(A + B) ≥ λ_j(A)` for all `j`; only evaluated when `B ≥ 0`.
    pub monotone: Option<bool>,
}

/// Checks every instance of the Weyl inequalities (1-based, decreasing):
/// `λ_j(A+B) ≤ λ_i(A) + λ_{j-i+1}(B)` for `i ≤ j` and
/// `λ_j(A+B) ≥ λ_i(A) + λ_{j-i+d}(B)` for `i ≥ j`.
pub fn weyl_check(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<WeylCheck> {
    let la = eig_hermitian(a)?.values;
    let lb = eig_hermitian(b)?.values;
    let ls = eig_hermitian(&a.add(b)?)?.values;
    let d = la.len();
    let tol = INEQUALITY_TOL * scale(a, b)?.max(1.0);
    let mut worst = 0.0_f64;
    for j in 0..d {
        for i in 0..=j {
            worst = worst.max(ls[j] - (la[i] + lb[j - i]));
        }
        for i in j..d {
            worst = worst.max(la[i] + lb[j + d - 1 - i] - ls[j]);
        }
    }
    let monotone = (lb.last().copied().unwrap_or(0.0) >= -tol).then(|| la.iter().zip(&ls).all(|(x, s)| *s >= x - tol));
    Ok(WeylCheck {
        holds: worst <= tol && monotone != Some(false),
        max_violation: worst,
        monotone,
    })
}

/// An orthonormal basis diagonalizing both matrices, `λ` decreasing and `μ`
/// increasing.
#[derive(Clone, Debug, PartialEq)]
pub struct CommonBasis {
    pub vectors: Vec<Vec<C64>>,
    pub lambda: Vec<f64>,
    pub mu: Vec<f64>,
}

impl CommonBasis {
    /// `‖S0 - Σ λ_i v_i v_i*‖_F + ‖S1 - Σ μ_i v_i v_i*‖_F`.
    pub fn reconstruction_error(&self, s0: &HermitianMatrix, s1: &HermitianMatrix) -> Result<f64> {
        let r0 = s0.sub(&HermitianMatrix::from_spectral(&self.lambda, &self.vectors))?;
        let r1 = s1.sub(&HermitianMatrix::from_spectral(&self.mu, &self.vectors))?;
        Ok(r0.frobenius_norm() + r1.frobenius_norm())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MatchingReport {
    pub is_equality: bool,
    /// `(λ↓(S0) + λ↑(S1))↓`.
    pub lhs: Vec<f64>,
    /// `λ↓(S0 + S1)`.
    pub rhs: Vec<f64>,
    /// `max |lhs - rhs|`.
    pub gap: f64,
    /// `‖S0 S1 - S1 S0‖`.
    pub commutator: f64,
    /// False when an equality was detected but the commutator is not small,
    /// i.e. the two tests disagree.
    pub certificate_consistent: bool,
    pub pairing: Option<CommonBasis>,
}

/// Decides whether `S1` is an optimal matching for `S0`.
///
/// Every spectrum involved translates uniformly under `S ↦ S + tI`, so
/// Hermitian inputs that are not positive are handled as they are.
pub fn is_optimal_matching(s0: &HermitianMatrix, s1: &HermitianMatrix) -> Result<MatchingReport> {
    let l0 = eig_hermitian(s0)?.values;
    let mut l1 = eig_hermitian(s1)?.values;
    l1.reverse();
    let rhs = eig_hermitian(&s0.add(s1)?)?.values;
    let lhs = sort_desc(&l0.iter().zip(&l1).map(|(x, y)| x + y).collect::<Vec<_>>());
    let gap = lhs.iter().zip(&rhs).fold(0.0_f64, |m, (x, y)| m.max((x - y).abs()));
    let sc = scale(s0, s1)?;
    let is_equality = gap <= EQUALITY_TOL * sc;
    let commutator = commutator_norm(s0, s1)?;
    let commutes = commutator <= CERTIFICATE_TOL * sc;
    let pairing = if is_equality {
        common_onb_pairing(s0, s1).ok()
    } else {
        None
    };
    Ok(MatchingReport {
        is_equality,
        lhs,
        rhs,
        gap,
        commutator,
        certificate_consistent: !is_equality || commutes,
        pairing,
    })
}

/// Builds the paired eigenbasis of an optimal matching: eigenvectors of `S0`,
/// rotated inside each eigenspace of `S0` to diagonalize the compression of
/// `S1`, then ordered inside each eigenspace so that `μ` increases.
pub fn common_onb_pairing(s0: &HermitianMatrix, s1: &HermitianMatrix) -> Result<CommonBasis> {
    let e0 = eig_hermitian(s0)?;
    let n = s0.dim();
    let sc = scale(s0, s1)?;
    let mut vectors = Vec::with_capacity(n);
    let mut lambda = Vec::with_capacity(n);
    let mut mu = Vec::with_capacity(n);
    for cluster in &e0.clusters {
        let basis = &e0.vectors[cluster.clone()];
        let images: Vec<Vec<C64>> = basis.iter().map(|v| s1.apply(v)).collect();
        let rows: Vec<Vec<C64>> = basis
            .iter()
            .map(|va| images.iter().map(|sv| inner(sv, va)).collect())
            .collect();
        let compression = HermitianMatrix::from_rows(&rows)?;
        let ec = eig_hermitian(&compression)?;
        // ascending μ within the eigenspace
        for m in (0..ec.values.len()).rev() {
            let coeffs = &ec.vectors[m];
            let w: Vec<C64> = (0..n)
                .map(|t| basis.iter().zip(coeffs).map(|(v, c)| v[t] * c).sum())
                .collect();
            vectors.push(w);
            lambda.push(e0.values[cluster.start + (ec.values.len() - 1 - m)]);
            mu.push(ec.values[m]);
        }
    }
    let tol = CERTIFICATE_TOL * sc.max(f64::MIN_POSITIVE);
    let mut worst = mu.windows(2).fold(0.0_f64, |m, w| m.max(w[0] - w[1]));
    for ((v, &l), &m) in vectors.iter().zip(&lambda).zip(&mu) {
        let lv: Vec<C64> = v.iter().map(|z| z * l).collect();
        let mv: Vec<C64> = v.iter().map(|z| z * m).collect();
        worst = worst.max(distance(&s0.apply(v), &lv)).max(distance(&s1.apply(v), &mv));
    }
    if worst > tol {
        return Err(Error::NotOptimalMatching { gap: worst });
    }
    Ok(CommonBasis { vectors, lambda, mu })
}

/// `Π (λ_i + μ_i) ≥ Π (λ_i + μ_{σ(i)})` for decreasing `λ`, increasing `μ`
/// and a permutation `σ`.
pub fn rearrangement_product_check(lambda: &[f64], mu: &[f64], sigma: &[usize]) -> Result<bool> {
    let d = lambda.len();
    if mu.len() != d || sigma.len() != d {
        return Err(Error::LengthMismatch {
            left: d,
            right: mu.len().max(sigma.len()),
        });
    }
    let mut seen = vec![false; d];
    for &s in sigma {
        if s >= d || std::mem::replace(&mut seen[s], true) {
            return Err(Error::InvalidInput(format!("{sigma:?} is not a permutation")));
        }
    }
    if lambda.iter().chain(mu).any(|&x| !(x > 0.0)) {
        return Err(Error::InvalidInput("entries must be strictly positive".into()));
    }
    if lambda.windows(2).any(|w| w[0] < w[1]) || mu.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidInput("λ must decrease and μ increase".into()));
    }
    // compare in logs to avoid overflow on long products
    let paired: f64 = lambda.iter().zip(mu).map(|(l, m)| (l + m).ln()).sum();
    let permuted: f64 = lambda.iter().zip(sigma).map(|(l, &s)| (l + mu[s]).ln()).sum();
    Ok(paired >= permuted - 1e-12 * (1.0 + permuted.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(v: &[f64]) -> HermitianMatrix {
        HermitianMatrix::from_real_diagonal(v)
    }

    #[test]
    fn lindskii_examples() {
        let c = lindskii_check(&diag(&[2.0, 1.0]), &diag(&[0.0, 1.0])).unwrap();
        assert_eq!(c.lhs, vec![2.0, 2.0]);
        assert_eq!(c.rhs, vec![2.0, 2.0]);
        assert!(c.holds);
        let c = lindskii_check(&diag(&[2.0, 1.0]), &diag(&[1.0, 0.0])).unwrap();
        assert_eq!(c.lhs, vec![2.0, 2.0]);
        assert_eq!(c.rhs, vec![3.0, 1.0]);
        assert!(c.holds);
    }

    #[test]
    fn weyl_examples() {
        let a = HermitianMatrix::from_real_rows(&[vec![2.0, 1.0], vec![1.0, -1.0]]).unwrap();
        let w = weyl_check(&a, &HermitianMatrix::zeros(2)).unwrap();
        assert!(w.holds);
        assert_eq!(w.monotone, Some(true));
        let w = weyl_check(&a, &HermitianMatrix::identity(2).shifted(-1.0).shifted(0.001)).unwrap();
        assert!(w.holds);
        let w = weyl_check(&a, &diag(&[-1.0, 0.0])).unwrap();
        assert!(w.holds);
        assert_eq!(w.monotone, None);
    }

    #[test]
    fn matching_examples() {
        let r = is_optimal_matching(&diag(&[2.0, 1.0]), &diag(&[0.0, 1.0])).unwrap();
        assert!(r.is_equality);
        assert_eq!(r.commutator, 0.0);
        assert!(r.pairing.is_some());
        let r = is_optimal_matching(&diag(&[2.0, 1.0]), &diag(&[1.0, 0.0])).unwrap();
        assert!(!r.is_equality);
        assert!(r.pairing.is_none());
        assert!(r.certificate_consistent);
    }

    #[test]
    fn degenerate_lambda_allows_any_pairing() {
        let p = common_onb_pairing(&HermitianMatrix::identity(2), &diag(&[3.0, 1.0])).unwrap();
        assert_eq!(p.lambda, vec![1.0, 1.0]);
        assert!((p.mu[0] - 1.0).abs() < 1e-12 && (p.mu[1] - 3.0).abs() < 1e-12);
        assert!(p.vectors[0][1].norm() > 1.0 - 1e-12);
    }

    #[test]
    fn identity_pairing_for_diagonal_optimum() {
        let s0 = diag(&[9.0, 5.0, 4.0, 2.0, 1.0]);
        let s1 = diag(&[0.0, 0.0, 0.0, 2.0, 3.5]);
        let p = common_onb_pairing(&s0, &s1).unwrap();
        assert_eq!(p.lambda, vec![9.0, 5.0, 4.0, 2.0, 1.0]);
        assert_eq!(p.mu, vec![0.0, 0.0, 0.0, 2.0, 3.5]);
        assert!(p.reconstruction_error(&s0, &s1).unwrap() < 1e-12);
    }

    #[test]
    fn wrong_pairing_is_rejected() {
        let err = common_onb_pairing(&diag(&[2.0, 1.0]), &diag(&[1.0, 0.0])).unwrap_err();
        assert!(matches!(err, Error::NotOptimalMatching { .. }));
    }

    #[test]
    fn rearrangement_examples() {
        assert!(rearrangement_product_check(&[2.0, 1.0], &[1.0, 2.0], &[0, 1]).unwrap());
        assert!(rearrangement_product_check(&[2.0, 1.0], &[1.0, 2.0], &[1, 0]).unwrap());
        assert!(rearrangement_product_check(&[2.0, 1.0], &[1.0, 2.0], &[0, 0]).is_err());
        assert!(rearrangement_product_check(&[2.0, 0.0], &[1.0, 2.0], &[0, 1]).is_err());
    }
}
