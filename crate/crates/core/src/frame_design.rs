//! Constructive Schur–Horn machinery.
//!
//! A real symmetric matrix with spectrum `s` and diagonal `a` exists iff
//! `a ≺ s`. [`schur_horn_matrix`] builds one with at most `k - 1` plane
//! rotations of `diag(s)`: each rotation couples the largest free diagonal
//! entry with the largest free entry below the current target, pins the
//! target, and leaves the still-free principal block diagonal.
//!
//! Vectors with prescribed squared norms and prescribed frame operator are
//! then read off a factorization of that Gram matrix.

use crate::error::{Error, Result};
use crate::linalg::{eig_hermitian, frame_operator, EigenSystem, HermitianMatrix, VectorSequence, C64};
use crate::majorization::{majorized, sort_desc};
use crate::spectrum::{NormSeq, Order, Spectrum};

const ZERO_TOL: f64 = 1e-10;

/// Orthogonal `Q` (rows) with `Q diag(spectrum) Qᵀ` having the requested diagonal.
#[derive(Clone, Debug)]
pub(crate) struct SchurHornFactor {
    pub q: Vec<Vec<f64>>,
    pub spectrum: Vec<f64>,
    #[cfg_attr(not(test), allow(dead_code))]
    pub rotations: usize,
}

impl SchurHornFactor {
    pub fn matrix(&self) -> HermitianMatrix {
        let k = self.spectrum.len();
        let rows: Vec<Vec<C64>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        let v: f64 = (0..k).map(|m| self.q[i][m] * self.spectrum[m] * self.q[j][m]).sum();
                        C64::new(v, 0.0)
                    })
                    .collect()
            })
            .collect();
        HermitianMatrix::from_rows(&rows).expect("symmetric by construction")
    }
}

pub(crate) fn schur_horn_factor(spectrum: &[f64], diagonal: &[f64]) -> Result<SchurHornFactor> {
    let k = spectrum.len();
    if diagonal.len() != k {
        return Err(Error::LengthMismatch {
            left: diagonal.len(),
            right: k,
        });
    }
    if k == 0 {
        return Err(Error::InvalidInput("empty design".into()));
    }
    if !majorized(diagonal, spectrum, false)? {
        return Err(Error::InfeasibleDesign(format!(
            "diagonal {diagonal:?} is not majorized by spectrum {spectrum:?}"
        )));
    }
    let s = sort_desc(spectrum);
    let scale = s.iter().fold(1.0_f64, |m, v| m.max(v.abs()));

    let mut q: Vec<Vec<f64>> = (0..k)
        .map(|i| (0..k).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let mut x = s.clone();
    let mut free = vec![true; k];
    let mut slot = vec![usize::MAX; k];
    let mut rotations = 0;

    let mut targets: Vec<usize> = (0..k).collect();
    targets.sort_by(|&i, &j| diagonal[j].total_cmp(&diagonal[i]));

    for (step, &t) in targets.iter().enumerate() {
        let free_positions: Vec<usize> = (0..k).filter(|&p| free[p]).collect();
        if step == k - 1 {
            slot[t] = free_positions[0];
            break;
        }
        let a = diagonal[t];
        let i = *free_positions
            .iter()
            .max_by(|&&p, &&r| x[p].total_cmp(&x[r]).then(r.cmp(&p)))
            .expect("free position");
        if x[i] - a > 1e-14 * scale {
            let j = free_positions
                .iter()
                .copied()
                .filter(|&p| p != i && x[p] <= a)
                .max_by(|&p, &r| x[p].total_cmp(&x[r]).then(r.cmp(&p)))
                .or_else(|| {
                    // rounding pushed every candidate above the target
                    free_positions
                        .iter()
                        .copied()
                        .filter(|&p| p != i)
                        .min_by(|&p, &r| x[p].total_cmp(&x[r]))
                })
                .expect("two free positions");
            let gap = x[i] - x[j];
            if gap > 0.0 {
                let c2 = ((a - x[j]) / gap).clamp(0.0, 1.0);
                let (c, sn) = (c2.sqrt(), (1.0 - c2).sqrt());
                for m in 0..k {
                    let (qi, qj) = (q[i][m], q[j][m]);
                    q[i][m] = c * qi + sn * qj;
                    q[j][m] = -sn * qi + c * qj;
                }
                x[j] = x[i] + x[j] - a;
                x[i] = a;
                rotations += 1;
            }
        }
        free[i] = false;
        slot[t] = i;
    }

    let q = slot.iter().map(|&p| q[p].clone()).collect();
    Ok(SchurHornFactor {
        q,
        spectrum: s,
        rotations,
    })
}

/// A real symmetric (Hermitian) matrix with eigenvalues `spectrum` and
/// diagonal `diagonal`, in the caller's order.
pub fn schur_horn_matrix(spectrum: &[f64], diagonal: &[f64]) -> Result<HermitianMatrix> {
    Ok(schur_horn_factor(spectrum, diagonal)?.matrix())
}

/// Vectors `g_j = Σ_m sqrt(s_m) Q_jm u_m` whose Gram matrix is the Schur–Horn
/// matrix, so that `Σ g_j g_j* = Σ w_i u_i u_i*` and `‖g_j‖² = α_j`.
fn synthesize(weights: &[f64], basis: &[Vec<C64>], norms: &NormSeq) -> Result<VectorSequence> {
    let dim = basis.first().map_or(0, |v| v.len());
    let k = norms.len();
    let scale = weights.iter().fold(1.0_f64, |m, w| m.max(w.abs())).max(norms.trace());
    if let Some(w) = weights.iter().find(|&&w| w < -ZERO_TOL * scale) {
        return Err(Error::InfeasibleDesign(format!(
            "target operator is not positive semidefinite (eigenvalue {w})"
        )));
    }
    let mut support: Vec<usize> = (0..weights.len()).filter(|&i| weights[i] > ZERO_TOL * scale).collect();
    support.sort_by(|&i, &j| weights[j].total_cmp(&weights[i]));
    if support.len() > k {
        return Err(Error::InfeasibleDesign(format!(
            "target operator has rank {} but only {k} vectors are prescribed",
            support.len()
        )));
    }
    let mut gram_spectrum: Vec<f64> = support.iter().map(|&i| weights[i]).collect();
    gram_spectrum.resize(k, 0.0);

    let trace: f64 = gram_spectrum.iter().sum();
    if (trace - norms.trace()).abs() > 1e-9 * scale {
        return Err(Error::TraceMismatch {
            left: trace,
            right: norms.trace(),
        });
    }
    let factor = schur_horn_factor(&gram_spectrum, norms.values())?;

    let vectors: Vec<Vec<C64>> = (0..k)
        .map(|j| {
            let mut g = vec![C64::new(0.0, 0.0); dim];
            for (m, &i) in support.iter().enumerate() {
                let w = factor.spectrum[m].sqrt() * factor.q[j][m];
                for (gz, uz) in g.iter_mut().zip(&basis[i]) {
                    *gz += uz * w;
                }
            }
            g
        })
        .collect();
    VectorSequence::new(dim, norms.restore_order(vectors))
}

/// `k` vectors with frame operator `b` and squared norms `norms`, returned in
/// the caller's norm order.
pub fn design_vectors(b: &HermitianMatrix, norms: &NormSeq) -> Result<VectorSequence> {
    let eig = eig_hermitian(b)?;
    synthesize(&eig.values, &eig.vectors, norms)
}

/// Completes `f0` with vectors of squared norms `norms` whose frame operator
/// is `Σ μ_i v_i v_i*`, where `v_i` are eigenvectors of `S_{F0}` ordered by
/// decreasing eigenvalue and `mu` is increasing.
pub fn complete_frame(f0: &VectorSequence, mu: &Spectrum, norms: &NormSeq) -> Result<VectorSequence> {
    let eig = eig_hermitian(&frame_operator(f0))?;
    complete_from_eigensystem(&eig, mu, norms)
}

/// As [`complete_frame`], reusing an eigendecomposition of `S_{F0}`.
pub fn complete_from_eigensystem(eig: &EigenSystem, mu: &Spectrum, norms: &NormSeq) -> Result<VectorSequence> {
    if mu.order() != Order::Increasing {
        return Err(Error::InvalidInput("added spectrum must be increasing".into()));
    }
    if mu.len() != eig.values.len() {
        return Err(Error::LengthMismatch {
            left: mu.len(),
            right: eig.values.len(),
        });
    }
    if !majorized(norms.values(), mu.values(), true)? {
        return Err(Error::InfeasibleDesign(format!(
            "norms {:?} are not majorized by {:?}",
            norms.values(),
            mu.values()
        )));
    }
    synthesize(mu.values(), &eig.vectors, norms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::frame_operator;

    fn assert_design(m: &HermitianMatrix, spectrum: &[f64], diagonal: &[f64]) {
        for (d, want) in m.diagonal().iter().zip(diagonal) {
            assert!((d - want).abs() < 1e-10, "diagonal {:?} vs {diagonal:?}", m.diagonal());
        }
        let eig = eig_hermitian(m).unwrap();
        for (l, want) in eig.values.iter().zip(sort_desc(spectrum)) {
            assert!((l - want).abs() < 1e-9);
        }
    }

    #[test]
    fn two_by_two_flattening() {
        let m = schur_horn_matrix(&[2.0, 0.0], &[1.0, 1.0]).unwrap();
        assert_design(&m, &[2.0, 0.0], &[1.0, 1.0]);
        assert!((m.get(0, 1).norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn equal_targets_need_no_rotation() {
        let f = schur_horn_factor(&[3.5, 2.0], &[3.5, 2.0]).unwrap();
        assert_eq!(f.rotations, 0);
        let m = f.matrix();
        assert_eq!(m.diagonal(), vec![3.5, 2.0]);
        assert_eq!(m.get(0, 1).norm(), 0.0);

        let f = schur_horn_factor(&[4.0, 2.0, 1.0], &[4.0, 2.0, 1.0]).unwrap();
        assert_eq!(f.rotations, 0);
    }

    #[test]
    fn respects_caller_diagonal_order() {
        let m = schur_horn_matrix(&[5.0, 3.0, 1.0, 0.0], &[1.0, 3.0, 2.5, 2.5]).unwrap();
        assert_design(&m, &[5.0, 3.0, 1.0, 0.0], &[1.0, 3.0, 2.5, 2.5]);
    }

    #[test]
    fn rejects_infeasible_design() {
        assert!(matches!(
            schur_horn_matrix(&[1.0, 1.0], &[2.0, 0.0]),
            Err(Error::InfeasibleDesign(_))
        ));
    }

    #[test]
    fn scaled_basis_when_norms_match_spectrum() {
        let b = HermitianMatrix::from_real_diagonal(&[1.0, 3.0, 2.0]);
        let norms = NormSeq::new(&[3.0, 2.0, 1.0]).unwrap();
        let g = design_vectors(&b, &norms).unwrap();
        let s = frame_operator(&g);
        assert!(s.sub(&b).unwrap().max_abs() < 1e-12);
        // each vector is a scaled coordinate vector
        for v in g.vectors() {
            assert_eq!(v.iter().filter(|z| z.norm() > 1e-12).count(), 1);
        }
    }

    #[test]
    fn unit_norm_tight_frame_in_c2() {
        let b = HermitianMatrix::from_real_diagonal(&[1.5, 1.5]);
        let norms = NormSeq::new(&[1.0, 1.0, 1.0]).unwrap();
        let g = design_vectors(&b, &norms).unwrap();
        for n in g.squared_norms() {
            assert!((n - 1.0).abs() < 1e-12);
        }
        assert!(frame_operator(&g).sub(&b).unwrap().max_abs() < 1e-12);
    }

    #[test]
    fn design_rejects_trace_mismatch() {
        let b = HermitianMatrix::from_real_diagonal(&[1.0, 1.0]);
        let norms = NormSeq::new(&[1.0, 0.5]).unwrap();
        assert!(matches!(design_vectors(&b, &norms), Err(Error::TraceMismatch { .. })));
    }

    #[test]
    fn output_follows_caller_norm_order() {
        let b = HermitianMatrix::from_real_diagonal(&[2.0, 3.5]);
        let norms = NormSeq::new(&[2.0, 3.5]).unwrap();
        let g = design_vectors(&b, &norms).unwrap();
        let n = g.squared_norms();
        assert!((n[0] - 2.0).abs() < 1e-12 && (n[1] - 3.5).abs() < 1e-12);
    }

    #[test]
    fn complete_frame_rejects_unsorted_mu() {
        assert!(Spectrum::increasing(vec![0.0, 0.0, 0.75, 1.25, 0.75]).is_err());
        let f0 = VectorSequence::from_real(2, &[vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let mu = Spectrum::decreasing(vec![1.0, 0.0]).unwrap();
        let norms = NormSeq::new(&[1.0]).unwrap();
        assert!(complete_frame(&f0, &mu, &norms).is_err());
    }

    #[test]
    fn completion_pairs_largest_lambda_with_smallest_mu() {
        let f0 = VectorSequence::from_real(2, &[vec![2.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let mu = Spectrum::increasing(vec![0.0, 3.0]).unwrap();
        let norms = NormSeq::new(&[3.0]).unwrap();
        let g = complete_frame(&f0, &mu, &norms).unwrap();
        // S_F0 = diag(4, 1): the added mass goes to the e2 direction
        let got = &g.vectors()[0];
        assert!(got[0].norm() < 1e-12);
        assert!((got[1].norm_sqr() - 3.0).abs() < 1e-12);
    }
}
