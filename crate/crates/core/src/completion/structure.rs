//! Block structure of completing sequences.

use serde::Serialize;

use crate::error::Result;
use crate::linalg::{commutator_norm, frame_operator, inner, norm_sqr, VectorSequence, C64};

/// Inner products below `ORTHO_TOL · max ‖g‖²` count as zero.
pub const ORTHO_TOL: f64 = 1e-9;
/// Residuals below `STRUCTURE_TOL · (1 + ‖S_F‖)` count as zero.
pub const STRUCTURE_TOL: f64 = 1e-6;

/// Splits `g` into mutually orthogonal blocks that cannot be split further.
///
/// Blocks are the connected components of the graph joining `p` and `q`
/// whenever `|⟨g_p, g_q⟩|` is numerically nonzero. Each block is ascending
/// and blocks are ordered by their first index.
pub fn irreducible_partition(g: &VectorSequence) -> Vec<Vec<usize>> {
    let n = g.len();
    let scale = g.squared_norms().into_iter().fold(0.0, f64::max);
    let tol = ORTHO_TOL * scale.max(f64::MIN_POSITIVE);
    let vs = g.vectors();
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for p in 0..n {
        for q in p + 1..n {
            if inner(&vs[p], &vs[q]).norm() > tol {
                let (a, b) = (root(&mut parent, p), root(&mut parent, q));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for i in 0..n {
        let r = root(&mut parent, i);
        if slot[r] == usize::MAX {
            slot[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[slot[r]].push(i);
    }
    blocks
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BlockDiagnostic {
    pub indices: Vec<usize>,
    /// `‖[S_{G_i}, S_{F0}]‖`.
    pub commutator: f64,
    /// Mean Rayleigh quotient of `S_F` over the block.
    pub level: f64,
    /// `max_j ‖S_F g_j - level · g_j‖`.
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StructureDiagnostics {
    pub blocks: Vec<BlockDiagnostic>,
    pub max_commutator: f64,
    pub max_residual: f64,
    /// `STRUCTURE_TOL · (1 + ‖S_F‖)`.
    pub threshold: f64,
    /// Both maxima fall below the threshold.
    pub consistent: bool,
}

/// Measures how far `(f0, g)` is from the eigenvector structure an optimal
/// completion must have: each irreducible block of `g` commutes with
/// `S_{F0}` and lies in one eigenspace of `S_F`.
pub fn verify_minimizer_structure(f0: &VectorSequence, g: &VectorSequence) -> Result<StructureDiagnostics> {
    let s0 = frame_operator(f0);
    let sf = s0.add(&frame_operator(g))?;
    let threshold = STRUCTURE_TOL * (1.0 + sf.spectral_norm()?);
    let mut blocks = Vec::new();
    for indices in irreducible_partition(g) {
        let sub = g.subsequence(&indices);
        let commutator = commutator_norm(&frame_operator(&sub), &s0)?;
        let images: Vec<Vec<C64>> = sub.vectors().iter().map(|v| sf.apply(v)).collect();
        let nonzero: Vec<(f64, usize)> = sub
            .vectors()
            .iter()
            .enumerate()
            .filter_map(|(j, v)| {
                let n2 = norm_sqr(v);
                (n2 > 0.0).then(|| (inner(&images[j], v).re / n2, j))
            })
            .collect();
        let level = if nonzero.is_empty() {
            0.0
        } else {
            nonzero.iter().map(|(q, _)| q).sum::<f64>() / nonzero.len() as f64
        };
        let residual = sub
            .vectors()
            .iter()
            .zip(&images)
            .map(|(v, sv)| {
                sv.iter()
                    .zip(v)
                    .map(|(a, b)| (a - b * level).norm_sqr())
                    .sum::<f64>()
                    .sqrt()
            })
            .fold(0.0, f64::max);
        blocks.push(BlockDiagnostic {
            indices,
            commutator,
            level,
            residual,
        });
    }
    let max_commutator = blocks.iter().map(|b| b.commutator).fold(0.0, f64::max);
    let max_residual = blocks.iter().map(|b| b.residual).fold(0.0, f64::max);
    Ok(StructureDiagnostics {
        blocks,
        max_commutator,
        max_residual,
        threshold,
        consistent: max_commutator < threshold && max_residual < threshold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthogonal_basis_splits_fully() {
        let g = VectorSequence::from_real(3, &[vec![1.0, 0.0, 0.0], vec![0.0, 2.0, 0.0], vec![0.0, 0.0, 1.0]]).unwrap();
        assert_eq!(irreducible_partition(&g), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn mercedes_benz_is_irreducible() {
        let s3 = 3.0_f64.sqrt() / 2.0;
        let g = VectorSequence::from_real(2, &[vec![0.0, 1.0], vec![-s3, -0.5], vec![s3, -0.5]]).unwrap();
        assert_eq!(irreducible_partition(&g), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn chained_overlaps_join() {
        let g = VectorSequence::from_real(
            3,
            &[
                vec![1.0, 0.0, 0.0],
                vec![0.0, 0.0, 1.0],
                vec![1.0, 1.0, 0.0],
                vec![0.0, 1.0, 0.0],
            ],
        )
        .unwrap();
        assert_eq!(irreducible_partition(&g), vec![vec![0, 2, 3], vec![1]]);
    }

    #[test]
    fn scaled_eigenvectors_are_exact() {
        let f0 = VectorSequence::from_real(2, &[vec![2.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let g = VectorSequence::from_real(2, &[vec![0.0, 1.5]]).unwrap();
        let d = verify_minimizer_structure(&f0, &g).unwrap();
        assert_eq!(d.max_commutator, 0.0);
        assert_eq!(d.max_residual, 0.0);
        assert_eq!(d.blocks[0].level, 3.25);
        assert!(d.consistent);
    }

    #[test]
    fn generic_vector_reports_residual() {
        let f0 = VectorSequence::from_real(2, &[vec![2.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let g = VectorSequence::from_real(2, &[vec![1.0, 1.0]]).unwrap();
        let d = verify_minimizer_structure(&f0, &g).unwrap();
        assert!(d.max_residual > 0.1);
        assert!(d.max_commutator > 0.1);
        assert!(!d.consistent);
    }
}
