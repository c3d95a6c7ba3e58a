//! Dense Hermitian linear algebra for small frames: frame operators,
//! a cyclic Jacobi eigensolver, canonical duals and commutators.

use std::ops::Range;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

const HERMITIAN_TOL: f64 = 1e-12;
const JACOBI_THRESHOLD: f64 = 1e-13;
const MAX_SWEEPS: usize = 64;
/// Relative eigenvalue gap below which eigenvalues are treated as one cluster.
pub const CLUSTER_GAP: f64 = 1e-8;

/// A `d x d` complex self-adjoint matrix stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl HermitianMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![C64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_real_diagonal(&vec![1.0; dim])
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &v) in diag.iter().enumerate() {
            m.data[i * m.dim + i] = C64::new(v, 0.0);
        }
        m
    }

    /// Builds a matrix from rows, rejecting inputs that are not Hermitian
    /// within `1e-12 * (1 + max|a_ij|)`. The stored matrix is the exact
    /// Hermitian part.
    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::InvalidInput("matrix must be nonempty".into()));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::LengthMismatch {
                left: r.len(),
                right: dim,
            });
        }
        let raw: Vec<C64> = rows.iter().flatten().copied().collect();
        if raw.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidInput("matrix entries must be finite".into()));
        }
        let max = raw.iter().fold(0.0_f64, |m, z| m.max(z.norm()));
        let mut asym = 0.0_f64;
        for i in 0..dim {
            for j in 0..dim {
                asym = asym.max((raw[i * dim + j] - raw[j * dim + i].conj()).norm());
            }
        }
        if asym > HERMITIAN_TOL * (1.0 + max) {
            return Err(Error::InvalidInput(format!(
                "matrix is not Hermitian (asymmetry {asym:e})"
            )));
        }
        Ok(Self::hermitian_part(dim, &raw))
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let rows: Vec<Vec<C64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| C64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    fn hermitian_part(dim: usize, raw: &[C64]) -> Self {
        let mut data = vec![C64::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            data[i * dim + i] = C64::new(raw[i * dim + i].re, 0.0);
            for j in (i + 1)..dim {
                let v = (raw[i * dim + j] + raw[j * dim + i].conj()) * 0.5;
                data[i * dim + j] = v;
                data[j * dim + i] = v.conj();
            }
        }
        Self { dim, data }
    }

    /// `Σ w_i v_i v_i*`.
    pub fn from_spectral(weights: &[f64], vectors: &[Vec<C64>]) -> Self {
        let dim = vectors.first().map_or(0, |v| v.len());
        let mut m = Self::zeros(dim);
        for (&w, v) in weights.iter().zip(vectors) {
            m.add_rank_one(w, v);
        }
        m
    }

    fn add_rank_one(&mut self, w: f64, v: &[C64]) {
        let n = self.dim;
        for i in 0..n {
            self.data[i * n + i].re += w * v[i].norm_sqr();
            for j in (i + 1)..n {
                let z = v[i] * v[j].conj() * w;
                self.data[i * n + j] += z;
                self.data[j * n + i] += z.conj();
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<C64>> {
        self.data.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.dim).map(|i| self.get(i, i).re).collect()
    }

    pub fn trace(&self) -> f64 {
        self.diagonal().iter().sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, z| m.max(z.norm()))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Self { dim: self.dim, data })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Self { dim: self.dim, data })
    }

    /// `self + shift * I`.
    pub fn shifted(&self, shift: f64) -> Self {
        let mut m = self.clone();
        for i in 0..self.dim {
            m.data[i * self.dim + i].re += shift;
        }
        m
    }

    pub fn apply(&self, x: &[C64]) -> Vec<C64> {
        self.data
            .chunks(self.dim)
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `U A U*` for a unitary (or any square) matrix `U` given by rows.
    pub fn conjugate_by(&self, u: &[Vec<C64>]) -> Self {
        let n = self.dim;
        let au: Vec<C64> = (0..n * n)
            .map(|idx| {
                let (i, j) = (idx / n, idx % n);
                (0..n).map(|k| self.data[i * n + k] * u[j][k].conj()).sum()
            })
            .collect();
        let raw: Vec<C64> = (0..n * n)
            .map(|idx| {
                let (i, j) = (idx / n, idx % n);
                (0..n).map(|k| u[i][k] * au[k * n + j]).sum()
            })
            .collect();
        Self::hermitian_part(n, &raw)
    }

    /// Spectral norm, `max |λ_i|`.
    pub fn spectral_norm(&self) -> Result<f64> {
        let eig = eig_hermitian(self)?;
        Ok(eig.values.iter().fold(0.0, |m, v| m.max(v.abs())))
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::LengthMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }
}

fn matmul(a: &[C64], b: &[C64], n: usize) -> Vec<C64> {
    let mut out = vec![C64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == C64::new(0.0, 0.0) {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

/// An ordered family of vectors in `C^d`.
#[derive(Clone, Debug, PartialEq)]
pub struct VectorSequence {
    dim: usize,
    vectors: Vec<Vec<C64>>,
}

impl VectorSequence {
    pub fn new(dim: usize, vectors: Vec<Vec<C64>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInput("ambient dimension must be positive".into()));
        }
        for v in &vectors {
            if v.len() != dim {
                return Err(Error::LengthMismatch {
                    left: v.len(),
                    right: dim,
                });
            }
            if v.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                return Err(Error::InvalidInput("vector entries must be finite".into()));
            }
        }
        Ok(Self { dim, vectors })
    }

    pub fn empty(dim: usize) -> Self {
        Self {
            dim,
            vectors: Vec::new(),
        }
    }

    pub fn from_real(dim: usize, vectors: &[Vec<f64>]) -> Result<Self> {
        Self::new(
            dim,
            vectors
                .iter()
                .map(|v| v.iter().map(|&x| C64::new(x, 0.0)).collect())
                .collect(),
        )
    }

    /// Reads the vectors off the columns of a `d x n` synthesis matrix.
    pub fn from_synthesis_columns(rows: &[Vec<C64>]) -> Result<Self> {
        let dim = rows.len();
        let n = rows.first().map_or(0, |r| r.len());
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::LengthMismatch {
                left: r.len(),
                right: n,
            });
        }
        let vectors = (0..n).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
        Self::new(dim, vectors)
    }

    /// The `d x n` synthesis matrix, vectors as columns.
    pub fn synthesis_columns(&self) -> Vec<Vec<C64>> {
        (0..self.dim)
            .map(|i| self.vectors.iter().map(|v| v[i]).collect())
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<C64>] {
        &self.vectors
    }

    pub fn squared_norms(&self) -> Vec<f64> {
        self.vectors.iter().map(|v| norm_sqr(v)).collect()
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::LengthMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let mut vectors = self.vectors.clone();
        vectors.extend(other.vectors.iter().cloned());
        Ok(Self { dim: self.dim, vectors })
    }

    pub fn subsequence(&self, indices: &[usize]) -> Self {
        Self {
            dim: self.dim,
            vectors: indices.iter().map(|&i| self.vectors[i].clone()).collect(),
        }
    }

    /// Applies a `d x d` matrix (rows) to every vector.
    pub fn transformed(&self, u: &[Vec<C64>]) -> Self {
        let vectors = self
            .vectors
            .iter()
            .map(|v| {
                u.iter()
                    .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
                    .collect()
            })
            .collect();
        Self { dim: self.dim, vectors }
    }
}

pub fn inner(x: &[C64], y: &[C64]) -> C64 {
    // ⟨x, y⟩, linear in the first slot
    x.iter().zip(y).map(|(a, b)| a * b.conj()).sum()
}

pub fn norm_sqr(x: &[C64]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum()
}

pub fn distance(x: &[C64], y: &[C64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| (a - b).norm_sqr()).sum::<f64>().sqrt()
}

/// Eigenvalues sorted decreasingly with orthonormal eigenvectors.
#[derive(Clone, Debug)]
pub struct EigenSystem {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<C64>>,
    /// Index ranges of numerically coincident eigenvalues. Eigenvectors inside
    /// a cluster form an arbitrary orthonormal basis of its eigenspace.
    pub clusters: Vec<Range<usize>>,
}

impl EigenSystem {
    pub fn reconstruct(&self) -> HermitianMatrix {
        HermitianMatrix::from_spectral(&self.values, &self.vectors)
    }
}

/// `S_V = Σ f_i f_i*`.
pub fn frame_operator(v: &VectorSequence) -> HermitianMatrix {
    let mut s = HermitianMatrix::zeros(v.dim());
    for f in v.vectors() {
        s.add_rank_one(1.0, f);
    }
    s
}

/// Cyclic complex Jacobi. Each rotation first removes the phase of the
/// pivot `a_pq` and then applies a real plane rotation that annihilates it.
pub fn eig_hermitian(s: &HermitianMatrix) -> Result<EigenSystem> {
    let n = s.dim();
    let mut a = s.data.clone();
    let mut v = vec![C64::new(0.0, 0.0); n * n];
    for i in 0..n {
        v[i * n + i] = C64::new(1.0, 0.0);
    }
    let threshold = JACOBI_THRESHOLD * s.frobenius_norm();
    let off_norm = |a: &[C64]| -> f64 {
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    acc += a[i * n + j].norm_sqr();
                }
            }
        }
        acc.sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off <= threshold || off == 0.0 {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_diagonal: off,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                let mag = apq.norm();
                if mag == 0.0 || mag < f64::MIN_POSITIVE.sqrt() {
                    continue;
                }
                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                let theta = (aqq - app) / (2.0 * mag);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let sn = t * c;
                let phase = (apq / mag).conj();
                // J = D R restricted to the (p, q) plane
                let j_pp = C64::new(c, 0.0);
                let j_pq = C64::new(sn, 0.0);
                let j_qp = phase * (-sn);
                let j_qq = phase * c;

                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = akp * j_pp + akq * j_qp;
                    a[k * n + q] = akp * j_pq + akq * j_qq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = j_pp.conj() * apk + j_qp.conj() * aqk;
                    a[q * n + k] = j_pq.conj() * apk + j_qq.conj() * aqk;
                }
                a[p * n + q] = C64::new(0.0, 0.0);
                a[q * n + p] = C64::new(0.0, 0.0);
                a[p * n + p].im = 0.0;
                a[q * n + q].im = 0.0;
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = vkp * j_pp + vkq * j_qp;
                    v[k * n + q] = vkp * j_pq + vkq * j_qq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].re.total_cmp(&a[i * n + i].re));
    let values: Vec<f64> = order.iter().map(|&i| a[i * n + i].re).collect();
    let vectors: Vec<Vec<C64>> = order.iter().map(|&j| (0..n).map(|i| v[i * n + j]).collect()).collect();
    let clusters = clusters_of(&values);
    Ok(EigenSystem {
        values,
        vectors,
        clusters,
    })
}

/// Groups consecutive entries of a decreasing list whose gap is below
/// `CLUSTER_GAP * max(1, max|λ|)`.
pub fn clusters_of(values: &[f64]) -> Vec<Range<usize>> {
    let scale = values.iter().fold(1.0_f64, |m, v| m.max(v.abs()));
    let mut clusters = Vec::new();
    let mut start = 0;
    for i in 1..=values.len() {
        if i == values.len() || (values[i - 1] - values[i]).abs() >= CLUSTER_GAP * scale {
            clusters.push(start..i);
            start = i;
        }
    }
    clusters
}

/// The canonical dual `S_V^{-1} f_i`.
pub fn canonical_dual(v: &VectorSequence) -> Result<VectorSequence> {
    let eig = eig_hermitian(&frame_operator(v))?;
    let max = eig.values.first().copied().unwrap_or(0.0);
    let min = eig.values.last().copied().unwrap_or(0.0);
    if !(min > 1e-10 * max) || max <= 0.0 {
        return Err(Error::NotAFrame { min_eigenvalue: min });
    }
    let inv: Vec<f64> = eig.values.iter().map(|l| 1.0 / l).collect();
    let s_inv = HermitianMatrix::from_spectral(&inv, &eig.vectors);
    let vectors = v.vectors().iter().map(|f| s_inv.apply(f)).collect();
    VectorSequence::new(v.dim(), vectors)
}

/// Optimal frame bounds `(λ_min(S_V), λ_max(S_V))`.
pub fn frame_bounds(v: &VectorSequence) -> Result<(f64, f64)> {
    let eig = eig_hermitian(&frame_operator(v))?;
    let a = eig.values.last().copied().unwrap_or(0.0).max(0.0);
    let b = eig.values.first().copied().unwrap_or(0.0);
    Ok((a, b))
}

/// Spectral norm of `AB - BA`, computed from the Hermitian matrix `i(AB - BA)`.
pub fn commutator_norm(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<f64> {
    a.check_dim(b)?;
    let n = a.dim();
    let ab = matmul(&a.data, &b.data, n);
    let ba = matmul(&b.data, &a.data, n);
    let i = C64::new(0.0, 1.0);
    let raw: Vec<C64> = ab.iter().zip(&ba).map(|(x, y)| i * (x - y)).collect();
    HermitianMatrix::hermitian_part(n, &raw).spectral_norm()
}
