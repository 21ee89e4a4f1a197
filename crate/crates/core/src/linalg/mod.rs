//! Dense matrices attached to a graph and the numerical routines run on them.

mod charpoly;
mod closed_form;
mod identities;
mod jacobi;
mod power;
mod spectrum;
mod tridiagonal;

pub use charpoly::{
    char_poly_eval, char_poly_eval_log, determinant_log, SignedLog, LOG_DETERMINANT_ORDER,
};
pub use closed_form::{closed_form_spectrum, ClosedForm};
pub use identities::{
    default_sample_points, incidence_identity_residual, linegraph_charpoly_residual,
    CharPolyResidual, IncidenceResidual,
};
pub use jacobi::{jacobi_eigen, JacobiEigen};
pub use power::lambda1_power;
pub use spectrum::{
    eigenvalues, eigenvalues_with, grouping_tolerance, spectrum, EigenMethod, Spectrum,
    DEFAULT_EIGEN_TOL, JACOBI_MAX_ORDER, MAX_SWEEPS,
};
pub use tridiagonal::{householder_tridiagonal, tridiagonal_eigenvalues};

use crate::error::{check_alpha, Error, Result};
use crate::graph::Graph;

/// Dense real symmetric matrix, row-major. Symmetric by construction: every
/// constructor fills the upper triangle and mirrors it.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![1.0; n])
    }

    pub fn diagonal(d: &[f64]) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, &x) in d.iter().enumerate() {
            m.data[i * m.n + i] = x;
        }
        m
    }

    /// Evaluates `f(i, j)` for `i ≤ j` only and mirrors it.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in i..n {
                let x = f(i, j);
                m.data[i * n + j] = x;
                m.data[j * n + i] = x;
            }
        }
        m
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Maximum absolute row sum.
    pub fn inf_norm(&self) -> f64 {
        (0..self.n)
            .map(|i| self.row(i).iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &SymMatrix) -> f64 {
        assert_eq!(self.n, other.n, "order mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn scaled(&self, s: f64) -> SymMatrix {
        SymMatrix {
            n: self.n,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    /// `a·self + b·other`.
    pub fn combine(&self, a: f64, other: &SymMatrix, b: f64) -> SymMatrix {
        assert_eq!(self.n, other.n, "order mismatch");
        SymMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(x, y)| a * x + b * y)
                .collect(),
        }
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n, "dimension mismatch");
        (0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Principal submatrix on the given indices.
    pub fn principal_submatrix(&self, keep: &[usize]) -> SymMatrix {
        SymMatrix::from_fn(keep.len(), |i, j| self.get(keep[i], keep[j]))
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }

    /// First negative entry, scanning row by row.
    pub fn first_negative(&self) -> Option<(usize, usize)> {
        self.data
            .iter()
            .position(|&x| x < 0.0)
            .map(|k| (k / self.n, k % self.n))
    }
}

/// Dense 0/1 matrix, used for the `n × m` vertex-edge incidence matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RectMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl RectMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    pub fn column_sums(&self) -> Vec<u64> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| u64::from(self.get(i, j))).sum())
            .collect()
    }

    /// `BᵀB` in exact integer arithmetic (`cols × cols`, row-major).
    pub fn gram_columns(&self) -> Vec<i64> {
        let c = self.cols;
        let mut out = vec![0i64; c * c];
        for i in 0..self.rows {
            let row = &self.data[i * c..(i + 1) * c];
            for (a, &x) in row.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (b, &y) in row.iter().enumerate() {
                    out[a * c + b] += i64::from(x) * i64::from(y);
                }
            }
        }
        out
    }

    /// `BBᵀ` in exact integer arithmetic (`rows × rows`, row-major).
    pub fn gram_rows(&self) -> Vec<i64> {
        let (r, c) = (self.rows, self.cols);
        let mut out = vec![0i64; r * r];
        for a in 0..r {
            for b in 0..r {
                out[a * r + b] = (0..c)
                    .map(|j| i64::from(self.get(a, j)) * i64::from(self.get(b, j)))
                    .sum();
            }
        }
        out
    }
}

pub fn adjacency(g: &Graph) -> SymMatrix {
    let n = g.order();
    let mut m = SymMatrix::zeros(n);
    for &(u, v) in g.edges() {
        m.data[u * n + v] = 1.0;
        m.data[v * n + u] = 1.0;
    }
    m
}

pub fn degree_matrix(g: &Graph) -> SymMatrix {
    let d: Vec<f64> = g.degrees().into_iter().map(|x| x as f64).collect();
    SymMatrix::diagonal(&d)
}

/// `L = D − A`.
pub fn laplacian(g: &Graph) -> SymMatrix {
    degree_matrix(g).combine(1.0, &adjacency(g), -1.0)
}

/// `Q = D + A`.
pub fn signless_laplacian(g: &Graph) -> SymMatrix {
    degree_matrix(g).combine(1.0, &adjacency(g), 1.0)
}

/// `A_α(G) = α·D + (1 − α)·A`.
pub fn a_alpha(g: &Graph, alpha: f64) -> Result<SymMatrix> {
    check_alpha(alpha)?;
    let n = g.order();
    let mut m = SymMatrix::zeros(n);
    for v in 0..n {
        m.data[v * n + v] = alpha * g.degree(v) as f64;
    }
    let w = 1.0 - alpha;
    for &(u, v) in g.edges() {
        m.data[u * n + v] = w;
        m.data[v * n + u] = w;
    }
    Ok(m)
}

/// Vertex-edge incidence matrix; column `k` is edge `k` of [`Graph::edges`].
pub fn incidence(g: &Graph) -> Result<RectMatrix> {
    if g.size() == 0 {
        return Err(Error::NoEdges);
    }
    let (rows, cols) = (g.order(), g.size());
    let mut data = vec![0u8; rows * cols];
    for (k, &(u, v)) in g.edges().iter().enumerate() {
        data[u * cols + k] = 1;
        data[v * cols + k] = 1;
    }
    Ok(RectMatrix { rows, cols, data })
}

/// Rayleigh quotient `xᵀMx / xᵀx`.
pub fn rayleigh(m: &SymMatrix, x: &[f64]) -> Result<f64> {
    if x.len() != m.order() {
        return Err(Error::InvalidArgument(format!(
            "vector length {} does not match order {}",
            x.len(),
            m.order()
        )));
    }
    let xx: f64 = x.iter().map(|v| v * v).sum();
    if xx == 0.0 {
        return Err(Error::InvalidArgument(
            "Rayleigh quotient of the zero vector".into(),
        ));
    }
    let mx = m.mul_vec(x);
    Ok(x.iter().zip(&mx).map(|(a, b)| a * b).sum::<f64>() / xx)
}

/// Row sums of `M` (`k = 1`) or `M²` (`k = 2`).
pub fn row_sums_of_power(m: &SymMatrix, k: u32) -> Result<Vec<f64>> {
    let ones = vec![1.0; m.order()];
    match k {
        1 => Ok(m.mul_vec(&ones)),
        2 => Ok(m.mul_vec(&m.mul_vec(&ones))),
        _ => Err(Error::InvalidArgument(format!(
            "row sums of M^{k}: k must be 1 or 2"
        ))),
    }
}
