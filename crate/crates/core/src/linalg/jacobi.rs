//! Cyclic Jacobi for dense symmetric matrices.
//!
//! Each sweep visits every off-diagonal pair `(p, q)` in row order and applies
//! the plane rotation that annihilates `a_pq`. Iteration stops once the
//! off-diagonal Frobenius norm drops below `tol · max(1, ‖M‖_F)`.

use super::SymMatrix;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct JacobiEigen {
    /// Unsorted diagonal after convergence.
    pub values: Vec<f64>,
    /// Column `k` (row-major `n × n`) is the eigenvector of `values[k]`.
    pub vectors: Option<Vec<f64>>,
    pub sweeps: usize,
}

fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            s += a[i * n + j] * a[i * n + j];
        }
    }
    (2.0 * s).sqrt()
}

pub fn jacobi_eigen(
    m: &SymMatrix,
    tol: f64,
    max_sweeps: usize,
    with_vectors: bool,
) -> Result<JacobiEigen> {
    let n = m.order();
    let mut a = m.as_slice().to_vec();
    let mut v = with_vectors.then(|| SymMatrix::identity(n).as_slice().to_vec());
    let threshold = tol * m.frobenius_norm().max(1.0);

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a, n);
        if off <= threshold {
            break;
        }
        if sweeps == max_sweeps {
            return Err(Error::NoConvergence {
                iterations: sweeps,
                residual: off,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.is_finite() {
                    theta.signum() / (theta.abs() + theta.hypot(1.0))
                } else {
                    0.0
                };
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    let new_kp = c * akp - s * akq;
                    let new_kq = s * akp + c * akq;
                    a[k * n + p] = new_kp;
                    a[p * n + k] = new_kp;
                    a[k * n + q] = new_kq;
                    a[q * n + k] = new_kq;
                }
                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }

    Ok(JacobiEigen {
        values: (0..n).map(|i| a[i * n + i]).collect(),
        vectors: v,
        sweeps,
    })
}
