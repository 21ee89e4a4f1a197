//! Householder reduction to tridiagonal form followed by implicit QL with
//! Wilkinson-style shifts. `O(n³)` for the reduction, `O(n²)` for the
//! eigenvalues; used for orders where cyclic Jacobi gets slow.

use super::SymMatrix;
use crate::error::{Error, Result};

const MAX_QL_ITERATIONS: usize = 60;

#[inline]
fn dot(a: &[f64], b: &[f64]) -> f64 {
    let mut acc = [0.0f64; 4];
    let mut ca = a.chunks_exact(4);
    let mut cb = b.chunks_exact(4);
    for (x, y) in (&mut ca).zip(&mut cb) {
        acc[0] += x[0] * y[0];
        acc[1] += x[1] * y[1];
        acc[2] += x[2] * y[2];
        acc[3] += x[3] * y[3];
    }
    let tail: f64 = ca
        .remainder()
        .iter()
        .zip(cb.remainder())
        .map(|(x, y)| x * y)
        .sum();
    (acc[0] + acc[1]) + (acc[2] + acc[3]) + tail
}

/// Returns `(diagonal, off_diagonal)` of a tridiagonal matrix orthogonally
/// similar to `m`; `off_diagonal[i]` couples `i` and `i + 1` and the last
/// entry is zero.
pub fn householder_tridiagonal(m: &SymMatrix) -> (Vec<f64>, Vec<f64>) {
    let n = m.order();
    let mut a = m.as_slice().to_vec();
    let mut e = vec![0.0; n];
    let mut v = vec![0.0; n];
    let mut p = vec![0.0; n];

    for k in 0..n.saturating_sub(2) {
        let s = n - k - 1;
        let x0 = a[(k + 1) * n + k];
        let sigma: f64 = (k + 2..n).map(|i| a[i * n + k] * a[i * n + k]).sum();
        if sigma == 0.0 {
            e[k] = x0;
            continue;
        }
        let norm = (x0 * x0 + sigma).sqrt();
        let alpha = if x0 > 0.0 { -norm } else { norm };
        let v = &mut v[..s];
        v[0] = x0 - alpha;
        for i in 1..s {
            v[i] = a[(k + 1 + i) * n + k];
        }
        let beta = 2.0 / (v[0] * v[0] + sigma);

        // p = β·S·v with S the trailing block
        let p = &mut p[..s];
        for i in 0..s {
            let row = &a[(k + 1 + i) * n + k + 1..(k + 2 + i) * n];
            p[i] = beta * dot(row, v);
        }
        let kk = 0.5 * beta * dot(v, p);
        for i in 0..s {
            p[i] -= kk * v[i];
        }
        // S ← S − v·qᵀ − q·vᵀ
        for i in 0..s {
            let (vi, qi) = (v[i], p[i]);
            let row = &mut a[(k + 1 + i) * n + k + 1..(k + 2 + i) * n];
            for ((x, &vj), &qj) in row.iter_mut().zip(v.iter()).zip(p.iter()) {
                *x -= vi * qj + qi * vj;
            }
        }
        e[k] = alpha;
    }
    if n >= 2 {
        e[n - 2] = a[(n - 1) * n + n - 2];
    }
    let d = (0..n).map(|i| a[i * n + i]).collect();
    (d, e)
}

/// Eigenvalues (unsorted) of the symmetric tridiagonal matrix with diagonal
/// `d` and off-diagonal `e` (`e[i]` couples `i`, `i+1`; `e.len() == d.len()`).
pub fn tridiagonal_eigenvalues(mut d: Vec<f64>, mut e: Vec<f64>) -> Result<Vec<f64>> {
    let n = d.len();
    assert_eq!(
        e.len(),
        n,
        "off-diagonal must be padded to the diagonal length"
    );
    if n == 0 {
        return Ok(d);
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m < n - 1 {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            if iter == MAX_QL_ITERATIONS {
                return Err(Error::NoConvergence {
                    iterations: iter,
                    residual: e[l].abs(),
                });
            }
            iter += 1;
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut i = m;
            let mut deflated = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(d)
}
