use super::jacobi::jacobi_eigen;
use super::tridiagonal::{householder_tridiagonal, tridiagonal_eigenvalues};
use super::SymMatrix;
use crate::error::{Error, Result};

/// Default off-diagonal convergence tolerance for Jacobi.
pub const DEFAULT_EIGEN_TOL: f64 = 1e-10;
/// Jacobi sweep budget.
pub const MAX_SWEEPS: usize = 100;
/// Largest order routed to Jacobi by [`EigenMethod::Auto`].
pub const JACOBI_MAX_ORDER: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EigenMethod {
    /// Jacobi up to [`JACOBI_MAX_ORDER`], Householder + QL above.
    #[default]
    Auto,
    Jacobi,
    Tridiagonal,
}

/// Eigenvalues in non-increasing order together with their multiplicities.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    groups: Vec<(f64, usize)>,
}

/// Multiplicity grouping tolerance `1e−6 · max(1, ‖M‖∞)`.
pub fn grouping_tolerance(m: &SymMatrix) -> f64 {
    1e-6 * m.inf_norm().max(1.0)
}

impl Spectrum {
    /// Sorts `values` and groups runs whose spread from the first member of the
    /// run stays within `group_tol`. The representative of a group is its mean.
    pub fn from_values(mut values: Vec<f64>, group_tol: f64) -> Spectrum {
        values.sort_by(|a, b| b.total_cmp(a));
        let mut groups: Vec<(f64, usize)> = Vec::new();
        let mut start = 0;
        for i in 1..=values.len() {
            if i == values.len() || values[start] - values[i] > group_tol {
                if i > start {
                    let run = &values[start..i];
                    groups.push((run.iter().sum::<f64>() / run.len() as f64, run.len()));
                }
                start = i;
            }
        }
        Spectrum {
            eigenvalues: values,
            groups,
        }
    }

    /// Spectrum from `(value, multiplicity)` pairs; zero multiplicities are
    /// dropped and values closer than `merge_tol` are merged.
    pub fn from_groups(groups: &[(f64, usize)], merge_tol: f64) -> Spectrum {
        let values = groups
            .iter()
            .flat_map(|&(x, k)| std::iter::repeat_n(x, k))
            .collect();
        Spectrum::from_values(values, merge_tol)
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn groups(&self) -> &[(f64, usize)] {
        &self.groups
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Largest eigenvalue λ₁.
    pub fn lambda1(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// Smallest eigenvalue λₙ.
    pub fn lambda_min(&self) -> f64 {
        *self.eigenvalues.last().expect("non-empty spectrum")
    }

    /// `λ_i` with the 1-based indexing of the non-increasing order.
    pub fn nth(&self, i: usize) -> Option<f64> {
        i.checked_sub(1)
            .and_then(|k| self.eigenvalues.get(k).copied())
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }
}

/// All eigenvalues with the given Jacobi tolerance; the method is chosen by
/// order (see [`EigenMethod::Auto`]).
pub fn eigenvalues(m: &SymMatrix, tol: f64) -> Result<Spectrum> {
    eigenvalues_with(m, EigenMethod::Auto, tol)
}

pub fn eigenvalues_with(m: &SymMatrix, method: EigenMethod, tol: f64) -> Result<Spectrum> {
    if !m.is_finite() {
        return Err(Error::InvalidArgument(
            "matrix has non-finite entries".into(),
        ));
    }
    let method = match method {
        EigenMethod::Auto if m.order() <= JACOBI_MAX_ORDER => EigenMethod::Jacobi,
        EigenMethod::Auto => EigenMethod::Tridiagonal,
        other => other,
    };
    let values = match method {
        EigenMethod::Jacobi => jacobi_eigen(m, tol, MAX_SWEEPS, false)?.values,
        _ => {
            let (d, e) = householder_tridiagonal(m);
            tridiagonal_eigenvalues(d, e)?
        }
    };
    Ok(Spectrum::from_values(values, grouping_tolerance(m)))
}

/// Shorthand for [`eigenvalues`] at [`DEFAULT_EIGEN_TOL`].
pub fn spectrum(m: &SymMatrix) -> Result<Spectrum> {
    eigenvalues(m, DEFAULT_EIGEN_TOL)
}
