//! Numerical checks of the matrix identities linking a graph to its line
//! graph.
//!
//! For an `r`-regular `G` on `n` vertices and `m` edges, with `α ∈ [0, 1)`:
//!
//! ```text
//! P_{A_α(l(G))}(λ) = (λ − 2rα + 2)^(m−n) · P_{A_α(G)}(λ − r + 2)
//!                  = (λ − 2rα + 2)^(m−n) · (1−α)^n · P_{A(G)}((λ − r(α+1) + 2)/(1−α))
//!                  = (λ − 2rα + 2)^(m−n) · (1−α)^n · P_{Q(G)}((λ − 2rα + 2)/(1−α))
//! ```
//!
//! Each right-hand side is evaluated independently of the left and compared
//! at sample points.

use super::charpoly::{char_poly_eval, char_poly_eval_log, SignedLog, LOG_DETERMINANT_ORDER};
use super::{a_alpha, adjacency, incidence, signless_laplacian, SymMatrix};
use crate::error::{check_alpha, check_alpha_open, Error, Result};
use crate::graph::{Graph, LineGraph};

/// Worst normalised deviation `|lhs − rhs| / max(1, |rhs|)` per identity form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharPolyResidual {
    /// Shifted `A_α(G)` form.
    pub a_alpha_form: f64,
    /// Scaled adjacency form.
    pub adjacency_form: f64,
    /// Signless Laplacian form.
    pub q_form: f64,
}

impl CharPolyResidual {
    pub fn max(&self) -> f64 {
        self.a_alpha_form.max(self.adjacency_form).max(self.q_form)
    }
}

/// `{−3, −1, 0, 1, 3} · (1 + Δ)`.
pub fn default_sample_points(g: &Graph) -> Vec<f64> {
    let s = 1.0 + g.max_degree() as f64;
    [-3.0, -1.0, 0.0, 1.0, 3.0].iter().map(|x| x * s).collect()
}

struct Evaluator {
    log: bool,
}

impl Evaluator {
    fn eval(&self, m: &SymMatrix, x: f64) -> SignedLog {
        if self.log {
            char_poly_eval_log(m, x)
        } else {
            SignedLog::from_f64(char_poly_eval(m, x))
        }
    }
}

pub fn linegraph_charpoly_residual(
    g: &Graph,
    alpha: f64,
    sample_points: &[f64],
) -> Result<CharPolyResidual> {
    check_alpha_open(alpha)?;
    let r = g.regularity().ok_or(Error::NotRegular)?;
    if r < 2 {
        return Err(Error::InvalidArgument(format!(
            "line-graph characteristic polynomial identities need r >= 2, got r = {r}"
        )));
    }
    let (n, m) = (g.order(), g.size());
    let rf = r as f64;
    let lg = LineGraph::of(g)?;
    let line_m = a_alpha(&lg.graph, alpha)?;
    let g_alpha = a_alpha(g, alpha)?;
    let g_adj = adjacency(g);
    let g_q = signless_laplacian(g);
    let ev = Evaluator {
        log: m > LOG_DETERMINANT_ORDER,
    };

    let scale = SignedLog::from_f64(1.0 - alpha).powi(n as u64);
    let mut res = CharPolyResidual {
        a_alpha_form: 0.0,
        adjacency_form: 0.0,
        q_form: 0.0,
    };
    for &x in sample_points {
        let lhs = ev.eval(&line_m, x);
        let factor = SignedLog::from_f64(x - 2.0 * rf * alpha + 2.0).powi((m - n) as u64);
        let rhs1 = factor.times(ev.eval(&g_alpha, x - rf + 2.0));
        let rhs2 = factor
            .times(scale)
            .times(ev.eval(&g_adj, (x - rf * (alpha + 1.0) + 2.0) / (1.0 - alpha)));
        let rhs3 = factor
            .times(scale)
            .times(ev.eval(&g_q, (x - 2.0 * rf * alpha + 2.0) / (1.0 - alpha)));
        res.a_alpha_form = res.a_alpha_form.max(lhs.relative_deviation(rhs1));
        res.adjacency_form = res.adjacency_form.max(lhs.relative_deviation(rhs2));
        res.q_form = res.q_form.max(lhs.relative_deviation(rhs3));
    }
    Ok(res)
}

/// Deviations of the incidence-matrix identities.
#[derive(Debug, Clone, PartialEq)]
pub struct IncidenceResidual {
    /// `max |BᵀB − (2I + A(l(G)))|`, exact.
    pub btb: i64,
    /// `max |BBᵀ − Q(G)|`, exact.
    pub bbt: i64,
    /// `max |(1−α)BᵀB − (A_α(l(G)) + U)|` with `U = diag(2 − α(d(u) + d(v)))`.
    pub u_form: f64,
    /// Diagonal of `U`, indexed by line-graph vertex.
    pub u_diagonal: Vec<f64>,
}

pub fn incidence_identity_residual(g: &Graph, alpha: f64) -> Result<IncidenceResidual> {
    check_alpha(alpha)?;
    let b = incidence(g)?;
    let lg = LineGraph::of(g)?;
    let (n, m) = (g.order(), g.size());

    let btb = b.gram_columns();
    let mut btb_dev = 0i64;
    for i in 0..m {
        for j in 0..m {
            let want = if i == j {
                2
            } else {
                i64::from(lg.graph.has_edge(i, j))
            };
            btb_dev = btb_dev.max((btb[i * m + j] - want).abs());
        }
    }

    let bbt = b.gram_rows();
    let mut bbt_dev = 0i64;
    for i in 0..n {
        for j in 0..n {
            let want = if i == j {
                g.degree(i) as i64
            } else {
                i64::from(g.has_edge(i, j))
            };
            bbt_dev = bbt_dev.max((bbt[i * n + j] - want).abs());
        }
    }

    let u_diagonal: Vec<f64> = g
        .edges()
        .iter()
        .map(|&(u, v)| 2.0 - alpha * (g.degree(u) + g.degree(v)) as f64)
        .collect();
    let line_alpha = a_alpha(&lg.graph, alpha)?;
    let mut u_dev = 0.0f64;
    for i in 0..m {
        for j in 0..m {
            let lhs = (1.0 - alpha) * btb[i * m + j] as f64;
            let u = if i == j { u_diagonal[i] } else { 0.0 };
            u_dev = u_dev.max((lhs - line_alpha.get(i, j) - u).abs());
        }
    }

    Ok(IncidenceResidual {
        btb: btb_dev,
        bbt: bbt_dev,
        u_form: u_dev,
        u_diagonal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn spec_examples() {
        let k4 = Family::Complete(4).build().unwrap();
        let r = linegraph_charpoly_residual(&k4, 0.3, &[-1.0, 0.0, 1.0, 5.0]).unwrap();
        assert!(r.max() < 1e-6, "{r:?}");

        let c5 = Family::Cycle(5).build().unwrap();
        let r = linegraph_charpoly_residual(&c5, 0.0, &[-2.5, 0.0, 2.0, 3.7]).unwrap();
        assert!(r.max() < 1e-6, "{r:?}");

        let pet = Family::Petersen.build().unwrap();
        let r = linegraph_charpoly_residual(&pet, 0.5, &[-2.0, 0.0, 2.0, 4.0]).unwrap();
        assert!(r.max() < 1e-6, "{r:?}");
    }

    #[test]
    fn rejects_bad_input() {
        let star = Family::Star(5).build().unwrap();
        assert_eq!(
            linegraph_charpoly_residual(&star, 0.2, &[0.0]),
            Err(Error::NotRegular)
        );
        let k2 = Family::Complete(2).build().unwrap();
        assert!(linegraph_charpoly_residual(&k2, 0.2, &[0.0]).is_err());
        let k4 = Family::Complete(4).build().unwrap();
        assert!(linegraph_charpoly_residual(&k4, 1.0, &[0.0]).is_err());
    }

    #[test]
    fn detects_a_wrong_identity() {
        // Comparing against a graph that is not the line graph must fail:
        // l(K_4) vs l(C_6) share order 6 but not spectra.
        let k4 = Family::Complete(4).build().unwrap();
        let c6 = Family::Cycle(6).build().unwrap();
        let a = a_alpha(&LineGraph::of(&k4).unwrap().graph, 0.3).unwrap();
        let b = a_alpha(&LineGraph::of(&c6).unwrap().graph, 0.3).unwrap();
        let x = 1.0;
        assert!((char_poly_eval(&a, x) - char_poly_eval(&b, x)).abs() > 1e-3);
    }

    #[test]
    fn incidence_examples() {
        for fam in [Family::Path(3), Family::Complete(4)] {
            let r = incidence_identity_residual(&fam.build().unwrap(), 0.4).unwrap();
            assert_eq!((r.btb, r.bbt), (0, 0));
            assert!(r.u_form < 1e-12);
        }
        let star = Family::Star(5).build().unwrap();
        let r = incidence_identity_residual(&star, 0.25).unwrap();
        assert!(r.u_form < 1e-12);
        assert!(r.u_diagonal.iter().all(|&u| u == 0.75));
    }

    #[test]
    fn sample_points_scale_with_max_degree() {
        let g = Family::Star(4).build().unwrap();
        assert_eq!(default_sample_points(&g), vec![-12.0, -4.0, 0.0, 4.0, 12.0]);
    }
}
