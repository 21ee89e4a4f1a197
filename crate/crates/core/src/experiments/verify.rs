//! Named invariant checks on a single graph, for the `verify` command.

use crate::bounds::{
    bound_report, line_eigen_caps, line_floor_attained, line_path_threshold, line_second_bounds,
    line_smallest_lower, upper_bounds_ordering,
};
use crate::error::Result;
use crate::graph::{Graph, LineGraph};
use crate::indices::{forgotten, randic, zagreb1, zagreb1_lower_bound, zagreb1_upper_bound};
use crate::linalg::{
    a_alpha, adjacency, closed_form_spectrum, default_sample_points, degree_matrix,
    incidence_identity_residual, linegraph_charpoly_residual, row_sums_of_power,
    signless_laplacian, spectrum, ClosedForm,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, ok: bool, detail: impl Into<String>) -> Check {
        Check {
            name,
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    fn skip(name: &'static str, why: impl Into<String>) -> Check {
        Check {
            name,
            status: Status::Skip,
            detail: why.into(),
        }
    }

    pub fn line(&self) -> String {
        let s = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        format!("{s} {}: {}", self.name, self.detail)
    }
}

const SLACK: f64 = 1e-7;

/// Runs every applicable check at each α in `alphas`. Checks whose
/// preconditions do not hold are reported as skipped; solver failures are
/// returned as errors.
pub fn verify_graph(g: &Graph, alphas: &[f64]) -> Result<Vec<Check>> {
    let n = g.order();
    let m = g.size();
    let mut out = Vec::new();

    let deg_sum: usize = g.degrees().iter().sum();
    out.push(Check::new(
        "handshake",
        deg_sum == 2 * m,
        format!("sum of degrees {deg_sum}, 2m = {}", 2 * m),
    ));

    let endpoints = a_alpha(g, 0.0)? == adjacency(g)
        && a_alpha(g, 1.0)? == degree_matrix(g)
        && a_alpha(g, 0.5)? == signless_laplacian(g).scaled(0.5);
    out.push(Check::new(
        "a_alpha_endpoints",
        endpoints,
        "A_0 = A, A_1 = D, A_1/2 = Q/2",
    ));

    let lg = if m > 0 { Some(LineGraph::of(g)?) } else { None };

    for &alpha in alphas {
        let ma = a_alpha(g, alpha)?;
        let s = spectrum(&ma)?;

        let trace = s.sum();
        let want = alpha * 2.0 * m as f64;
        out.push(Check::new(
            "trace_law",
            (trace - want).abs() <= 1e-8 * (n as f64).max(1.0) * want.abs().max(1.0),
            format!("alpha={alpha}: eigenvalue sum {trace:.10}, alpha*2m {want}"),
        ));

        let s1 = row_sums_of_power(&ma, 1)?;
        let s2 = row_sums_of_power(&ma, 2)?;
        let rows_ok = (0..n).all(|v| {
            let d = g.degree(v) as f64;
            let nb: usize = g.neighbors(v).iter().map(|&u| g.degree(u)).sum();
            (s1[v] - d).abs() < 1e-9
                && (s2[v] - (alpha * d * d + (1.0 - alpha) * nb as f64)).abs()
                    < 1e-9 * d.max(1.0).powi(2)
        });
        out.push(Check::new("row_sums", rows_ok, format!("alpha={alpha}")));

        if n >= 2 && !g.is_complete() {
            let l2 = s.nth(2).expect("order >= 2");
            out.push(Check::new(
                "lambda2_nonnegative",
                l2 >= -1e-8,
                format!("alpha={alpha}: lambda2 = {l2:.10}"),
            ));
        }

        if let Some(r) = g.regularity() {
            let sa = spectrum(&adjacency(g))?;
            let worst = s
                .eigenvalues()
                .iter()
                .zip(sa.eigenvalues())
                .map(|(x, y)| (x - (alpha * r as f64 + (1.0 - alpha) * y)).abs())
                .fold(0.0, f64::max);
            out.push(Check::new(
                "regular_correspondence",
                worst < SLACK,
                format!("alpha={alpha}: max deviation {worst:.3e}"),
            ));
        }

        let report = bound_report(g, alpha, "input")?;
        let v = report.violations();
        out.push(Check::new(
            "bound_sandwich",
            v.is_empty(),
            if v.is_empty() {
                format!("alpha={alpha}: {} bounds hold", report.entries.len())
            } else {
                format!(
                    "alpha={alpha}: violated {}",
                    v.iter().map(|e| e.id.tag()).collect::<Vec<_>>().join(", ")
                )
            },
        ));

        if m > 0 && g.is_connected() {
            let o = upper_bounds_ordering(g, alpha)?;
            out.push(Check::new(
                "upper_ordering",
                o.holds,
                format!(
                    "alpha={alpha}: rowsum {:.10} <= degree-based {:.10}",
                    o.rowsum_upper, o.degree_based
                ),
            ));
        }

        let Some(lg) = &lg else { continue };
        let inc = incidence_identity_residual(g, alpha)?;
        out.push(Check::new(
            "incidence_identities",
            inc.btb == 0 && inc.bbt == 0 && inc.u_form <= 1e-12,
            format!(
                "alpha={alpha}: BtB {}, BBt {}, U form {:.3e}",
                inc.btb, inc.bbt, inc.u_form
            ),
        ));

        let ls = spectrum(&a_alpha(&lg.graph, alpha)?)?;
        let caps_ok = ls.lambda1() <= line_eigen_caps(n.max(2), alpha, 1)? + SLACK
            && (2..=ls.len()).all(|i| {
                ls.nth(i).expect("in range")
                    <= line_eigen_caps(n.max(2), alpha, i).expect("valid") + SLACK
            });
        out.push(Check::new(
            "line_caps",
            caps_ok,
            format!("alpha={alpha}: line lambda1 = {:.10}", ls.lambda1()),
        ));

        if alpha < 1.0 {
            let floor = line_smallest_lower(g, alpha)?;
            let lm = ls.lambda_min();
            out.push(Check::new(
                "line_floor",
                lm >= floor - SLACK,
                format!("alpha={alpha}: line lambda_min {lm:.10} >= {floor}"),
            ));
            if g.regularity().is_some() {
                let attained = (lm - floor).abs() < SLACK;
                out.push(Check::new(
                    "line_floor_equality",
                    attained == line_floor_attained(g),
                    format!(
                        "alpha={alpha}: attained {attained}, predicted {}",
                        line_floor_attained(g)
                    ),
                ));
            }
        }

        if g.is_connected() && n >= 3 {
            let b = line_second_bounds(n, alpha)?;
            let l2 = ls.nth(2).expect("connected n >= 3 has m >= 2");
            out.push(Check::new(
                "line_second_bounds",
                l2 >= b.lower - SLACK && l2 <= b.upper + SLACK,
                format!("alpha={alpha}: {} <= {l2:.10} <= {}", b.lower, b.upper),
            ));
        }

        if g.is_connected() && alpha < 1.0 {
            let t = line_path_threshold(g, alpha)?;
            out.push(Check::new(
                "line_path_threshold",
                t.agrees(),
                format!(
                    "alpha={alpha}: line lambda1 {:.10}, path {}",
                    t.lambda1, t.is_path
                ),
            ));
        }

        match g.regularity() {
            Some(r) if r >= 2 && alpha < 1.0 => {
                let res = linegraph_charpoly_residual(g, alpha, &default_sample_points(g))?;
                out.push(Check::new(
                    "charpoly_identities",
                    res.max() < 1e-6,
                    format!("alpha={alpha}: max residual {:.3e}", res.max()),
                ));
                let q = spectrum(&signless_laplacian(g))?;
                let cf = closed_form_spectrum(
                    &ClosedForm::RegularLineFromQ {
                        r,
                        n,
                        m,
                        q: q.eigenvalues().to_vec(),
                    },
                    alpha,
                )?;
                let worst = cf
                    .eigenvalues()
                    .iter()
                    .zip(ls.eigenvalues())
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max);
                out.push(Check::new(
                    "regular_line_spectrum",
                    worst < SLACK,
                    format!("alpha={alpha}: max deviation {worst:.3e}"),
                ));
            }
            Some(_) => out.push(Check::skip(
                "charpoly_identities",
                format!("alpha={alpha}: needs r >= 2 and alpha < 1"),
            )),
            None => {}
        }
    }

    if let Some(lg) = &lg {
        let lgg = &lg.graph;
        let sq: usize = g.degrees().iter().map(|d| d * d).sum();
        out.push(Check::new(
            "line_size_law",
            lgg.order() == m && 2 * lgg.size() == sq - 2 * m,
            format!("l(G) has {} vertices and {} edges", lgg.order(), lgg.size()),
        ));
        let deg_ok = lg
            .source_edges
            .iter()
            .enumerate()
            .all(|(k, &(u, v))| lgg.degree(k) + 2 == g.degree(u) + g.degree(v));
        out.push(Check::new(
            "line_degree_law",
            deg_ok,
            "d(e) = d(u) + d(v) - 2",
        ));
        let la = spectrum(&adjacency(lgg))?;
        out.push(Check::new(
            "line_adjacency_floor",
            la.lambda_min() >= -2.0 - 1e-8,
            format!(
                "smallest adjacency eigenvalue of l(G) {:.10}",
                la.lambda_min()
            ),
        ));
    }

    if n >= 2 {
        let host = spectrum(&adjacency(g))?;
        let mut ok = true;
        for v in 0..n {
            let h = spectrum(&adjacency(&g.delete_vertex(v)?))?;
            for i in 1..n {
                let hi = h.nth(i).expect("in range");
                ok &= host.nth(i + 1).expect("in range") <= hi + 1e-8
                    && hi <= host.nth(i).expect("in range") + 1e-8;
            }
        }
        out.push(Check::new(
            "interlacing",
            ok,
            format!("{n} vertex deletions"),
        ));
    }

    if m > 0 {
        let z1 = zagreb1(g).value;
        let mut ok = forgotten(g).value >= z1 * z1 / (2.0 * m as f64) - 1e-9 * z1.max(1.0);
        let (dmax, dmin) = (g.max_degree(), g.min_degree());
        if n >= 3 {
            ok &= z1 >= zagreb1_lower_bound(n, m, dmax, dmin) - 1e-9 * z1;
        }
        if g.is_connected() {
            ok &= z1 <= zagreb1_upper_bound(n, m, dmin) + 1e-9 * z1;
        }
        for a in [1.0, 2.0] {
            let ra = randic(g, a)?.value;
            let b = 4f64.powf(a) * (n as f64).powf(-2.0 * a) * (m as f64).powf(1.0 + 2.0 * a);
            ok &= ra >= b - 1e-9 * b.max(1.0);
        }
        out.push(Check::new("index_bounds", ok, format!("Z1 = {z1}")));
    }

    Ok(out)
}
