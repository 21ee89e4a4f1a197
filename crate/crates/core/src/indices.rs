//! Degree-based topological indices.
//!
//! | index | definition |
//! |-------|------------|
//! | `Z1`  | `Σ_v d(v)²` |
//! | `Z2`  | `Σ_{uv ∈ E} d(u)·d(v)` |
//! | `Z^(p)` | `Σ_v d(v)^p`, `p ∉ {0, 1}` |
//! | `F`   | `Σ_v d(v)³` |
//! | `R_a` | `Σ_{uv ∈ E} (d(u)·d(v))^a`, `a ≠ 0` |
//!
//! Sums are accumulated pairwise.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexKind {
    Zagreb1,
    Zagreb2,
    GeneralZagreb,
    Forgotten,
    Randic,
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IndexKind::Zagreb1 => "Z1",
            IndexKind::Zagreb2 => "Z2",
            IndexKind::GeneralZagreb => "Z^(p)",
            IndexKind::Forgotten => "F",
            IndexKind::Randic => "R_a",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IndexValue {
    pub kind: IndexKind,
    /// Exponent `p` or `a` for the parametrised indices.
    pub parameter: Option<f64>,
    pub value: f64,
}

/// Pairwise (cascade) summation.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    const LEAF: usize = 32;
    if xs.len() <= LEAF {
        xs.iter().sum()
    } else {
        let (a, b) = xs.split_at(xs.len() / 2);
        pairwise_sum(a) + pairwise_sum(b)
    }
}

fn vertex_power_sum(g: &Graph, p: f64) -> f64 {
    let terms: Vec<f64> = g
        .degrees()
        .into_iter()
        .map(|d| (d as f64).powf(p))
        .collect();
    pairwise_sum(&terms)
}

fn edge_product_sum(g: &Graph, a: f64) -> f64 {
    let terms: Vec<f64> = g
        .edges()
        .iter()
        .map(|&(u, v)| ((g.degree(u) * g.degree(v)) as f64).powf(a))
        .collect();
    pairwise_sum(&terms)
}

fn reject_isolated(g: &Graph) -> Result<()> {
    match (0..g.order()).find(|&v| g.degree(v) == 0) {
        Some(v) => Err(Error::IsolatedVertex(v)),
        None => Ok(()),
    }
}

pub fn zagreb1(g: &Graph) -> IndexValue {
    IndexValue {
        kind: IndexKind::Zagreb1,
        parameter: None,
        value: vertex_power_sum(g, 2.0),
    }
}

pub fn zagreb2(g: &Graph) -> IndexValue {
    IndexValue {
        kind: IndexKind::Zagreb2,
        parameter: None,
        value: edge_product_sum(g, 1.0),
    }
}

pub fn forgotten(g: &Graph) -> IndexValue {
    IndexValue {
        kind: IndexKind::Forgotten,
        parameter: None,
        value: vertex_power_sum(g, 3.0),
    }
}

pub fn general_zagreb(g: &Graph, p: f64) -> Result<IndexValue> {
    if p == 0.0 || p == 1.0 || !p.is_finite() {
        return Err(Error::ExcludedExponent {
            index: "general Zagreb",
            exponent: p,
        });
    }
    if p < 0.0 {
        reject_isolated(g)?;
    }
    Ok(IndexValue {
        kind: IndexKind::GeneralZagreb,
        parameter: Some(p),
        value: vertex_power_sum(g, p),
    })
}

pub fn randic(g: &Graph, a: f64) -> Result<IndexValue> {
    if a == 0.0 || !a.is_finite() {
        return Err(Error::ExcludedExponent {
            index: "general Randić",
            exponent: a,
        });
    }
    if a < 0.0 {
        reject_isolated(g)?;
    }
    Ok(IndexValue {
        kind: IndexKind::Randic,
        parameter: Some(a),
        value: edge_product_sum(g, a),
    })
}

/// Lower bound `Δ² + δ² + (2m − Δ − δ)²/(n − 2)` on `Z1`, for `n ≥ 3`.
pub fn zagreb1_lower_bound(n: usize, m: usize, max_deg: usize, min_deg: usize) -> f64 {
    let (n, m, dmax, dmin) = (n as f64, m as f64, max_deg as f64, min_deg as f64);
    dmax * dmax + dmin * dmin + (2.0 * m - dmax - dmin).powi(2) / (n - 2.0)
}

/// Upper bound `2mn − n(n−1)δ + 2m(δ − 1)` on `Z1` for connected graphs.
pub fn zagreb1_upper_bound(n: usize, m: usize, min_deg: usize) -> f64 {
    let (n, m, dmin) = (n as f64, m as f64, min_deg as f64);
    2.0 * m * n - n * (n - 1.0) * dmin + 2.0 * m * (dmin - 1.0)
}
