//! Bounds on A_α eigenvalues of a graph and of its line graph.
//!
//! Every bound is a closed-form expression in `n`, `m`, `Δ`, `δ`, the degree
//! vector and, where noted, `λ₁(A_α(G))`. Only [`line_largest_sandwich`],
//! [`line_path_threshold`] and [`bound_report`] run the eigensolver.

use std::fmt;

use crate::error::{check_alpha, check_alpha_open, Error, Result};
use crate::graph::{Graph, LineGraph};
use crate::linalg::{a_alpha, spectrum, SymMatrix};

/// Comparison slack: `1e−9` for magnitudes up to `1e3`, relative `1e−12`
/// beyond.
pub fn tolerance(reference: f64) -> f64 {
    let r = reference.abs();
    if r <= 1e3 {
        1e-9
    } else {
        1e-12 * r
    }
}

/// `a ≤ b` up to [`tolerance`].
pub fn approx_le(a: f64, b: f64) -> bool {
    a <= b + tolerance(a.abs().max(b.abs()))
}

/// `a = b` up to [`tolerance`].
pub fn approx_eq(a: f64, b: f64) -> bool {
    (a - b).abs() <= tolerance(a.abs().max(b.abs()))
}

fn need_edges(g: &Graph) -> Result<()> {
    if g.size() == 0 {
        Err(Error::NoEdges)
    } else {
        Ok(())
    }
}

fn need_order(g: &Graph, min: usize, what: &str) -> Result<()> {
    if g.order() < min {
        Err(Error::InvalidArgument(format!(
            "{what} needs at least {min} vertices, got {}",
            g.order()
        )))
    } else {
        Ok(())
    }
}

/// `(α(Δ+1) + √(α²(Δ+1)² + 4Δ(1−2α)))/2`, a lower bound on λ₁ attained by
/// the star `K_{1,Δ}`.
pub fn lower_nikiforov(max_degree: usize, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if max_degree < 1 {
        return Err(Error::InvalidArgument(
            "maximum degree must be at least 1".into(),
        ));
    }
    let d = max_degree as f64;
    let disc = alpha * alpha * (d + 1.0).powi(2) + 4.0 * d * (1.0 - 2.0 * alpha);
    debug_assert!(disc >= 0.0);
    Ok((alpha * (d + 1.0) + disc.sqrt()) / 2.0)
}

fn degree_based(max_degree: f64, min_degree: f64, alpha: f64) -> f64 {
    let (dd, d) = (max_degree, min_degree);
    let disc = alpha * alpha * (dd - d).powi(2) + 4.0 * (1.0 - alpha).powi(2) * dd;
    (alpha * (dd + d) + disc.sqrt()) / 2.0
}

/// `(α(Δ+δ) + √(α²(Δ−δ)² + 4(1−α)²Δ))/2 ≤ λ₁(A_α(G))`, with equality on
/// stars.
pub fn lower_degree_based(g: &Graph, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    need_order(g, 2, "the degree-based lower bound")?;
    Ok(degree_based(
        g.max_degree() as f64,
        g.min_degree() as f64,
        alpha,
    ))
}

/// Lower bound combining the Zagreb estimate for the `α·D²` part with the
/// Randić estimate for the adjacency part; exact on regular graphs.
pub fn lower_zagreb_randic(g: &Graph, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    need_order(g, 3, "the Zagreb-Randić lower bound")?;
    need_edges(g)?;
    let (n, m) = (g.order() as f64, g.size() as f64);
    let (dmax, dmin) = (g.max_degree() as f64, g.min_degree() as f64);
    let zagreb = ((dmax * dmax + dmin * dmin) * (n - 2.0) + (2.0 * m - dmax - dmin).powi(2))
        / (2.0 * m * (n - 2.0));
    let denom = n * n * (2.0 * dmin * m + (n - 1.0) * (2.0 * m - n * dmin));
    let randic = 8.0 * m.powi(3) / denom;
    Ok(alpha * zagreb + (1.0 - alpha) * randic)
}

/// `√(αΔ² + (1−α)(Δ(δ−1) − δ(n−1) + 2m)) ≥ λ₁(A_α(G))`, equal on regular
/// graphs. A negative radicand is reported, never clamped.
pub fn upper_degree_based(g: &Graph, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    need_edges(g)?;
    let (n, m) = (g.order() as f64, g.size() as f64);
    let (dmax, dmin) = (g.max_degree() as f64, g.min_degree() as f64);
    let radicand =
        alpha * dmax * dmax + (1.0 - alpha) * (dmax * (dmin - 1.0) - dmin * (n - 1.0) + 2.0 * m);
    if radicand < 0.0 {
        return Err(Error::NegativeRadicand(radicand));
    }
    Ok(radicand.sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RowSumBounds {
    pub lower: f64,
    pub upper: f64,
    /// Lowest-index vertex attaining the lower value.
    pub argmin: usize,
    /// Lowest-index vertex attaining the upper value.
    pub argmax: usize,
}

/// Per-vertex radical `√(α·d(v)² + (1−α)·Σ_{u∼v} d(u))`.
pub fn rowsum_radicals(g: &Graph, alpha: f64) -> Result<Vec<f64>> {
    check_alpha(alpha)?;
    Ok((0..g.order())
        .map(|v| {
            let d = g.degree(v) as f64;
            let nb: usize = g.neighbors(v).iter().map(|&u| g.degree(u)).sum();
            (alpha * d * d + (1.0 - alpha) * nb as f64).sqrt()
        })
        .collect())
}

/// Minimum and maximum of [`rowsum_radicals`]; they bracket λ₁(A_α(G)).
pub fn rowsum_bounds(g: &Graph, alpha: f64) -> Result<RowSumBounds> {
    need_edges(g)?;
    let r = rowsum_radicals(g, alpha)?;
    let (mut argmin, mut argmax) = (0, 0);
    for (v, &x) in r.iter().enumerate() {
        if x < r[argmin] {
            argmin = v;
        }
        if x > r[argmax] {
            argmax = v;
        }
    }
    Ok(RowSumBounds {
        lower: r[argmin],
        upper: r[argmax],
        argmin,
        argmax,
    })
}

/// `max_i (b_ii + θ)/2 + √((b_ii − θ)²/4 + Σ_{j≠i} b_ij·b_ji)` with `θ` the
/// smallest diagonal entry; a lower bound on the spectral radius of a
/// non-negative matrix.
pub fn kolotilina_lower(m: &SymMatrix) -> Result<f64> {
    if m.order() < 2 {
        return Err(Error::InvalidArgument(
            "matrix order must be at least 2".into(),
        ));
    }
    if let Some((i, j)) = m.first_negative() {
        return Err(Error::NegativeEntry(i, j));
    }
    let n = m.order();
    let theta = (0..n).map(|i| m.get(i, i)).fold(f64::INFINITY, f64::min);
    Ok((0..n)
        .map(|i| {
            let bii = m.get(i, i);
            let off: f64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| m.get(i, j) * m.get(j, i))
                .sum();
            (bii + theta) / 2.0 + ((bii - theta).powi(2) / 4.0 + off).sqrt()
        })
        .fold(f64::NEG_INFINITY, f64::max))
}

/// Upper bound on λ₁(A_α(P_n)): `2α + 2(1−α)cos(π/(n+1))` for `α < 1/2`,
/// `2α + 2(1−α)cos(π/n)` otherwise.
pub fn pn_upper(n: usize, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if n < 2 {
        return Err(Error::InvalidArgument("path bound needs n >= 2".into()));
    }
    let denom = if alpha < 0.5 { n + 1 } else { n } as f64;
    Ok(2.0 * alpha + 2.0 * (1.0 - alpha) * (std::f64::consts::PI / denom).cos())
}

/// `2αδ(G) − 2 ≤ λ_m(A_α(l(G)))`, for `α ∈ [0, 1)`.
pub fn line_smallest_lower(g: &Graph, alpha: f64) -> Result<f64> {
    check_alpha_open(alpha)?;
    need_edges(g)?;
    Ok(2.0 * alpha * g.min_degree() as f64 - 2.0)
}

/// Whether the floor `2αδ − 2` is attained: regular `G` with `m > n` or
/// bipartite.
pub fn line_floor_attained(g: &Graph) -> bool {
    g.regularity().is_some() && (g.size() > g.order() || g.is_bipartite())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sandwich {
    pub lower: f64,
    pub upper: f64,
}

impl Sandwich {
    pub fn contains(&self, x: f64) -> bool {
        approx_le(self.lower, x) && approx_le(x, self.upper)
    }
}

/// Bracket for λ₁(A_α(l(G))) from a known `λ₁(A_α(G))`:
///
/// ```text
/// λ₁ + min_v (1−2α)d(v) − max_e u_e  ≤  λ₁(A_α(l(G)))  ≤  λ₁ + max_v (1−2α)d(v) − min_e u_e
/// ```
///
/// with `u_e = 2 − α(d(v_i) + d(v_j))`. For `α ≤ 1/2` the vertex terms are
/// `(1−2α)δ` and `(1−2α)Δ`; above 1/2 they swap.
pub fn line_sandwich_from(g: &Graph, alpha: f64, lambda1: f64) -> Result<Sandwich> {
    check_alpha(alpha)?;
    need_edges(g)?;
    let u: Vec<f64> = g
        .edges()
        .iter()
        .map(|&(a, b)| 2.0 - alpha * (g.degree(a) + g.degree(b)) as f64)
        .collect();
    let umax = u.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let umin = u.iter().copied().fold(f64::INFINITY, f64::min);
    let c = 1.0 - 2.0 * alpha;
    let (dmin, dmax) = (g.min_degree() as f64, g.max_degree() as f64);
    let (lo_term, hi_term) = if c >= 0.0 {
        (c * dmin, c * dmax)
    } else {
        (c * dmax, c * dmin)
    };
    Ok(Sandwich {
        lower: lambda1 + lo_term - umax,
        upper: lambda1 + hi_term - umin,
    })
}

/// [`line_sandwich_from`] with `λ₁(A_α(G))` computed by the eigensolver.
pub fn line_largest_sandwich(g: &Graph, alpha: f64) -> Result<Sandwich> {
    need_edges(g)?;
    let lambda1 = spectrum(&a_alpha(g, alpha)?)?.lambda1();
    line_sandwich_from(g, alpha, lambda1)
}

/// `2n − 4` for `i = 1`, `n(α+1) − 4` for `i ≥ 2`: caps on
/// `λ_i(A_α(l(G)))` for `G` on `n` vertices.
pub fn line_eigen_caps(n: usize, alpha: f64, i: usize) -> Result<f64> {
    check_alpha(alpha)?;
    if n < 2 || i < 1 {
        return Err(Error::InvalidArgument(
            "line caps need n >= 2 and i >= 1".into(),
        ));
    }
    let nf = n as f64;
    Ok(if i == 1 {
        2.0 * nf - 4.0
    } else {
        nf * (alpha + 1.0) - 4.0
    })
}

/// `(2α − 1, n(α+1) − 4)` bracketing `λ₂(A_α(l(G)))` for connected `G`
/// with `n ≥ 3`.
pub fn line_second_bounds(n: usize, alpha: f64) -> Result<Sandwich> {
    check_alpha(alpha)?;
    if n < 3 {
        return Err(Error::InvalidArgument(
            "second-eigenvalue bounds need n >= 3".into(),
        ));
    }
    Ok(Sandwich {
        lower: 2.0 * alpha - 1.0,
        upper: n as f64 * (alpha + 1.0) - 4.0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LowerOrdering {
    pub degree_based: f64,
    pub nikiforov: f64,
    /// `degree_based ≥ nikiforov` up to tolerance.
    pub holds: bool,
}

/// Both lower bounds on an `r`-regular degree profile.
pub fn compare_lower_bounds_regular(r: usize, alpha: f64) -> Result<LowerOrdering> {
    let nikiforov = lower_nikiforov(r, alpha)?;
    let degree_based = degree_based(r as f64, r as f64, alpha);
    Ok(LowerOrdering {
        degree_based,
        nikiforov,
        holds: approx_le(nikiforov, degree_based),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UpperOrdering {
    pub rowsum_upper: f64,
    pub degree_based: f64,
    /// `rowsum_upper ≤ degree_based` up to tolerance.
    pub holds: bool,
    pub equality: bool,
    /// Vertex attaining the row-sum maximum.
    pub maximizer: usize,
    pub maximizer_has_max_degree: bool,
}

pub fn upper_bounds_ordering(g: &Graph, alpha: f64) -> Result<UpperOrdering> {
    let rs = rowsum_bounds(g, alpha)?;
    let ub = upper_degree_based(g, alpha)?;
    Ok(UpperOrdering {
        rowsum_upper: rs.upper,
        degree_based: ub,
        holds: approx_le(rs.upper, ub),
        equality: approx_eq(rs.upper, ub),
        maximizer: rs.argmax,
        maximizer_has_max_degree: g.degree(rs.argmax) == g.max_degree(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathThreshold {
    pub lambda1: f64,
    /// `λ₁(A_α(l(G))) < 2`, with a `1e−9` margin so that exact 2 is not below.
    pub is_below_2: bool,
    pub is_path: bool,
}

impl PathThreshold {
    pub fn agrees(&self) -> bool {
        self.is_below_2 == self.is_path
    }
}

/// Classifies a connected graph by whether its line graph has A_α spectral
/// radius below 2, which should happen exactly for paths.
pub fn line_path_threshold(g: &Graph, alpha: f64) -> Result<PathThreshold> {
    check_alpha_open(alpha)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    need_edges(g)?;
    let lg = LineGraph::of(g)?;
    let lambda1 = spectrum(&a_alpha(&lg.graph, alpha)?)?.lambda1();
    Ok(PathThreshold {
        lambda1,
        is_below_2: lambda1 < 2.0 - 1e-9,
        is_path: g.is_path(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundId {
    Nikiforov,
    DegreeBased,
    ZagrebRandic,
    UpperDegreeBased,
    RowSumLower,
    RowSumUpper,
    Kolotilina,
    PathUpper,
    LineFloor,
    LineSandwichLower,
    LineSandwichUpper,
    LineCap,
    LineSecondLower,
    LineSecondUpper,
}

impl BoundId {
    pub const ALL: [BoundId; 14] = [
        BoundId::Nikiforov,
        BoundId::DegreeBased,
        BoundId::ZagrebRandic,
        BoundId::UpperDegreeBased,
        BoundId::RowSumLower,
        BoundId::RowSumUpper,
        BoundId::Kolotilina,
        BoundId::PathUpper,
        BoundId::LineFloor,
        BoundId::LineSandwichLower,
        BoundId::LineSandwichUpper,
        BoundId::LineCap,
        BoundId::LineSecondLower,
        BoundId::LineSecondUpper,
    ];

    /// Short tag used in CSV output.
    pub fn tag(self) -> &'static str {
        match self {
            BoundId::Nikiforov => "eq9",
            BoundId::DegreeBased => "eq10",
            BoundId::ZagrebRandic => "eq12",
            BoundId::UpperDegreeBased => "eq13",
            BoundId::RowSumLower => "rowsum_lo",
            BoundId::RowSumUpper => "rowsum_hi",
            BoundId::Kolotilina => "kolotilina",
            BoundId::PathUpper => "pn_upper",
            BoundId::LineFloor => "line_floor",
            BoundId::LineSandwichLower => "line_lo",
            BoundId::LineSandwichUpper => "line_hi",
            BoundId::LineCap => "line_cap",
            BoundId::LineSecondLower => "line_l2_lo",
            BoundId::LineSecondUpper => "line_l2_hi",
        }
    }

    pub fn parse(tag: &str) -> Option<BoundId> {
        BoundId::ALL.into_iter().find(|b| b.tag() == tag)
    }

    pub fn side(self) -> Side {
        match self {
            BoundId::Nikiforov
            | BoundId::DegreeBased
            | BoundId::ZagrebRandic
            | BoundId::RowSumLower
            | BoundId::Kolotilina
            | BoundId::LineFloor
            | BoundId::LineSandwichLower
            | BoundId::LineSecondLower => Side::Lower,
            _ => Side::Upper,
        }
    }

    pub fn target(self) -> Target {
        match self {
            BoundId::LineFloor => Target::LineSmallest,
            BoundId::LineSandwichLower | BoundId::LineSandwichUpper | BoundId::LineCap => {
                Target::LineLargest
            }
            BoundId::LineSecondLower | BoundId::LineSecondUpper => Target::LineSecond,
            _ => Target::GraphLargest,
        }
    }

    /// Evaluates the bound on `g`; `lambda1` is `λ₁(A_α(G))`, needed only by
    /// the line sandwich.
    pub fn evaluate(self, g: &Graph, alpha: f64, lambda1: f64) -> Result<f64> {
        match self {
            BoundId::Nikiforov => lower_nikiforov(g.max_degree(), alpha),
            BoundId::DegreeBased => lower_degree_based(g, alpha),
            BoundId::ZagrebRandic => lower_zagreb_randic(g, alpha),
            BoundId::UpperDegreeBased => upper_degree_based(g, alpha),
            BoundId::RowSumLower => rowsum_bounds(g, alpha).map(|r| r.lower),
            BoundId::RowSumUpper => rowsum_bounds(g, alpha).map(|r| r.upper),
            BoundId::Kolotilina => kolotilina_lower(&a_alpha(g, alpha)?),
            BoundId::PathUpper => {
                if g.is_path() {
                    pn_upper(g.order(), alpha)
                } else {
                    Err(Error::InvalidArgument(
                        "path bound applies to paths only".into(),
                    ))
                }
            }
            BoundId::LineFloor => line_smallest_lower(g, alpha),
            BoundId::LineSandwichLower => line_sandwich_from(g, alpha, lambda1).map(|s| s.lower),
            BoundId::LineSandwichUpper => line_sandwich_from(g, alpha, lambda1).map(|s| s.upper),
            BoundId::LineCap => {
                need_edges(g)?;
                line_eigen_caps(g.order(), alpha, 1)
            }
            BoundId::LineSecondLower | BoundId::LineSecondUpper => {
                if !g.is_connected() {
                    return Err(Error::Disconnected);
                }
                let s = line_second_bounds(g.order(), alpha)?;
                Ok(if self == BoundId::LineSecondLower {
                    s.lower
                } else {
                    s.upper
                })
            }
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lower,
    Upper,
}

impl Side {
    pub fn tag(self) -> &'static str {
        match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
        }
    }
}

/// Which eigenvalue a bound constrains.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    GraphLargest,
    LineLargest,
    LineSecond,
    LineSmallest,
}

impl Target {
    pub fn is_line_graph(self) -> bool {
        self != Target::GraphLargest
    }

    pub fn tag(self) -> &'static str {
        match self {
            Target::GraphLargest => "lambda1",
            Target::LineLargest => "line_lambda1",
            Target::LineSecond => "line_lambda2",
            Target::LineSmallest => "line_lambda_min",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundEntry {
    pub id: BoundId,
    pub value: f64,
    pub side: Side,
    pub target: Target,
    /// `|target eigenvalue − value|`.
    pub gap: f64,
}

/// Slack used by [`BoundReport::violations`].
pub const REPORT_SLACK: f64 = 1e-7;

/// Eigenvalues of `A_α(G)` and `A_α(l(G))` with every applicable bound.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub graph_id: String,
    pub alpha: f64,
    pub lambda1: f64,
    pub lambda_min: f64,
    pub line_lambda1: Option<f64>,
    pub line_lambda2: Option<f64>,
    pub line_lambda_min: Option<f64>,
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn target_value(&self, t: Target) -> Option<f64> {
        match t {
            Target::GraphLargest => Some(self.lambda1),
            Target::LineLargest => self.line_lambda1,
            Target::LineSecond => self.line_lambda2,
            Target::LineSmallest => self.line_lambda_min,
        }
    }

    pub fn entry(&self, id: BoundId) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// Entries on the wrong side of their target by more than
    /// [`REPORT_SLACK`].
    pub fn violations(&self) -> Vec<&BoundEntry> {
        self.entries
            .iter()
            .filter(|e| {
                let Some(t) = self.target_value(e.target) else {
                    return false;
                };
                match e.side {
                    Side::Lower => e.value > t + REPORT_SLACK,
                    Side::Upper => e.value < t - REPORT_SLACK,
                }
            })
            .collect()
    }
}

/// Builds a [`BoundReport`]; bounds whose preconditions fail on `g` (too
/// few vertices, not a path, α = 1 for the floor, …) are left out.
/// Numerical failures propagate.
pub fn bound_report(g: &Graph, alpha: f64, graph_id: &str) -> Result<BoundReport> {
    check_alpha(alpha)?;
    let s = spectrum(&a_alpha(g, alpha)?)?;
    let (line_lambda1, line_lambda2, line_lambda_min) = if g.size() > 0 {
        let ls = spectrum(&a_alpha(&LineGraph::of(g)?.graph, alpha)?)?;
        (Some(ls.lambda1()), ls.nth(2), Some(ls.lambda_min()))
    } else {
        (None, None, None)
    };
    let mut report = BoundReport {
        graph_id: graph_id.to_string(),
        alpha,
        lambda1: s.lambda1(),
        lambda_min: s.lambda_min(),
        line_lambda1,
        line_lambda2,
        line_lambda_min,
        entries: Vec::new(),
    };
    for id in BoundId::ALL {
        let value = match id.evaluate(g, alpha, report.lambda1) {
            Ok(v) => v,
            Err(e) if e.is_numerical() => return Err(e),
            Err(_) => continue,
        };
        let Some(t) = report.target_value(id.target()) else {
            continue;
        };
        report.entries.push(BoundEntry {
            id,
            value,
            side: id.side(),
            target: id.target(),
            gap: (t - value).abs(),
        });
    }
    Ok(report)
}
