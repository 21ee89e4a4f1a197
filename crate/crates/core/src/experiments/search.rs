//! Witness search for bound-comparison predicates over graph streams.
//!
//! A search either returns the `(graph, α)` pairs where a predicate fails or,
//! when none fail and the whole source was covered, an exhaustion
//! certificate. Output order depends only on the source and the grid.

use std::fmt;
use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::format::{clean_alpha, edge_list_field, format_plain};
use crate::bounds::{
    line_path_threshold, lower_degree_based, lower_nikiforov, lower_zagreb_randic, tolerance,
    upper_bounds_ordering,
};
use crate::error::{Error, Result};
use crate::graph::{connected_graphs, gnp, gnp_connected, Graph, MAX_ENUMERATION_ORDER};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Predicate {
    /// Degree-based lower bound at least Nikiforov's; witnesses are pairs
    /// where it falls below by more than the tolerance.
    Bound10GeBound9,
    /// Degree-based vs Zagreb–Randić; witnesses record every strict
    /// ordering in either direction.
    Bound12VsBound10,
    /// Row-sum upper bound at most the degree-based upper bound.
    UpperOrdering,
    /// `λ₁(A_α(l(G))) < 2` exactly for paths.
    LinePathThreshold,
}

impl Predicate {
    pub const ALL: [Predicate; 4] = [
        Predicate::Bound10GeBound9,
        Predicate::Bound12VsBound10,
        Predicate::UpperOrdering,
        Predicate::LinePathThreshold,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Predicate::Bound10GeBound9 => "bound10_ge_bound9",
            Predicate::Bound12VsBound10 => "bound12_vs_bound10",
            Predicate::UpperOrdering => "upper_ordering",
            Predicate::LinePathThreshold => "line_path_threshold",
        }
    }

    pub fn parse(tag: &str) -> Option<Predicate> {
        Predicate::ALL.into_iter().find(|p| p.tag() == tag)
    }

    /// Random samples are redrawn until connected for these predicates.
    pub fn requires_connected(self) -> bool {
        !matches!(self, Predicate::Bound10GeBound9)
    }

    fn min_order(self) -> usize {
        match self {
            Predicate::Bound12VsBound10 => 3,
            _ => 2,
        }
    }

    /// Witnesses for one `(graph, α)` pair, as `(label, lhs, rhs)`.
    pub fn check(self, g: &Graph, alpha: f64) -> Result<Vec<(&'static str, f64, f64)>> {
        let mut out = Vec::new();
        match self {
            Predicate::Bound10GeBound9 => {
                let lhs = lower_degree_based(g, alpha)?;
                let rhs = lower_nikiforov(g.max_degree(), alpha)?;
                if lhs < rhs - tolerance(rhs) {
                    out.push((self.tag(), lhs, rhs));
                }
            }
            Predicate::Bound12VsBound10 => {
                let b12 = lower_zagreb_randic(g, alpha)?;
                let b10 = lower_degree_based(g, alpha)?;
                let tol = tolerance(b12.abs().max(b10.abs()));
                if b12 > b10 + tol {
                    out.push(("bound12_gt_bound10", b12, b10));
                } else if b10 > b12 + tol {
                    out.push(("bound10_gt_bound12", b10, b12));
                }
            }
            Predicate::UpperOrdering => {
                let o = upper_bounds_ordering(g, alpha)?;
                if !o.holds {
                    out.push((self.tag(), o.rowsum_upper, o.degree_based));
                }
            }
            Predicate::LinePathThreshold => {
                let t = line_path_threshold(g, alpha)?;
                if !t.agrees() {
                    out.push((self.tag(), t.lambda1, 2.0));
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Where the search draws graphs from.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphSource {
    /// Every connected graph on `2..=n_max` vertices up to isomorphism.
    Exhaustive { n_max: usize },
    /// `count` Erdős–Rényi samples; each draws `n` uniformly from
    /// `n_min..=n_max` and `p` from `{0.2, 0.5, 0.8}`.
    Random {
        count: usize,
        n_min: usize,
        n_max: usize,
        seed: u64,
    },
    /// Named graphs supplied by the caller.
    Listed(Vec<(String, Graph)>),
}

impl GraphSource {
    pub fn describe(&self) -> String {
        match self {
            GraphSource::Exhaustive { n_max } => format!("exhaustive connected n<={n_max}"),
            GraphSource::Random {
                count,
                n_min,
                n_max,
                seed,
            } => format!("random gnp count={count} n={n_min}..={n_max} seed={seed}"),
            GraphSource::Listed(v) => format!("listed ({} graphs)", v.len()),
        }
    }
}

/// Edge probabilities cycled through by [`GraphSource::Random`].
pub const RANDOM_EDGE_PROBABILITIES: [f64; 3] = [0.2, 0.5, 0.8];

/// Draws `count` seeded `G(n, p)` graphs, named `gnp_s<seed>_<index>`.
pub fn random_graphs(
    count: usize,
    n_min: usize,
    n_max: usize,
    seed: u64,
    connected: bool,
) -> Result<Vec<(String, Graph)>> {
    if n_min < 1 || n_min > n_max {
        return Err(Error::InvalidArgument(format!(
            "random order range {n_min}..={n_max} is empty"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(n_min..=n_max);
            let p = RANDOM_EDGE_PROBABILITIES[rng.gen_range(0..RANDOM_EDGE_PROBABILITIES.len())];
            let g = if connected {
                gnp_connected(n, p, &mut rng, 10_000)?
            } else {
                gnp(n, p, &mut rng)?
            };
            Ok((format!("gnp_s{seed}_{i}"), g))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchTask {
    pub predicate: Predicate,
    pub source: GraphSource,
    pub alphas: Vec<f64>,
    /// Maximum number of graphs examined.
    pub budget: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub label: String,
    pub graph_id: String,
    pub graph: Graph,
    pub alpha: f64,
    pub lhs: f64,
    pub rhs: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchOutcome {
    pub predicate: Predicate,
    pub source: String,
    pub alphas: Vec<f64>,
    pub witnesses: Vec<Witness>,
    pub graphs_examined: usize,
    /// False when the budget stopped the search before the source ran out.
    pub complete: bool,
}

impl SearchOutcome {
    /// No witnesses over the whole source.
    pub fn is_certificate(&self) -> bool {
        self.complete && self.witnesses.is_empty()
    }

    /// One-line human-readable summary.
    pub fn summary(&self) -> String {
        let status = match (self.witnesses.is_empty(), self.complete) {
            (true, true) => "exhaustion certificate",
            (true, false) => "partial certificate (budget exhausted)",
            (false, true) => "witnesses found",
            (false, false) => "witnesses found (budget exhausted)",
        };
        format!(
            "{}: {status}; {} witness(es); {} graph(s) examined; source: {}; alpha grid: {} point(s) {}..={}",
            self.predicate,
            self.witnesses.len(),
            self.graphs_examined,
            self.source,
            self.alphas.len(),
            format_plain(self.alphas[0]),
            format_plain(*self.alphas.last().expect("non-empty grid")),
        )
    }

    /// `predicate,graph_id,n,m,alpha,lhs,rhs,edge_list` in full precision.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record([
            "predicate",
            "graph_id",
            "n",
            "m",
            "alpha",
            "lhs",
            "rhs",
            "edge_list",
        ])?;
        for wt in &self.witnesses {
            w.write_record([
                wt.label.clone(),
                wt.graph_id.clone(),
                wt.graph.order().to_string(),
                wt.graph.size().to_string(),
                format_plain(wt.alpha),
                format_plain(wt.lhs),
                format_plain(wt.rhs),
                edge_list_field(wt.graph.edges()),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("CSV is UTF-8")
    }
}

fn exhaustive_graphs(n_max: usize, budget: usize) -> Result<(Vec<(String, Graph)>, bool)> {
    if n_max > MAX_ENUMERATION_ORDER {
        return Err(Error::InvalidArgument(format!(
            "exhaustive search is limited to n <= {MAX_ENUMERATION_ORDER}"
        )));
    }
    let mut out = Vec::new();
    for n in 2..=n_max {
        for (i, g) in connected_graphs(n)?.into_iter().enumerate() {
            if out.len() == budget {
                return Ok((out, false));
            }
            out.push((format!("c{n}_{i}"), g));
        }
    }
    Ok((out, true))
}

/// Runs the search; work items are evaluated in parallel and collected in
/// source order.
pub fn search(task: &SearchTask) -> Result<SearchOutcome> {
    if task.alphas.is_empty() {
        return Err(Error::InvalidArgument("empty alpha grid".into()));
    }
    for &a in &task.alphas {
        let ok = if task.predicate == Predicate::LinePathThreshold {
            (0.0..1.0).contains(&a)
        } else {
            (0.0..=1.0).contains(&a)
        };
        if !ok {
            return Err(Error::AlphaOutOfRange(a, "the predicate's alpha range"));
        }
    }
    let budget = task.budget.unwrap_or(usize::MAX);
    let connected = task.predicate.requires_connected();
    let (graphs, complete) = match &task.source {
        GraphSource::Exhaustive { n_max } => exhaustive_graphs(*n_max, budget)?,
        GraphSource::Random {
            count,
            n_min,
            n_max,
            seed,
        } => {
            let take = (*count).min(budget);
            (
                random_graphs(take, *n_min, *n_max, *seed, connected)?,
                take == *count,
            )
        }
        GraphSource::Listed(list) => {
            let take = list.len().min(budget);
            (list[..take].to_vec(), take == list.len())
        }
    };
    let min_order = task.predicate.min_order();
    let results: Vec<Result<Vec<Witness>>> = graphs
        .par_iter()
        .map(|(id, g)| {
            let mut found = Vec::new();
            if g.order() < min_order || g.size() == 0 || (connected && !g.is_connected()) {
                return Ok(found);
            }
            for &a in &task.alphas {
                for (label, lhs, rhs) in task.predicate.check(g, a)? {
                    found.push(Witness {
                        label: label.to_string(),
                        graph_id: id.clone(),
                        graph: g.clone(),
                        alpha: clean_alpha(a),
                        lhs,
                        rhs,
                    });
                }
            }
            Ok(found)
        })
        .collect();
    let mut witnesses = Vec::new();
    for r in results {
        witnesses.extend(r?);
    }
    Ok(SearchOutcome {
        predicate: task.predicate,
        source: task.source.describe(),
        alphas: task.alphas.clone(),
        witnesses,
        graphs_examined: graphs.len(),
        complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::format::alpha_grid;
    use crate::graph::Family;

    #[test]
    fn upper_ordering_small_exhaustive_is_empty() {
        let out = search(&SearchTask {
            predicate: Predicate::UpperOrdering,
            source: GraphSource::Exhaustive { n_max: 5 },
            alphas: alpha_grid(0.0, 1.01, 0.25).unwrap(),
            budget: None,
        })
        .unwrap();
        assert!(out.is_certificate(), "{}", out.summary());
        assert_eq!(out.graphs_examined, 1 + 2 + 6 + 21);
    }

    #[test]
    fn budget_marks_partial() {
        let out = search(&SearchTask {
            predicate: Predicate::UpperOrdering,
            source: GraphSource::Exhaustive { n_max: 5 },
            alphas: vec![0.5],
            budget: Some(4),
        })
        .unwrap();
        assert_eq!(out.graphs_examined, 4);
        assert!(!out.complete && !out.is_certificate());
        assert!(out.summary().contains("partial certificate"));
    }

    #[test]
    fn incomparability_on_listed_graphs() {
        let list = vec![
            ("P_50".to_string(), Family::Path(50).build().unwrap()),
            (
                "K_50^1".to_string(),
                Family::Pineapple(50, 1).build().unwrap(),
            ),
        ];
        let out = search(&SearchTask {
            predicate: Predicate::Bound12VsBound10,
            source: GraphSource::Listed(list),
            alphas: alpha_grid(0.0, 1.0, 0.1).unwrap(),
            budget: None,
        })
        .unwrap();
        let dirs: Vec<&str> = out.witnesses.iter().map(|w| w.label.as_str()).collect();
        assert!(dirs.contains(&"bound12_gt_bound10"));
        assert!(dirs.contains(&"bound10_gt_bound12"));
    }

    #[test]
    fn random_source_is_reproducible() {
        let task = SearchTask {
            predicate: Predicate::Bound10GeBound9,
            source: GraphSource::Random {
                count: 40,
                n_min: 3,
                n_max: 8,
                seed: 11,
            },
            alphas: alpha_grid(0.0, 1.01, 0.1).unwrap(),
            budget: None,
        };
        let a = search(&task).unwrap().to_csv_string();
        let b = search(&task).unwrap().to_csv_string();
        assert_eq!(a, b);
        assert!(a.starts_with("predicate,graph_id,n,m,alpha,lhs,rhs,edge_list\n"));
    }

    #[test]
    fn witnesses_revalidate() {
        // Isolated vertices (δ = 0) make the degree-based bound fall below
        // Nikiforov's.
        let g = Graph::from_edge_list(5, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let out = search(&SearchTask {
            predicate: Predicate::Bound10GeBound9,
            source: GraphSource::Listed(vec![("star_plus_isolated".into(), g)]),
            alphas: vec![0.0, 0.5],
            budget: None,
        })
        .unwrap();
        assert_eq!(out.witnesses.len(), 1);
        let w = &out.witnesses[0];
        assert_eq!(w.alpha, 0.5);
        assert_eq!(w.lhs, lower_degree_based(&w.graph, w.alpha).unwrap());
        assert_eq!(
            w.rhs,
            lower_nikiforov(w.graph.max_degree(), w.alpha).unwrap()
        );
        assert!(out.to_csv_string().contains(",5,3,0.5,"));
    }

    #[test]
    fn alpha_range_checked() {
        let task = SearchTask {
            predicate: Predicate::LinePathThreshold,
            source: GraphSource::Exhaustive { n_max: 3 },
            alphas: vec![1.0],
            budget: None,
        };
        assert!(search(&task).is_err());
        assert_eq!(
            Predicate::parse("upper_ordering"),
            Some(Predicate::UpperOrdering)
        );
    }
}
