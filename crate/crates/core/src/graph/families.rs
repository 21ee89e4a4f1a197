use std::fmt;

use super::Graph;
use crate::error::{Error, Result};

/// Parametric graph families.
///
/// Labeling conventions (all 0-indexed):
/// - `Path(n)`: `0 − 1 − … − (n−1)`.
/// - `Cycle(n)`: path plus `{n−1, 0}`.
/// - `CompleteBipartite(a, b)`: parts `0..a` and `a..a+b`.
/// - `Star(n)`: `K_{1,n−1}` with center `0`.
/// - `Wheel(n)`: hub `0`, rim cycle on `1..n`.
/// - `Pineapple(p, q)`: `K_p` on `0..p`, pendants `p..p+q` all attached to `0`.
/// - `BinomialTree(k)`: `2^k` vertices; `BT_k` is two copies of `BT_{k−1}`
///   on `0..2^{k−1}` and `2^{k−1}..2^k` joined by the edge between their roots
///   (`0` and `2^{k−1}`), so the root `0` ends with degree `k`.
/// - `Helm(n)`: `Wheel(n)` plus a pendant `n − 1 + i` on each rim vertex `i`.
/// - `Windmill(copies, k)`: `copies` cliques `K_k` sharing only vertex `0`.
/// - `Petersen`: outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i − (i+5)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Wheel(usize),
    Pineapple(usize, usize),
    BinomialTree(u32),
    Helm(usize),
    Windmill(usize, usize),
    Petersen,
}

fn invalid(family: &'static str, constraint: &str) -> Error {
    Error::InvalidFamily {
        family,
        constraint: constraint.to_string(),
    }
}

impl Family {
    /// Family from a textual tag and its integer parameters, as used by the
    /// CLI and the CSV outputs.
    pub fn parse(kind: &str, params: &[usize]) -> Result<Family> {
        let want = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidArgument(format!(
                    "family {kind} takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let fam = match kind {
            "path" => {
                want(1)?;
                Family::Path(params[0])
            }
            "cycle" => {
                want(1)?;
                Family::Cycle(params[0])
            }
            "complete" => {
                want(1)?;
                Family::Complete(params[0])
            }
            "complete_bipartite" => {
                want(2)?;
                Family::CompleteBipartite(params[0], params[1])
            }
            "star" => {
                want(1)?;
                Family::Star(params[0])
            }
            "wheel" => {
                want(1)?;
                Family::Wheel(params[0])
            }
            "pineapple" => {
                want(2)?;
                Family::Pineapple(params[0], params[1])
            }
            "binomial_tree" => {
                want(1)?;
                let k = u32::try_from(params[0])
                    .map_err(|_| invalid("binomial_tree", "k too large"))?;
                Family::BinomialTree(k)
            }
            "helm" => {
                want(1)?;
                Family::Helm(params[0])
            }
            "windmill" => {
                want(2)?;
                Family::Windmill(params[0], params[1])
            }
            "petersen" => {
                want(0)?;
                Family::Petersen
            }
            other => {
                return Err(Error::InvalidArgument(format!("unknown family {other}")));
            }
        };
        fam.validate()?;
        Ok(fam)
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Complete(_) => "complete",
            Family::CompleteBipartite(..) => "complete_bipartite",
            Family::Star(_) => "star",
            Family::Wheel(_) => "wheel",
            Family::Pineapple(..) => "pineapple",
            Family::BinomialTree(_) => "binomial_tree",
            Family::Helm(_) => "helm",
            Family::Windmill(..) => "windmill",
            Family::Petersen => "petersen",
        }
    }

    /// Parameters joined with `x`, e.g. `99x1` for `K_99^1`.
    pub fn param_string(&self) -> String {
        match *self {
            Family::Path(n)
            | Family::Cycle(n)
            | Family::Complete(n)
            | Family::Star(n)
            | Family::Wheel(n)
            | Family::Helm(n) => n.to_string(),
            Family::BinomialTree(k) => k.to_string(),
            Family::CompleteBipartite(a, b) | Family::Pineapple(a, b) | Family::Windmill(a, b) => {
                format!("{a}x{b}")
            }
            Family::Petersen => String::new(),
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            Family::Path(n)
            | Family::Cycle(n)
            | Family::Complete(n)
            | Family::Star(n)
            | Family::Wheel(n) => n,
            Family::CompleteBipartite(a, b) | Family::Pineapple(a, b) => a + b,
            Family::BinomialTree(k) => 1usize << k,
            Family::Helm(n) => 2 * n - 1,
            Family::Windmill(c, k) => 1 + c * (k - 1),
            Family::Petersen => 10,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Family::Path(n) if n < 1 => Err(invalid("path", "n >= 1")),
            Family::Cycle(n) if n < 3 => Err(invalid("cycle", "n >= 3")),
            Family::Complete(n) if n < 1 => Err(invalid("complete", "n >= 1")),
            Family::CompleteBipartite(a, b) if a < 1 || b < 1 => {
                Err(invalid("complete_bipartite", "n1 >= 1 and n2 >= 1"))
            }
            Family::Star(n) if n < 2 => Err(invalid("star", "n >= 2")),
            Family::Wheel(n) if n < 4 => Err(invalid("wheel", "n >= 4")),
            Family::Pineapple(p, q) if p < 3 || q < 1 => {
                Err(invalid("pineapple", "p >= 3 and q >= 1"))
            }
            Family::BinomialTree(k) if k > 24 => Err(invalid("binomial_tree", "k <= 24")),
            Family::Helm(n) if n < 4 => Err(invalid("helm", "n >= 4")),
            Family::Windmill(c, k) if c < 1 || k < 2 => {
                Err(invalid("windmill", "copies >= 1 and k >= 2"))
            }
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        let n = self.order();
        let mut e: Vec<(usize, usize)> = Vec::new();
        match *self {
            Family::Path(n) => e.extend((1..n).map(|i| (i - 1, i))),
            Family::Cycle(n) => {
                e.extend((1..n).map(|i| (i - 1, i)));
                e.push((n - 1, 0));
            }
            Family::Complete(n) => clique(&mut e, &(0..n).collect::<Vec<_>>()),
            Family::CompleteBipartite(a, b) => {
                for u in 0..a {
                    e.extend((a..a + b).map(|v| (u, v)));
                }
            }
            Family::Star(n) => e.extend((1..n).map(|i| (0, i))),
            Family::Wheel(n) => wheel(&mut e, n),
            Family::Pineapple(p, q) => {
                clique(&mut e, &(0..p).collect::<Vec<_>>());
                e.extend((p..p + q).map(|v| (0, v)));
            }
            Family::BinomialTree(k) => {
                for level in 0..k {
                    let half = 1usize << level;
                    let existing = e.len();
                    for i in 0..existing {
                        let (u, v) = e[i];
                        e.push((u + half, v + half));
                    }
                    e.push((0, half));
                }
            }
            Family::Helm(n) => {
                wheel(&mut e, n);
                e.extend((1..n).map(|i| (i, n - 1 + i)));
            }
            Family::Windmill(c, k) => {
                for copy in 0..c {
                    let mut verts = vec![0];
                    verts.extend((0..k - 1).map(|j| 1 + copy * (k - 1) + j));
                    clique(&mut e, &verts);
                }
            }
            Family::Petersen => {
                for i in 0..5 {
                    e.push((i, (i + 1) % 5));
                    e.push((5 + i, 5 + (i + 2) % 5));
                    e.push((i, i + 5));
                }
            }
        }
        Graph::from_edge_list(n, e)
    }

    /// A spread of small instances of every family, used as a test corpus.
    pub fn sample_corpus() -> Vec<Family> {
        let mut out = Vec::new();
        for n in 1..=12 {
            out.push(Family::Path(n));
            out.push(Family::Complete(n));
        }
        for n in 3..=12 {
            out.push(Family::Cycle(n));
        }
        for n in 2..=12 {
            out.push(Family::Star(n));
        }
        for n in 4..=10 {
            out.push(Family::Wheel(n));
            out.push(Family::Helm(n));
        }
        for a in 1..=5 {
            for b in a..=5 {
                out.push(Family::CompleteBipartite(a, b));
            }
        }
        for p in 3..=7 {
            for q in 1..=3 {
                out.push(Family::Pineapple(p, q));
            }
        }
        for k in 0..=4 {
            out.push(Family::BinomialTree(k));
        }
        for c in 1..=3 {
            for k in 2..=4 {
                out.push(Family::Windmill(c, k));
            }
        }
        out.push(Family::Petersen);
        out
    }
}

fn clique(e: &mut Vec<(usize, usize)>, verts: &[usize]) {
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            e.push((u, v));
        }
    }
}

fn wheel(e: &mut Vec<(usize, usize)>, n: usize) {
    let rim = n - 1;
    for i in 1..n {
        e.push((0, i));
        e.push((i, i % rim + 1));
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path(n) => write!(f, "P_{n}"),
            Family::Cycle(n) => write!(f, "C_{n}"),
            Family::Complete(n) => write!(f, "K_{n}"),
            Family::CompleteBipartite(a, b) => write!(f, "K_{{{a},{b}}}"),
            Family::Star(n) => write!(f, "K_{{1,{}}}", n - 1),
            Family::Wheel(n) => write!(f, "W_{n}"),
            Family::Pineapple(p, q) => write!(f, "K_{p}^{q}"),
            Family::BinomialTree(k) => write!(f, "BT_{k}"),
            Family::Helm(n) => write!(f, "H_{n}"),
            Family::Windmill(c, k) => write!(f, "W({c},{k})"),
            Family::Petersen => write!(f, "Petersen"),
        }
    }
}
