//! Isomorphism-free enumeration of small graphs.
//!
//! Graphs on `k` vertices are grown from the graphs on `k − 1` vertices by
//! adding one vertex with every possible neighborhood, then deduplicated by a
//! canonical code. The canonical code is the lexicographically smallest
//! adjacency bit string over all labelings reachable by
//! individualization-refinement (colour refinement, then branching on the
//! first non-singleton cell).

use std::collections::HashSet;

use super::Graph;
use crate::error::{Error, Result};

/// Largest order accepted by the enumerator (there are ~12 million graphs on
/// 10 vertices; beyond that the in-memory approach is pointless).
pub const MAX_ENUMERATION_ORDER: usize = 10;

/// Canonical form of a graph on at most [`MAX_ENUMERATION_ORDER`] vertices.
/// Bit `j(j−1)/2 + i` is set when `i < j` are adjacent after canonical relabeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    pub n: u8,
    pub bits: u64,
}

impl CanonicalCode {
    pub fn of(g: &Graph) -> Result<Self> {
        let n = g.order();
        check_order(n)?;
        let mut adj = [0u16; MAX_ENUMERATION_ORDER];
        for &(u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(canonical(&adj[..n]))
    }

    pub fn to_graph(&self) -> Graph {
        let n = self.n as usize;
        let mut pairs = Vec::new();
        for j in 1..n {
            for i in 0..j {
                if self.bits >> pair_bit(i, j) & 1 == 1 {
                    pairs.push((i, j));
                }
            }
        }
        Graph::from_edge_list(n, pairs).expect("canonical code encodes a simple graph")
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        Err(Error::InvalidArgument(format!(
            "enumeration order must be in 1..={MAX_ENUMERATION_ORDER}, got {n}"
        )))
    } else {
        Ok(())
    }
}

#[inline]
fn pair_bit(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

fn code_for(adj: &[u16], label: &[u32]) -> u64 {
    let mut bits = 0u64;
    for (u, &row) in adj.iter().enumerate() {
        let lu = label[u] as usize;
        let mut rest = row & !((1u16 << (u + 1)) - 1);
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let lv = label[v] as usize;
            bits |= 1 << pair_bit(lu.min(lv), lu.max(lv));
        }
    }
    bits
}

/// Colour refinement to the coarsest equitable partition finer than `colors`.
/// Colours are renumbered `0..k` by sorted signature, which keeps them
/// independent of the vertex labeling.
fn refine(adj: &[u16], colors: &mut [u32]) {
    let n = adj.len();
    let mut distinct = count_distinct(colors);
    loop {
        let mut sigs: Vec<(u32, Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = (0..n)
                    .filter(|&w| adj[v] >> w & 1 == 1)
                    .map(|w| colors[w])
                    .collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut rank = 0u32;
        for i in 0..n {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                rank += 1;
            }
            colors[sigs[i].2] = rank;
        }
        let now = rank as usize + 1;
        if now == distinct {
            return;
        }
        distinct = now;
    }
}

fn count_distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn search(adj: &[u16], mut colors: Vec<u32>, best: &mut Option<u64>) {
    refine(adj, &mut colors);
    let n = adj.len();
    // First non-singleton cell in colour order.
    let mut sizes = vec![0usize; n];
    for &c in &colors {
        sizes[c as usize] += 1;
    }
    let target = match sizes.iter().position(|&s| s > 1) {
        None => {
            let code = code_for(adj, &colors);
            if best.is_none_or(|b| code < b) {
                *best = Some(code);
            }
            return;
        }
        Some(c) => c as u32,
    };
    for v in 0..n {
        if colors[v] != target {
            continue;
        }
        let child: Vec<u32> = colors
            .iter()
            .enumerate()
            .map(|(w, &c)| 2 * c + u32::from(c == target && w != v))
            .collect();
        search(adj, child, best);
    }
}

fn canonical(adj: &[u16]) -> CanonicalCode {
    let n = adj.len();
    let mut best = None;
    search(adj, vec![0; n], &mut best);
    CanonicalCode {
        n: n as u8,
        bits: best.unwrap_or(0),
    }
}

fn decode(code: &CanonicalCode) -> Vec<u16> {
    let n = code.n as usize;
    let mut adj = vec![0u16; n];
    for j in 1..n {
        for i in 0..j {
            if code.bits >> pair_bit(i, j) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

/// All graphs on exactly `n` vertices up to isomorphism, sorted by code.
pub fn graphs_up_to_iso(n: usize) -> Result<Vec<CanonicalCode>> {
    check_order(n)?;
    let mut level = vec![CanonicalCode { n: 1, bits: 0 }];
    for k in 2..=n {
        let mut next = HashSet::new();
        for code in &level {
            let base = decode(code);
            for mask in 0u16..(1 << (k - 1)) {
                let mut adj = base.clone();
                adj.push(mask);
                for (v, row) in adj.iter_mut().enumerate().take(k - 1) {
                    if mask >> v & 1 == 1 {
                        *row |= 1 << (k - 1);
                    }
                }
                next.insert(canonical(&adj));
            }
        }
        level = next.into_iter().collect();
        level.sort_unstable();
    }
    Ok(level)
}

/// Connected graphs on exactly `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(graphs_up_to_iso(n)?
        .iter()
        .map(CanonicalCode::to_graph)
        .filter(Graph::is_connected)
        .collect())
}
