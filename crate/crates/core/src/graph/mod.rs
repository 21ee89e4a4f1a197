//! Simple undirected graphs on vertices `0..n`.
//!
//! A [`Graph`] is immutable once built. Edges are stored as ordered pairs
//! `(u, v)` with `u < v`, sorted lexicographically; the position of an edge
//! in that list is its edge index, which is also the vertex label it gets in
//! the line graph.

mod enumerate;
mod families;
mod io;
mod random;

pub use enumerate::{connected_graphs, graphs_up_to_iso, CanonicalCode, MAX_ENUMERATION_ORDER};
pub use families::Family;
pub use io::{parse_edge_list, read_edge_list, write_edge_list};
pub use random::{gnp, gnp_connected};

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// An unordered vertex pair stored with the smaller endpoint first.
pub type Edge = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from vertex pairs, dropping duplicate and reversed
    /// copies of the same pair.
    pub fn from_edge_list<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let mut edges = Vec::new();
        for (u, v) in pairs {
            if u >= n || v >= n {
                return Err(Error::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self::from_sorted(n, edges))
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_edge_list(n, std::iter::empty())
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            adjacency,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Index of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adjacency.iter().any(Vec::is_empty)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile::of(self)
    }

    /// `G − e`: same vertex set, one edge fewer.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let idx = self.edge_index(u, v).ok_or(Error::EdgeNotFound(u, v))?;
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Ok(Self::from_sorted(self.n, edges))
    }

    /// Induced subgraph on `keep` (relabelled to `0..keep.len()` in the given order).
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Graph> {
        let mut label = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            if old >= self.n {
                return Err(Error::EndpointOutOfRange {
                    u: old,
                    v: old,
                    n: self.n,
                });
            }
            label[old] = new;
        }
        let pairs = self
            .edges
            .iter()
            .filter(|&&(u, v)| label[u] != usize::MAX && label[v] != usize::MAX)
            .map(|&(u, v)| (label[u], label[v]));
        Graph::from_edge_list(keep.len(), pairs)
    }

    /// `G − v` for a single vertex, keeping the remaining vertices in order.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        let keep: Vec<usize> = (0..self.n).filter(|&w| w != v).collect();
        self.induced_subgraph(&keep)
    }

    pub fn structure_flags(&self) -> StructureFlags {
        StructureFlags {
            connected: self.is_connected(),
            regular: self.regularity(),
            bipartite: self.is_bipartite(),
        }
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Common degree `r` when every vertex has the same degree.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.max_degree();
        (self.min_degree() == d).then_some(d)
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                let s = side[v].unwrap();
                for &w in &self.adjacency[v] {
                    match side[w] {
                        None => {
                            side[w] = Some(!s);
                            queue.push_back(w);
                        }
                        Some(t) if t == s => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// True when the graph is a path `P_n` (a single vertex counts as `P_1`).
    pub fn is_path(&self) -> bool {
        if self.size() + 1 != self.n || !self.is_connected() {
            return false;
        }
        self.adjacency.iter().all(|a| a.len() <= 2)
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * (self.n - 1) / 2
    }

    pub fn line_graph(&self) -> Result<LineGraph> {
        LineGraph::of(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureFlags {
    pub connected: bool,
    pub regular: Option<usize>,
    pub bipartite: bool,
}

/// Degree statistics of a graph.
///
/// `avg_neighbor_degrees[i]` is `m_i = (1/d(v_i)) Σ_{v_j ∼ v_i} d(v_j)`; it is
/// `None` for isolated vertices where the average is undefined.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub min: usize,
    pub max: usize,
    pub avg_neighbor_degrees: Vec<Option<f64>>,
}

impl DegreeProfile {
    pub fn of(g: &Graph) -> Self {
        let degrees = g.degrees();
        let avg_neighbor_degrees = (0..g.order())
            .map(|v| {
                let d = degrees[v];
                (d > 0).then(|| {
                    let s: usize = g.neighbors(v).iter().map(|&w| degrees[w]).sum();
                    s as f64 / d as f64
                })
            })
            .collect();
        DegreeProfile {
            min: degrees.iter().copied().min().unwrap_or(0),
            max: degrees.iter().copied().max().unwrap_or(0),
            degrees,
            avg_neighbor_degrees,
        }
    }

    /// All `m_i`, failing on the first isolated vertex.
    pub fn defined_avg_neighbor_degrees(&self) -> Result<Vec<f64>> {
        self.avg_neighbor_degrees
            .iter()
            .enumerate()
            .map(|(v, m)| m.ok_or(Error::IsolatedVertex(v)))
            .collect()
    }

    pub fn degree_sum(&self) -> usize {
        self.degrees.iter().sum()
    }
}

/// `l(G)` together with the correspondence between its vertices and the
/// edges of `G`: vertex `k` of the line graph is `source_edges[k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct LineGraph {
    pub graph: Graph,
    pub source_edges: Vec<Edge>,
}

impl LineGraph {
    pub fn of(g: &Graph) -> Result<Self> {
        if g.size() == 0 {
            return Err(Error::NoEdges);
        }
        // Edges sharing an endpoint are exactly the pairs drawn from one
        // vertex's incident-edge list.
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
        for (k, &(u, v)) in g.edges().iter().enumerate() {
            incident[u].push(k);
            incident[v].push(k);
        }
        let mut pairs = Vec::new();
        for list in &incident {
            for (i, &a) in list.iter().enumerate() {
                for &b in &list[i + 1..] {
                    pairs.push((a, b));
                }
            }
        }
        let graph = Graph::from_edge_list(g.size(), pairs)?;
        Ok(LineGraph {
            graph,
            source_edges: g.edges().to_vec(),
        })
    }

    /// Line-graph vertex standing for edge `{u, v}` of the source graph.
    pub fn vertex_of(&self, u: usize, v: usize) -> Option<usize> {
        self.source_edges.binary_search(&(u.min(v), u.max(v))).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_line_graph(g: &Graph) -> Vec<Edge> {
        let e = g.edges();
        let mut out = Vec::new();
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                let (a, b) = e[i];
                let (c, d) = e[j];
                if a == c || a == d || b == c || b == d {
                    out.push((i, j));
                }
            }
        }
        out
    }

    #[test]
    fn from_edge_list_builds_path() {
        let g = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.size(), 2);
        assert!(g.is_path());
    }

    #[test]
    fn from_edge_list_dedups_reversed_pairs() {
        let g = Graph::from_edge_list(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.size(), 1);
        assert!(g.is_complete());
    }

    #[test]
    fn from_edge_list_rejects_bad_pairs() {
        assert_eq!(Graph::from_edge_list(4, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::from_edge_list(3, [(0, 3)]),
            Err(Error::EndpointOutOfRange { u: 0, v: 3, n: 3 })
        );
        assert_eq!(Graph::empty(0), Err(Error::EmptyVertexSet));
    }

    #[test]
    fn degree_profiles() {
        let k4 = Family::Complete(4).build().unwrap();
        let p = k4.degree_profile();
        assert_eq!(p.degrees, vec![3; 4]);
        assert_eq!((p.min, p.max), (3, 3));

        let star = Family::Star(4).build().unwrap();
        let p = star.degree_profile();
        assert_eq!(p.degrees, vec![3, 1, 1, 1]);
        // center sees three leaves of degree 1, each leaf sees the center
        assert_eq!(p.avg_neighbor_degrees[0], Some(1.0));
        assert_eq!(p.avg_neighbor_degrees[1], Some(3.0));

        let p3 = Family::Path(3).build().unwrap().degree_profile();
        assert_eq!(p3.degrees, vec![1, 2, 1]);
        assert_eq!((p3.min, p3.max), (1, 2));
    }

    #[test]
    fn isolated_vertex_has_undefined_neighbor_average() {
        let g = Graph::from_edge_list(3, [(0, 1)]).unwrap();
        let p = g.degree_profile();
        assert_eq!(p.avg_neighbor_degrees[2], None);
        assert_eq!(
            p.defined_avg_neighbor_degrees(),
            Err(Error::IsolatedVertex(2))
        );
    }

    #[test]
    fn delete_edge_cases() {
        let k3 = Family::Complete(3).build().unwrap();
        assert!(k3.delete_edge(0, 2).unwrap().is_path());
        let c4 = Family::Cycle(4).build().unwrap();
        let p4 = c4.delete_edge(3, 0).unwrap();
        assert!(p4.is_path());
        assert_eq!(p4.order(), 4);
        let k2 = Family::Path(2).build().unwrap();
        let e = k2.delete_edge(0, 1).unwrap();
        assert_eq!((e.order(), e.size()), (2, 0));
        assert_eq!(k2.delete_edge(0, 0), Err(Error::EdgeNotFound(0, 0)));
    }

    #[test]
    fn structure_flags_examples() {
        let c6 = Family::Cycle(6).build().unwrap().structure_flags();
        assert_eq!(
            c6,
            StructureFlags {
                connected: true,
                regular: Some(2),
                bipartite: true
            }
        );
        let k3 = Family::Complete(3).build().unwrap().structure_flags();
        assert!(k3.connected && k3.regular == Some(2) && !k3.bipartite);
        let two_k2 = Graph::from_edge_list(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two_k2.structure_flags().connected);
    }

    #[test]
    fn line_graph_of_path_and_star() {
        for n in 2..10 {
            let l = Family::Path(n).build().unwrap().line_graph().unwrap();
            assert_eq!(l.graph.order(), n - 1);
            assert!(l.graph.is_path());
        }
        for n in 2..10 {
            let l = Family::Star(n).build().unwrap().line_graph().unwrap();
            assert_eq!(l.graph.order(), n - 1);
            assert!(l.graph.is_complete());
        }
    }

    #[test]
    fn line_graph_of_c4_matches_brute_force() {
        let c4 = Family::Cycle(4).build().unwrap();
        let l = c4.line_graph().unwrap();
        assert_eq!(l.graph.edges(), brute_line_graph(&c4).as_slice());
        assert_eq!(l.graph.degrees(), vec![2; 4]);
        assert!(l.graph.is_connected());
    }

    #[test]
    fn line_graph_matches_brute_force_on_families() {
        for fam in Family::sample_corpus() {
            let g = fam.build().unwrap();
            if g.size() == 0 {
                continue;
            }
            let l = g.line_graph().unwrap();
            assert_eq!(l.graph.edges(), brute_line_graph(&g).as_slice(), "{fam}");
        }
    }

    #[test]
    fn line_graph_of_null_graph_is_rejected() {
        assert_eq!(Graph::empty(3).unwrap().line_graph(), Err(Error::NoEdges));
    }

    #[test]
    fn induced_subgraph_relabels() {
        let c5 = Family::Cycle(5).build().unwrap();
        let p4 = c5.delete_vertex(0).unwrap();
        assert!(p4.is_path());
        assert_eq!(p4.order(), 4);
    }
}
