//! Simple undirected graphs on dense vertex indices `0..n`.

mod blocks;
mod dot;
mod enumerate;
mod graph6;
mod named;
mod search;
mod stats;

pub use blocks::{block_decomposition, BlockTree};
pub use dot::{digraph_to_dot, graph_to_dot};
pub use enumerate::{canonical_form, enumerate_graphs, enumerate_hereditary, MAX_ENUMERATION_N};
pub use graph6::{encode_graph6, parse_graph6, read_graph6_file, MAX_GRAPH6_N};
pub use named::{make_named, NAMED_FAMILIES};
pub use search::{clique_number, independence_number, max_weight_independent_set};
pub use stats::{graph_stats, ore_degree, GraphStats};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graphs are limited to {MAX_VERTICES} vertices");
        Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::UnsupportedSize(format!(
                "{n} vertices (limit {MAX_VERTICES})"
            )));
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::argument(format!(
                    "edge {u}-{v} out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::argument(format!("self-loop at {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Adds `uv`; no-op if present. Panics on a self-loop.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-loop");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Degree of `v` inside the subgraph induced on `within`.
    pub fn degree_in(&self, v: usize, within: VertexSet) -> usize {
        (self.adj[v] & within).len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// `‖S‖`: number of edges with both ends in `s`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        s.iter().map(|v| (self.adj[v] & s).len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.adj[v]))
    }

    /// Checks that every member of `s` is a vertex of this graph.
    pub fn check_subset(&self, s: VertexSet) -> Result<()> {
        if s.is_subset(self.vertices()) {
            Ok(())
        } else {
            Err(Error::argument(format!(
                "vertex set {s} out of range for {} vertices",
                self.n
            )))
        }
    }

    /// The subgraph induced on `s`, relabeled `0..|s|` in increasing order of
    /// the original labels. The second value maps new labels to old ones.
    pub fn induced(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let map = s.to_vec();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut h = Graph::empty(map.len());
        for (i, &v) in map.iter().enumerate() {
            h.adj[i] = (self.adj[v] & s).iter().map(|w| index[w]).collect();
        }
        (h, map)
    }

    /// Vertex sets of the connected components of `G[within]`, ordered by
    /// smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within;
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next |= self.adj[v];
                }
                next &= within - comp;
                comp |= next;
                frontier = next;
            }
            left -= comp;
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Connected with at least one vertex.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        Graph {
            n: self.n,
            adj: (0..self.n).map(|v| all - self.adj[v] - VertexSet::singleton(v)).collect(),
        }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut h = Graph::empty(self.n);
        for (u, v) in self.edges() {
            h.add_edge(perm[u], perm[v]);
        }
        h
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| !self.adj[u].intersects(self.adj[v]))
    }
}

/// `‖A,B‖ = Σ_{v∈A} |N(v) ∩ B|`.
pub fn cut_size(g: &Graph, a: VertexSet, b: VertexSet) -> Result<usize> {
    g.check_subset(a)?;
    g.check_subset(b)?;
    Ok(a.iter().map(|v| (g.neighbors(v) & b).len()).sum())
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().collect()
    }

    #[test]
    fn cut_size_examples() {
        let c4 = make_named("cycle", &[4]).unwrap();
        assert_eq!(cut_size(&c4, set(&[0, 2]), c4.vertices()).unwrap(), 4);
        assert_eq!(cut_size(&c4, VertexSet::EMPTY, set(&[1, 2])).unwrap(), 0);
        let k3 = make_named("complete", &[3]).unwrap();
        assert_eq!(cut_size(&k3, k3.vertices(), k3.vertices()).unwrap(), 6);
        assert!(matches!(
            cut_size(&k3, set(&[3]), k3.vertices()),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn from_edges_rejects_loops_and_range() {
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn induced_relabels() {
        let c5 = make_named("cycle", &[5]).unwrap();
        let (h, map) = c5.induced(set(&[0, 1, 2, 4]));
        assert_eq!(map, vec![0, 1, 2, 4]);
        assert_eq!(h.edge_count(), 3);
        assert!(h.has_edge(0, 3));
    }

    #[test]
    fn components() {
        let g = Graph::from_edges(5, &[(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![set(&[0, 1]), set(&[2]), set(&[3, 4])]);
        assert!(!g.is_connected());
        assert!(!Graph::empty(0).is_connected());
    }
}
