use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Directed multigraph: parallel arcs and opposite pairs allowed, no loops.
/// Arcs are kept sorted so equal multisets compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDigraph", into = "RawDigraph")]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out: Vec<VertexSet>,
    inn: Vec<VertexSet>,
}

#[derive(Serialize, Deserialize)]
struct RawDigraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl TryFrom<RawDigraph> for Digraph {
    type Error = Error;
    fn try_from(r: RawDigraph) -> Result<Self> {
        Digraph::from_arcs(r.n, &r.arcs)
    }
}

impl From<Digraph> for RawDigraph {
    fn from(d: Digraph) -> Self {
        RawDigraph { n: d.n, arcs: d.arcs }
    }
}

impl Digraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        Digraph {
            n,
            arcs: Vec::new(),
            out: vec![VertexSet::EMPTY; n],
            inn: vec![VertexSet::EMPTY; n],
        }
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::UnsupportedSize(format!("{n} vertices")));
        }
        let mut d = Digraph::empty(n);
        for &(u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::argument(format!("arc {u}->{v} out of range")));
            }
            if u == v {
                return Err(Error::argument(format!("self-arc at {u}")));
            }
            d.push(u, v);
        }
        d.arcs.sort_unstable();
        Ok(d)
    }

    fn push(&mut self, u: usize, v: usize) {
        self.arcs.push((u, v));
        self.out[u].insert(v);
        self.inn[v].insert(u);
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-arc");
        let at = self.arcs.partition_point(|&a| a <= (u, v));
        self.arcs.insert(at, (u, v));
        self.out[u].insert(v);
        self.inn[v].insert(u);
    }

    /// Removes one copy of `u -> v`; returns whether one existed.
    pub fn remove_arc(&mut self, u: usize, v: usize) -> bool {
        let Ok(at) = self.arcs.binary_search(&(u, v)) else {
            return false;
        };
        self.arcs.remove(at);
        if self.multiplicity(u, v) == 0 {
            self.out[u].remove(v);
            self.inn[v].remove(u);
        }
        true
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(v)
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let lo = self.arcs.partition_point(|&a| a < (u, v));
        let hi = self.arcs.partition_point(|&a| a <= (u, v));
        hi - lo
    }

    /// `(u, v, multiplicity)` for each distinct arc, sorted.
    pub fn arc_multiplicities(&self) -> Vec<(usize, usize, usize)> {
        let mut out: Vec<(usize, usize, usize)> = Vec::new();
        for &(u, v) in &self.arcs {
            match out.last_mut() {
                Some(last) if (last.0, last.1) == (u, v) => last.2 += 1,
                _ => out.push((u, v, 1)),
            }
        }
        out
    }

    /// `d⁺(v)`, counting multiplicity.
    pub fn out_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|a| a.0 == v).count()
    }

    /// `d⁻(v)`, counting multiplicity.
    pub fn in_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|a| a.1 == v).count()
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, _) in &self.arcs {
            d[u] += 1;
        }
        d
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(_, v) in &self.arcs {
            d[v] += 1;
        }
        d
    }

    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        self.inn[v]
    }

    /// Vertices joined to `v` by an arc in either direction.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.out[v] | self.inn[v]
    }

    /// Vertices incident to at least one arc.
    pub fn support(&self) -> VertexSet {
        self.arcs.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    /// Same labels, keeping only arcs with both ends in `s`.
    pub fn induced(&self, s: VertexSet) -> Digraph {
        let arcs: Vec<_> = self
            .arcs
            .iter()
            .copied()
            .filter(|&(u, v)| s.contains(u) && s.contains(v))
            .collect();
        Digraph::from_arcs(self.n, &arcs).expect("subset of valid arcs")
    }

    /// The simple graph of adjacencies.
    pub fn underlying(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for &(u, v) in &self.arcs {
            g.add_edge(u, v);
        }
        g
    }

    /// Whether every edge of `g` is carried by at least one arc.
    pub fn covers(&self, g: &Graph) -> bool {
        g.edges().all(|(u, v)| self.has_arc(u, v) || self.has_arc(v, u))
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph(n={}, arcs=[", self.n)?;
        for (i, (u, v)) in self.arcs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}>{v}")?;
        }
        write!(f, "])")
    }
}
