//! In-degree constrained orientations by max-flow.
//!
//! Network: source -> one node per edge (capacity 1) -> each of its two
//! endpoints -> sink (capacity `g(v)`). A flow of value `Σ g` orients each
//! edge toward the endpoint it feeds. When the flow falls short, the vertex
//! nodes that can still reach the sink in the residual network form the
//! smallest sink side of a minimum cut, and that vertex set `X` maximizes
//! `Σ_{v∈X} g(v) - ‖X‖ - ‖X, V∖X‖`.

use std::collections::VecDeque;

use serde::Serialize;

use super::Digraph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::table::DegreeTable;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrientationResult {
    /// Every edge oriented once, with `d⁻(v) >= g(v)`.
    Oriented(Digraph),
    /// `Σ_{v∈X} g(v) - ‖X‖ - ‖X, V∖X‖ = deficiency > 0`.
    Violating { set: VertexSet, deficiency: i64 },
}

impl OrientationResult {
    pub fn orientation(&self) -> Option<&Digraph> {
        match self {
            OrientationResult::Oriented(d) => Some(d),
            OrientationResult::Violating { .. } => None,
        }
    }
}

struct Network {
    head: Vec<usize>,
    cap: Vec<i64>,
    adj: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    /// Returns the index of the forward half-edge; `^ 1` is its reverse.
    fn add(&mut self, from: usize, to: usize, cap: i64) -> usize {
        let id = self.head.len();
        self.head.push(to);
        self.cap.push(cap);
        self.adj[from].push(id);
        self.head.push(from);
        self.cap.push(0);
        self.adj[to].push(id + 1);
        id
    }

    /// Dinic's algorithm.
    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let nodes = self.adj.len();
        let mut total = 0;
        loop {
            let mut level = vec![usize::MAX; nodes];
            level[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &e in &self.adj[u] {
                    let w = self.head[e];
                    if self.cap[e] > 0 && level[w] == usize::MAX {
                        level[w] = level[u] + 1;
                        q.push_back(w);
                    }
                }
            }
            if level[t] == usize::MAX {
                return total;
            }
            let mut next = vec![0; nodes];
            loop {
                let f = self.augment(s, t, i64::MAX, &level, &mut next);
                if f == 0 {
                    break;
                }
                total += f;
            }
        }
    }

    fn augment(&mut self, u: usize, t: usize, limit: i64, level: &[usize], next: &mut [usize]) -> i64 {
        if u == t {
            return limit;
        }
        while next[u] < self.adj[u].len() {
            let e = self.adj[u][next[u]];
            let w = self.head[e];
            if self.cap[e] > 0 && level[w] == level[u] + 1 {
                let f = self.augment(w, t, limit.min(self.cap[e]), level, next);
                if f > 0 {
                    self.cap[e] -= f;
                    self.cap[e ^ 1] += f;
                    return f;
                }
            }
            next[u] += 1;
        }
        0
    }

    /// Nodes with a residual path to `t`.
    fn reaches(&self, t: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[t] = true;
        let mut q = VecDeque::from([t]);
        while let Some(v) = q.pop_front() {
            // residual arc u -> v exists when the reverse half-edge at v points to u
            // and the forward one (e ^ 1) still has capacity
            for &e in &self.adj[v] {
                let u = self.head[e];
                if !seen[u] && self.cap[e ^ 1] > 0 {
                    seen[u] = true;
                    q.push_back(u);
                }
            }
        }
        seen
    }
}

/// Orient `edges` (a subset of the edges of some graph on `n` vertices) so
/// that `d⁻(v) >= demand[v]` for `v` in `scope`. Vertices outside `scope`
/// carry no demand.
pub(crate) fn orient_edges(
    n: usize,
    edges: &[(usize, usize)],
    demand: &[i64],
    scope: VertexSet,
) -> OrientationResult {
    let m = edges.len();
    let (source, sink) = (0, 1);
    let edge_node = |i: usize| 2 + i;
    let vertex_node = |v: usize| 2 + m + v;
    let mut net = Network::new(2 + m + n);
    let mut feeds = Vec::with_capacity(m);
    for (i, &(u, v)) in edges.iter().enumerate() {
        net.add(source, edge_node(i), 1);
        let to_u = net.add(edge_node(i), vertex_node(u), 1);
        let to_v = net.add(edge_node(i), vertex_node(v), 1);
        feeds.push((to_u, to_v));
    }
    let mut need = 0;
    for v in scope {
        if demand[v] > 0 {
            net.add(vertex_node(v), sink, demand[v]);
            need += demand[v];
        }
    }
    let flow = net.max_flow(source, sink);

    if flow < need {
        let reach = net.reaches(sink);
        let set: VertexSet = scope.iter().filter(|&v| reach[vertex_node(v)]).collect();
        let inside = edges
            .iter()
            .filter(|&&(u, v)| set.contains(u) || set.contains(v))
            .count() as i64;
        let deficiency = set.iter().map(|v| demand[v].max(0)).sum::<i64>() - inside;
        debug_assert_eq!(deficiency, need - flow);
        return OrientationResult::Violating { set, deficiency };
    }

    let mut arcs = Vec::with_capacity(m);
    for (i, &(u, v)) in edges.iter().enumerate() {
        let (to_u, _) = feeds[i];
        // flow into u means the edge points at u
        if net.cap[to_u] == 0 {
            arcs.push((v, u));
        } else {
            arcs.push((u, v));
        }
    }
    OrientationResult::Oriented(Digraph::from_arcs(n, &arcs).expect("edges are valid"))
}

/// An orientation of `g` with `d⁻(v) >= demand(v)` for every `v`, or a vertex
/// set `X` with `‖X‖ + ‖X, V∖X‖ < Σ_{v∈X} demand(v)`.
pub fn orient_with_indegrees(g: &Graph, demand: &DegreeTable) -> Result<OrientationResult> {
    if demand.len() != g.n() {
        return Err(Error::argument(format!(
            "demand table has {} entries for {} vertices",
            demand.len(),
            g.n()
        )));
    }
    if let Some(v) = (0..g.n()).find(|&v| demand[v] < 0) {
        return Err(Error::argument(format!("negative demand at vertex {v}")));
    }
    let edges: Vec<_> = g.edges().collect();
    Ok(orient_edges(g.n(), &edges, demand.values(), g.vertices()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cut_size, enumerate_graphs, make_named};

    fn named(name: &str, p: &[usize]) -> Graph {
        make_named(name, p).unwrap()
    }

    #[test]
    fn c4_unit_demand() {
        let c4 = named("cycle", &[4]);
        let r = orient_with_indegrees(&c4, &DegreeTable::constant(4, 1)).unwrap();
        let d = r.orientation().unwrap();
        assert!(d.in_degrees().iter().all(|&x| x == 1));
    }

    #[test]
    fn k3_demand_two() {
        let k3 = named("complete", &[3]);
        let r = orient_with_indegrees(&k3, &DegreeTable::constant(3, 2)).unwrap();
        assert_eq!(
            r,
            OrientationResult::Violating {
                set: k3.vertices(),
                deficiency: 3
            }
        );
    }

    #[test]
    fn star_into_center() {
        let s = named("complete_bipartite", &[1, 3]);
        let r = orient_with_indegrees(&s, &DegreeTable::new(vec![3, 0, 0, 0])).unwrap();
        let d = r.orientation().unwrap();
        assert_eq!(d.arcs(), &[(1, 0), (2, 0), (3, 0)]);
    }

    #[test]
    fn negative_demand_rejected() {
        let k2 = named("complete", &[2]);
        assert!(orient_with_indegrees(&k2, &DegreeTable::new(vec![-1, 0])).is_err());
    }

    /// Minimal violating set equals the smallest maximally deficient set found
    /// by brute force over all subsets.
    #[test]
    fn violating_set_is_minimal_maximizer() {
        for g in enumerate_graphs(4, false).unwrap() {
            let n = g.n();
            let limits: Vec<i64> = (0..n).map(|v| g.degree(v) as i64 + 1).collect();
            let mut demand = vec![0i64; n];
            loop {
                let table = DegreeTable::new(demand.clone());
                if let OrientationResult::Violating { set, deficiency } =
                    orient_with_indegrees(&g, &table).unwrap()
                {
                    let def = |x: VertexSet| {
                        x.iter().map(|v| demand[v]).sum::<i64>()
                            - g.edges_within(x) as i64
                            - cut_size(&g, x, g.vertices() - x).unwrap() as i64
                    };
                    let best = g.vertices().subsets().map(def).max().unwrap();
                    assert_eq!(deficiency, best);
                    assert_eq!(def(set), best);
                    for x in g.vertices().subsets() {
                        if def(x) == best {
                            assert!(set.is_subset(x), "{g:?} {demand:?}");
                        }
                    }
                }
                let Some(i) = (0..n).find(|&i| demand[i] < limits[i]) else {
                    break;
                };
                demand[i] += 1;
                for d in &mut demand[..i] {
                    *d = 0;
                }
            }
        }
    }
}
