//! f-KP: kernel-perfect oriented supergraphs with bounded out-degree.

use std::ops::ControlFlow;

use serde::Serialize;

use super::kernel::exhaustive_kernel;
use super::Digraph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::table::DegreeTable;
use crate::vertex_set::VertexSet;

pub const MAX_KP_N: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SupergraphMode {
    /// Each edge gets `->`, `<-` or both; each non-edge gets nothing, `->`,
    /// `<-` or both.
    Supergraph,
    /// Each edge gets exactly one direction and non-edges stay empty.
    StrictOrientation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KpOutcome {
    pub holds: bool,
    pub witness: Option<Digraph>,
}

const NONE: u8 = 0;
const FORWARD: u8 = 1;
const BACKWARD: u8 = 2;
const BOTH: u8 = 3;

struct Search<'a, F> {
    g: &'a Graph,
    cap: Vec<i64>,
    out: Vec<i64>,
    d: Digraph,
    mode: SupergraphMode,
    pairs: Vec<(usize, usize)>,
    visit: &'a mut F,
}

impl<F: FnMut(&Digraph) -> ControlFlow<()>> Search<'_, F> {
    fn states(&self, u: usize, v: usize) -> &'static [u8] {
        match (self.mode, self.g.has_edge(u, v)) {
            (SupergraphMode::Supergraph, true) => &[FORWARD, BACKWARD, BOTH],
            (SupergraphMode::Supergraph, false) => &[NONE, FORWARD, BACKWARD, BOTH],
            (SupergraphMode::StrictOrientation, true) => &[FORWARD, BACKWARD],
            (SupergraphMode::StrictOrientation, false) => &[NONE],
        }
    }

    fn go(&mut self, i: usize) -> ControlFlow<()> {
        if i == self.pairs.len() {
            return (self.visit)(&self.d);
        }
        let (u, v) = self.pairs[i];
        // the last pair ending at v fixes the subdigraph on 0..=v
        let closes = self.pairs.get(i + 1).is_none_or(|p| p.1 != v);
        for &s in self.states(u, v) {
            let fu = (s & FORWARD != 0) as i64;
            let fv = (s & BACKWARD != 0) as i64;
            if self.out[u] + fu > self.cap[u] || self.out[v] + fv > self.cap[v] {
                continue;
            }
            self.out[u] += fu;
            self.out[v] += fv;
            if fu == 1 {
                self.d.add_arc(u, v);
            }
            if fv == 1 {
                self.d.add_arc(v, u);
            }
            let ok = !closes
                || VertexSet::full(v)
                    .subsets()
                    .all(|s| exhaustive_kernel(&self.d, s.with(v)).is_some());
            let flow = if ok { self.go(i + 1) } else { ControlFlow::Continue(()) };
            if fu == 1 {
                self.d.remove_arc(u, v);
            }
            if fv == 1 {
                self.d.remove_arc(v, u);
            }
            self.out[u] -= fu;
            self.out[v] -= fv;
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Visits every kernel-perfect digraph allowed by `mode` with
/// `d⁺(v) <= f(v) - 1`. Vertex pairs are decided in order of their larger
/// end, so once vertex `k` is finished the subdigraph on `0..=k` is final and
/// the subsets containing `k` can be checked for kernels.
fn search<F>(g: &Graph, f: &DegreeTable, mode: SupergraphMode, visit: &mut F) -> Result<()>
where
    F: FnMut(&Digraph) -> ControlFlow<()>,
{
    Error::check_limit("vertex count", g.n(), MAX_KP_N)?;
    if f.len() != g.n() {
        return Err(Error::argument("list-size table length does not match the graph"));
    }
    let n = g.n();
    if (0..n).any(|v| f[v] < 1) {
        return Ok(());
    }
    let pairs = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let mut s = Search {
        g,
        cap: (0..n).map(|v| f[v] - 1).collect(),
        out: vec![0; n],
        d: Digraph::empty(n),
        mode,
        pairs,
        visit,
    };
    let _ = s.go(0);
    Ok(())
}

/// First witness in enumeration order: pairs by larger then smaller end,
/// states in the order none, `->`, `<-`, both.
pub fn is_f_kp(g: &Graph, f: &DegreeTable) -> Result<KpOutcome> {
    let mut witness = None;
    search(g, f, SupergraphMode::Supergraph, &mut |d: &Digraph| {
        witness = Some(d.clone());
        ControlFlow::Break(())
    })?;
    Ok(KpOutcome {
        holds: witness.is_some(),
        witness,
    })
}

/// Every witness in the search space of `mode`.
pub fn kp_witnesses(g: &Graph, f: &DegreeTable, mode: SupergraphMode) -> Result<Vec<Digraph>> {
    let mut all = Vec::new();
    search(g, f, mode, &mut |d: &Digraph| {
        all.push(d.clone());
        ControlFlow::Continue(())
    })?;
    Ok(all)
}

fn outer_neighborhood(g: &Graph, h: VertexSet) -> VertexSet {
    h.iter().fold(VertexSet::EMPTY, |acc, v| acc | g.neighbors(v)) - h
}

/// Grows a witness on `G[h]` to `G[h ∪ S]`, `S` the outer neighborhood of
/// `h`: edges from `h` to `S` point into `S`, edges inside `S` are doubled.
/// The witness must be kernel-perfect with `d⁺(v) < d_{G[h]}(v)`; only the
/// degree bound is checked here.
pub fn extend_d0_kp(g: &Graph, h: VertexSet, witness: &Digraph) -> Result<Digraph> {
    g.check_subset(h)?;
    if witness.n() != g.n() {
        return Err(Error::argument("witness and graph have different vertex counts"));
    }
    if h == g.vertices() {
        return Err(Error::argument("the subgraph already spans the graph"));
    }
    if h.is_empty() {
        return Err(Error::argument("the subgraph is empty"));
    }
    if let Some(&(u, v)) = witness.arcs().iter().find(|&&(u, v)| !h.contains(u) || !h.contains(v)) {
        return Err(Error::argument(format!("witness arc {u}->{v} leaves the subgraph")));
    }
    if let Some(v) = h.iter().find(|&v| witness.out_degree(v) >= g.degree_in(v, h)) {
        return Err(Error::argument(format!("witness out-degree at {v} is not below its degree")));
    }
    let s = outer_neighborhood(g, h);
    if s.is_empty() {
        return Err(Error::argument("no edges leave the subgraph; the graph is disconnected"));
    }
    let mut d = witness.clone();
    for (u, v) in g.edges() {
        if h.contains(u) && s.contains(v) {
            d.add_arc(u, v);
        } else if s.contains(u) && h.contains(v) {
            d.add_arc(v, u);
        } else if s.contains(u) && s.contains(v) {
            d.add_arc(u, v);
            d.add_arc(v, u);
        }
    }
    Ok(d)
}

/// Repeats [`extend_d0_kp`] until the witness covers all of `g`, returning
/// the grown vertex set and witness after each step.
pub fn extend_d0_kp_fully(
    g: &Graph,
    h: VertexSet,
    witness: &Digraph,
) -> Result<Vec<(VertexSet, Digraph)>> {
    let mut steps = Vec::new();
    let (mut h, mut d) = (h, witness.clone());
    while h != g.vertices() {
        d = extend_d0_kp(g, h, &d)?;
        h |= outer_neighborhood(g, h);
        steps.push((h, d.clone()));
    }
    Ok(steps)
}
