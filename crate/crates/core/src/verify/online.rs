//! The online list coloring (painting) game, solved exactly.
//!
//! A position is the set `R` of uncolored vertices with a budget per vertex.
//! Lister names a nonempty `S ⊆ R`; Painter colors an independent `I ⊆ S`;
//! every vertex of `S ∖ I` loses one unit of budget. Painter has lost once an
//! uncolored vertex has budget 0 and won once `R` is empty.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::table::DegreeTable;
use crate::vertex_set::VertexSet;

pub const MAX_ONLINE_N: usize = 7;
pub const MAX_ONLINE_BUDGET: i64 = 7;
/// Positions pack four bits per vertex.
const MAX_SOLVER_N: usize = 16;

/// Memoized minimax over game positions. Budgets are indexed by vertex of the
/// whole graph; entries outside `R` are ignored.
pub struct PaintSolver<'g> {
    g: &'g Graph,
    memo: HashMap<u64, bool>,
}

/// Calls `visit` on each maximal independent set of `G[within]` containing
/// `base`, in Bron-Kerbosch order, until it returns false.
fn maximal_independent_sets(
    g: &Graph,
    base: VertexSet,
    within: VertexSet,
    visit: &mut dyn FnMut(VertexSet) -> bool,
) -> bool {
    fn go(g: &Graph, r: VertexSet, p: VertexSet, x: VertexSet, visit: &mut dyn FnMut(VertexSet) -> bool) -> bool {
        if p.is_empty() {
            return !x.is_empty() || visit(r);
        }
        let closed = |u: usize| g.neighbors(u).with(u);
        // every extension of r meets the closed neighborhood of the pivot
        let pivot = (p | x)
            .iter()
            .min_by_key(|&u| (p & closed(u)).len())
            .expect("nonempty");
        let (mut p, mut x) = (p, x);
        for v in p & closed(pivot) {
            if !go(g, r.with(v), p - closed(v), x - closed(v), visit) {
                return false;
            }
            p.remove(v);
            x.insert(v);
        }
        true
    }
    let cand = within - base - base.iter().fold(VertexSet::EMPTY, |a, v| a | g.neighbors(v));
    go(g, base, cand, VertexSet::EMPTY, visit)
}

/// All maximal independent subsets of `s`, sorted by bitmask.
pub(crate) fn maximal_independent_subsets(g: &Graph, s: VertexSet) -> Vec<VertexSet> {
    let mut all = Vec::new();
    maximal_independent_sets(g, VertexSet::EMPTY, s, &mut |i| {
        all.push(i);
        true
    });
    all.sort();
    all
}

impl<'g> PaintSolver<'g> {
    pub fn new(g: &'g Graph) -> Result<Self> {
        Error::check_limit("vertex count", g.n(), MAX_SOLVER_N)?;
        Ok(PaintSolver {
            g,
            memo: HashMap::new(),
        })
    }

    pub fn positions_solved(&self) -> usize {
        self.memo.len()
    }

    /// Whether Painter wins from `(remaining, budget)`.
    pub fn wins(&mut self, remaining: VertexSet, budget: &[i64]) -> bool {
        let g = self.g;
        if remaining.iter().any(|v| budget[v] <= 0) {
            return false;
        }
        // a vertex with more budget than uncolored neighbors is always safe
        let mut r = remaining;
        while let Some(v) = r.iter().find(|&v| budget[v] > g.degree_in(v, r) as i64) {
            r.remove(v);
        }
        if r.is_empty() {
            return true;
        }
        let comps = g.components_within(r);
        if comps.len() > 1 {
            return comps.into_iter().all(|c| self.wins(c, budget));
        }
        let key = (0..g.n())
            .filter(|&v| r.contains(v))
            .fold(0u64, |k, v| k | (budget[v] as u64) << (4 * v));
        if let Some(&w) = self.memo.get(&key) {
            return w;
        }
        let mut next = budget.to_vec();
        let win = r.subsets().skip(1).all(|s| {
            // budget-1 vertices of S must be colored now
            let forced: VertexSet = s.iter().filter(|&v| budget[v] == 1).collect();
            if !g.is_independent(forced) {
                return false;
            }
            let mut found = false;
            maximal_independent_sets(g, forced, s, &mut |i| {
                for v in s - i {
                    next[v] = budget[v] - 1;
                }
                let w = self.wins(r - i, &next);
                for v in s - i {
                    next[v] = budget[v];
                }
                found = w;
                !w
            });
            found
        });
        self.memo.insert(key, win);
        win
    }

    /// Painter's reply to `s`: the smallest winning maximal independent
    /// subset by bitmask, or the smallest one if none wins.
    pub fn painter_move(&mut self, remaining: VertexSet, budget: &[i64], s: VertexSet) -> VertexSet {
        let moves = maximal_independent_subsets(self.g, s);
        let mut next = budget.to_vec();
        for &i in &moves {
            for v in s - i {
                next[v] = budget[v] - 1;
            }
            let w = self.wins(remaining - i, &next);
            for v in s - i {
                next[v] = budget[v];
            }
            if w {
                return i;
            }
        }
        moves[0]
    }

    /// Lister's move: the smallest `S` by bitmask that Painter cannot answer,
    /// or all of `remaining` when Painter is winning anyway.
    pub fn lister_move(&mut self, remaining: VertexSet, budget: &[i64]) -> VertexSet {
        let mut next = budget.to_vec();
        for s in remaining.subsets().skip(1) {
            let refuted = maximal_independent_subsets(self.g, s).into_iter().all(|i| {
                for v in s - i {
                    next[v] = budget[v] - 1;
                }
                let w = self.wins(remaining - i, &next);
                for v in s - i {
                    next[v] = budget[v];
                }
                !w
            });
            if refuted {
                return s;
            }
        }
        remaining
    }
}

/// Exact evaluation of the online f-choosability recursion, with Lister's
/// `S` ranging over nonempty sets.
pub fn is_online_f_choosable(g: &Graph, f: &DegreeTable) -> Result<bool> {
    Error::check_limit("vertex count", g.n(), MAX_ONLINE_N)?;
    if f.len() != g.n() {
        return Err(Error::argument("list-size table length does not match the graph"));
    }
    if let Some(m) = f.max() {
        Error::check_limit("largest list size", m.max(0) as usize, MAX_ONLINE_BUDGET as usize)?;
    }
    Ok(PaintSolver::new(g)?.wins(g.vertices(), f.values()))
}
