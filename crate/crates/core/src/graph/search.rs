//! Exhaustive branch-and-bound searches. Exponential; meant for `n <= 20`.

use super::Graph;
use crate::vertex_set::VertexSet;

/// Maximum total weight of an independent subset of `candidates`, with one
/// optimal set. Branches on the lowest candidate (include first), bounding by
/// the sum of remaining candidate weights.
pub fn max_weight_independent_set(
    g: &Graph,
    candidates: VertexSet,
    weight: &dyn Fn(usize) -> u64,
) -> (u64, VertexSet) {
    struct Search<'a> {
        g: &'a Graph,
        weight: &'a dyn Fn(usize) -> u64,
        best: u64,
        best_set: VertexSet,
        found: bool,
    }

    impl Search<'_> {
        fn go(&mut self, chosen: VertexSet, value: u64, cand: VertexSet) {
            let Some(v) = cand.first() else {
                if !self.found || value > self.best {
                    self.best = value;
                    self.best_set = chosen;
                    self.found = true;
                }
                return;
            };
            let rest: u64 = cand.iter().map(self.weight).sum();
            if self.found && value + rest <= self.best {
                return;
            }
            self.go(
                chosen.with(v),
                value + (self.weight)(v),
                cand.without(v) - self.g.neighbors(v),
            );
            self.go(chosen, value, cand.without(v));
        }
    }

    let mut s = Search {
        g,
        weight,
        best: 0,
        best_set: VertexSet::EMPTY,
        found: false,
    };
    s.go(VertexSet::EMPTY, 0, candidates);
    (s.best, s.best_set)
}

/// `α(G[within])`.
pub fn independence_number(g: &Graph, within: VertexSet) -> usize {
    max_weight_independent_set(g, within, &|_| 1).0 as usize
}

/// `ω(G)`.
pub fn clique_number(g: &Graph) -> usize {
    fn go(g: &Graph, size: usize, cand: VertexSet, best: &mut usize) {
        if cand.is_empty() {
            *best = (*best).max(size);
            return;
        }
        if size + cand.len() <= *best {
            return;
        }
        let mut cand = cand;
        while let Some(v) = cand.first() {
            if size + cand.len() <= *best {
                return;
            }
            go(g, size + 1, cand & g.neighbors(v), best);
            cand.remove(v);
        }
    }
    let mut best = 0;
    go(g, 0, g.vertices(), &mut best);
    best
}
