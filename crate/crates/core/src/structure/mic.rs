use serde::Serialize;

use crate::graph::{max_weight_independent_set, Graph};
use crate::vertex_set::VertexSet;

/// `mic(G)`: the largest `‖I, V‖ = Σ_{v∈I} d(v)` over independent sets `I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MicResult {
    pub value: usize,
    /// Lexicographically smallest optimal set (as a sorted vertex list).
    pub witness: VertexSet,
}

pub fn mic(g: &Graph) -> MicResult {
    mic_within(g, g.vertices())
}

/// `mic` of the induced subgraph `G[within]`, with degrees taken in it; the
/// witness keeps the parent labels.
pub fn mic_within(g: &Graph, within: VertexSet) -> MicResult {
    let weight = |v: usize| g.degree_in(v, within) as u64;
    let best_over = |cand: VertexSet| max_weight_independent_set(g, cand, &weight).0;
    let target = best_over(within);

    // Walk up the lexicographic order: stop as soon as the target is reached
    // (a proper prefix sorts first), else take the smallest next vertex that
    // still admits an optimal completion.
    let mut chosen = VertexSet::EMPTY;
    let mut value = 0;
    let mut cand = within;
    while value < target {
        let v = cand
            .iter()
            .find(|&v| {
                let after = VertexSet::from_bits(!0u64 << v << 1);
                let rest = cand & (after - g.neighbors(v));
                value + weight(v) + best_over(rest) == target
            })
            .expect("an optimal completion exists");
        chosen.insert(v);
        value += weight(v);
        cand &= VertexSet::from_bits(!0u64 << v << 1) - g.neighbors(v);
    }
    MicResult {
        value: target as usize,
        witness: chosen,
    }
}
