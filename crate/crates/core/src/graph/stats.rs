use serde::Serialize;

use super::search::{clique_number, independence_number};
use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub max_degree: usize,
    pub min_degree: usize,
    /// `θ(G)`; `None` for an edgeless graph.
    pub ore_degree: Option<usize>,
    pub clique_number: usize,
    pub independence_number: usize,
    pub components: usize,
    pub triangle_free: bool,
}

/// `θ(G) = max over edges xy of d(x) + d(y)`.
pub fn ore_degree(g: &Graph) -> Result<usize> {
    g.edges()
        .map(|(u, v)| g.degree(u) + g.degree(v))
        .max()
        .ok_or_else(|| Error::UndefinedStatistic("Ore-degree of an edgeless graph".into()))
}

/// Clique and independence numbers are exact and exponential in `n`.
pub fn graph_stats(g: &Graph) -> GraphStats {
    GraphStats {
        max_degree: g.max_degree(),
        min_degree: g.min_degree(),
        ore_degree: ore_degree(g).ok(),
        clique_number: clique_number(g),
        independence_number: independence_number(g, g.vertices()),
        components: g.components().len(),
        triangle_free: g.is_triangle_free(),
    }
}
