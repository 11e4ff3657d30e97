use num_rational::Rational64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{independence_number, Graph};
use crate::vertex_set::VertexSet;

/// `H(G)`: vertices of degree above `δ(G)`; `L(G)`: vertices of degree `δ(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowHighSplit {
    pub min_degree: usize,
    pub max_degree: usize,
    pub high: VertexSet,
    pub low: VertexSet,
    pub high_edgeless: bool,
    /// `Δ = δ + 1`, in which case `high ∪ low = V`.
    pub gap_one: bool,
}

pub fn low_high_split(g: &Graph) -> Result<LowHighSplit> {
    if g.n() == 0 {
        return Err(Error::argument("low/high split of the empty graph"));
    }
    let delta = g.min_degree();
    let low: VertexSet = (0..g.n()).filter(|&v| g.degree(v) == delta).collect();
    let high = g.vertices() - low;
    Ok(LowHighSplit {
        min_degree: delta,
        max_degree: g.max_degree(),
        high,
        low,
        high_edgeless: g.edges_within(high) == 0,
        gap_one: g.max_degree() == delta + 1,
    })
}

/// `σ(G) = (δ - 1 + 2/δ)|L(G)| - 2‖L(G)‖`, exactly.
pub fn sigma(g: &Graph) -> Result<Rational64> {
    let split = low_high_split(g)?;
    let delta = split.min_degree as i64;
    if delta == 0 {
        return Err(Error::UndefinedStatistic("σ with δ = 0".into()));
    }
    let low = split.low.len() as i64;
    let low_edges = g.edges_within(split.low) as i64;
    let coef = Rational64::from_integer(delta - 1) + Rational64::new(2, delta);
    Ok(coef * low - Rational64::from_integer(2 * low_edges))
}

/// `β_t = α(G[V_t])` where `V_t` are the degree-`t` vertices.
pub fn beta_t(g: &Graph, t: usize) -> usize {
    let vt: VertexSet = (0..g.n()).filter(|&v| g.degree(v) == t).collect();
    independence_number(g, vt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_named;

    fn named(name: &str, p: &[usize]) -> Graph {
        make_named(name, p).unwrap()
    }

    #[test]
    fn splits() {
        let p = low_high_split(&named("petersen", &[])).unwrap();
        assert!(p.high.is_empty());
        assert_eq!(p.low.len(), 10);
        assert!(!p.gap_one);

        let s = low_high_split(&named("complete_bipartite", &[1, 3])).unwrap();
        assert_eq!(s.high.to_vec(), vec![0]);
        assert_eq!(s.low.to_vec(), vec![1, 2, 3]);

        let o = low_high_split(&named("O_n", &[5])).unwrap();
        assert_eq!(o.high.to_vec(), vec![0, 1]);
        assert_eq!(o.low.len(), 7);
        assert!(o.high_edgeless && o.gap_one);

        assert!(low_high_split(&Graph::empty(0)).is_err());
    }

    #[test]
    fn sigma_values() {
        assert_eq!(sigma(&named("petersen", &[])).unwrap(), Rational64::new(-10, 3));
        assert_eq!(sigma(&named("cycle", &[4])).unwrap(), Rational64::from_integer(0));
        assert_eq!(
            sigma(&named("complete_bipartite", &[1, 3])).unwrap(),
            Rational64::from_integer(6)
        );
        assert!(matches!(sigma(&Graph::empty(2)), Err(Error::UndefinedStatistic(_))));
    }

    #[test]
    fn beta_values() {
        assert_eq!(beta_t(&named("complete", &[4]), 3), 1);
        assert_eq!(beta_t(&named("path", &[3]), 1), 2);
        assert_eq!(beta_t(&named("petersen", &[]), 3), 4);
        assert_eq!(beta_t(&named("complete", &[5]), 5), 0);
    }
}
