//! Isomorphism-class enumeration by vertex augmentation.
//!
//! Level `k+1` is built from level `k` by adding one vertex with every
//! possible neighborhood; candidates are deduplicated by a canonical code.
//! This is complete for any hereditary class, since deleting the last vertex
//! of a member yields a member on one fewer vertex.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::Graph;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

pub const MAX_ENUMERATION_N: usize = 8;

/// Upper-triangle bits in graph6 order fit a `u64` up to 11 vertices.
const MAX_CODE_N: usize = 11;

/// Canonical relabeling and its code. Two graphs are isomorphic iff their
/// codes are equal (and they have the same order).
///
/// Vertices are first partitioned by iterated color refinement; the code is
/// the largest upper-triangle bit string over all labelings that list the
/// refined cells in order.
pub fn canonical_form(g: &Graph) -> (Graph, u64) {
    let n = g.n();
    assert!(n <= MAX_CODE_N, "canonical codes support n <= {MAX_CODE_N}");
    let colors = refine(g);
    let mut cell_of_position = colors.clone();
    cell_of_position.sort_unstable();

    struct Search<'a> {
        g: &'a Graph,
        colors: &'a [usize],
        cell_of_position: &'a [usize],
        total_bits: usize,
        order: Vec<usize>,
        best: Option<(u64, Vec<usize>)>,
    }

    impl Search<'_> {
        fn go(&mut self, used: VertexSet, code: u64, bits: usize) {
            let p = self.order.len();
            if let Some((best, _)) = &self.best {
                let prefix = best >> (self.total_bits - bits);
                if code < prefix {
                    return;
                }
                if p == self.g.n() && code == *best {
                    return;
                }
            }
            if p == self.g.n() {
                self.best = Some((code, self.order.clone()));
                return;
            }
            let cell = self.cell_of_position[p];
            for v in 0..self.g.n() {
                if used.contains(v) || self.colors[v] != cell {
                    continue;
                }
                let mut c = code;
                for &u in &self.order {
                    c = c << 1 | self.g.has_edge(u, v) as u64;
                }
                self.order.push(v);
                self.go(used.with(v), c, bits + p);
                self.order.pop();
            }
        }
    }

    let mut s = Search {
        g,
        colors: &colors,
        cell_of_position: &cell_of_position,
        total_bits: n * n.saturating_sub(1) / 2,
        order: Vec::with_capacity(n),
        best: None,
    };
    s.go(VertexSet::EMPTY, 0, 0);
    let (code, order) = s.best.expect("at least one labeling");
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    (g.permuted(&perm), code)
}

/// Stable color refinement starting from degrees. Colors are ranks of sorted
/// signatures, hence labeling-invariant.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = g.degrees();
    let mut classes = distinct(&colors);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| sorted.binary_search(s).expect("present"))
            .collect();
        let next_classes = sorted.len();
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn distinct(xs: &[usize]) -> usize {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices satisfying `keep`, which must be hereditary (closed under vertex
/// deletion). Sorted by edge count, then canonical code.
pub fn enumerate_hereditary<F>(n: usize, keep: F) -> Result<Vec<Graph>>
where
    F: Fn(&Graph) -> bool + Sync,
{
    if n > MAX_CODE_N {
        return Err(Error::SizeLimit {
            what: "vertex count",
            actual: n,
            limit: MAX_CODE_N,
        });
    }
    let mut level: Vec<Graph> = vec![Graph::empty(0)];
    for k in 0..n {
        let found: Vec<(u64, Graph)> = level
            .par_iter()
            .flat_map_iter(|g| {
                let keep = &keep;
                VertexSet::full(k).subsets().filter_map(move |nb| {
                    let mut h = Graph::empty(k + 1);
                    for (u, v) in g.edges() {
                        h.add_edge(u, v);
                    }
                    for u in nb {
                        h.add_edge(u, k);
                    }
                    keep(&h).then(|| {
                        let (c, code) = canonical_form(&h);
                        (code, c)
                    })
                })
            })
            .collect();
        let unique: BTreeMap<u64, Graph> = found.into_iter().collect();
        level = unique.into_values().collect();
    }
    let mut out: Vec<(usize, u64, Graph)> = level
        .into_iter()
        .map(|g| {
            let code = canonical_form(&g).1;
            (g.edge_count(), code, g)
        })
        .collect();
    out.sort_by_key(|&(m, code, _)| (m, code));
    Ok(out.into_iter().map(|(_, _, g)| g).collect())
}

/// All graphs on `n <= 8` vertices up to isomorphism.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::SizeLimit {
            what: "vertex count",
            actual: n,
            limit: MAX_ENUMERATION_N,
        });
    }
    let all = enumerate_hereditary(n, |_| true)?;
    Ok(if connected_only {
        all.into_iter().filter(|g| n == 0 || g.is_connected()).collect()
    } else {
        all
    })
}
