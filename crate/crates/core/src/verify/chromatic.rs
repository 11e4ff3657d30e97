//! Chromatic number and vertex-criticality.

use crate::error::{Error, Result};
use crate::graph::{clique_number, Graph};
use crate::vertex_set::VertexSet;

pub const MAX_CHROMATIC_N: usize = 12;

/// Backtracking k-coloring of `G[within]`, most saturated vertex first.
fn colorable(g: &Graph, within: VertexSet, k: usize) -> bool {
    fn go(g: &Graph, left: VertexSet, color: &mut [usize], k: usize) -> bool {
        let saturation = |v: usize| {
            g.neighbors(v)
                .iter()
                .filter(|&u| color[u] < k)
                .fold(0u64, |m, u| m | 1 << color[u])
                .count_ones()
        };
        let Some(v) = left.iter().max_by_key(|&v| (saturation(v), g.degree_in(v, left))) else {
            return true;
        };
        let used = g.neighbors(v).iter().filter(|&u| color[u] < k).fold(0u64, |m, u| m | 1 << color[u]);
        // a color no vertex has used yet is interchangeable with any other
        let fresh = color.iter().filter(|&&c| c < k).fold(0u64, |m, &c| m | 1 << c).count_ones() as usize;
        for c in 0..k.min(fresh + 1) {
            if used >> c & 1 == 0 {
                color[v] = c;
                if go(g, left.without(v), color, k) {
                    return true;
                }
            }
        }
        color[v] = usize::MAX;
        false
    }
    let mut color = vec![usize::MAX; g.n()];
    go(g, within, &mut color, k)
}

fn chromatic_within(g: &Graph, within: VertexSet) -> usize {
    if within.is_empty() {
        return 0;
    }
    let (h, _) = g.induced(within);
    let mut k = clique_number(&h).max(1);
    while !colorable(g, within, k) {
        k += 1;
    }
    k
}

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    Error::check_limit("vertex count", g.n(), MAX_CHROMATIC_N)?;
    Ok(chromatic_within(g, g.vertices()))
}

/// `χ(G) = k` and deleting any vertex lowers it.
pub fn is_k_critical(g: &Graph, k: usize) -> Result<bool> {
    Error::check_limit("vertex count", g.n(), MAX_CHROMATIC_N)?;
    if chromatic_within(g, g.vertices()) != k {
        return Ok(false);
    }
    Ok((0..g.n()).all(|v| colorable(g, g.vertices().without(v), k.saturating_sub(1))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_graphs, make_named};

    fn brute_chi(g: &Graph) -> usize {
        let n = g.n();
        (0..=n)
            .find(|&k| {
                (0..(k.max(1) as u64).pow(n as u32)).any(|mut code| {
                    let mut c = vec![0; n];
                    for x in c.iter_mut() {
                        *x = code % k.max(1) as u64;
                        code /= k.max(1) as u64;
                    }
                    g.edges().all(|(u, v)| c[u] != c[v]) && (k > 0 || n == 0)
                })
            })
            .unwrap()
    }

    #[test]
    fn examples() {
        let k4 = make_named("complete", &[4]).unwrap();
        assert_eq!(chromatic_number(&k4).unwrap(), 4);
        assert!(is_k_critical(&k4, 4).unwrap());
        let c5 = make_named("cycle", &[5]).unwrap();
        assert_eq!(chromatic_number(&c5).unwrap(), 3);
        assert!(is_k_critical(&c5, 3).unwrap());
        let m = make_named("moser_spindle", &[]).unwrap();
        assert_eq!((m.n(), m.edge_count()), (7, 11));
        assert_eq!(chromatic_number(&m).unwrap(), 4);
        assert!(is_k_critical(&m, 4).unwrap());
        let p = make_named("petersen", &[]).unwrap();
        assert_eq!(chromatic_number(&p).unwrap(), 3);
        assert!(!is_k_critical(&p, 3).unwrap());
        assert_eq!(chromatic_number(&Graph::empty(0)).unwrap(), 0);
        assert!(chromatic_number(&Graph::empty(13)).is_err());
    }

    #[test]
    fn matches_brute_force() {
        for n in 1..=6 {
            for g in enumerate_graphs(n, false).unwrap() {
                assert_eq!(chromatic_number(&g).unwrap(), brute_chi(&g), "{g:?}");
            }
        }
    }
}
