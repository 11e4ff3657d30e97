//! Kernel checks, plus the kernel-perfect orientation built from an
//! independent set.

use serde::Serialize;

use super::flow::{orient_edges, OrientationResult};
use super::Digraph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::table::DegreeTable;
use crate::vertex_set::VertexSet;

/// Exhaustive kernel-perfectness checks visit every induced subdigraph.
pub const MAX_KERNEL_PERFECT_N: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KernelPerfectBuild {
    Built(Digraph),
    /// From the bipartite part `G_A`; see [`super::orient_with_indegrees`].
    Violating { set: VertexSet, deficiency: i64 },
}

/// `K` is independent in `D[within]` and every other vertex of `within` has
/// an arc into `K`.
pub fn is_kernel(d: &Digraph, within: VertexSet, k: VertexSet) -> bool {
    k.is_subset(within)
        && k.iter().all(|v| !d.neighbors(v).intersects(k))
        && (within - k).iter().all(|v| d.out_neighbors(v).intersects(k))
}

/// The shape built from an independent set `a`: no arcs inside `a`, and every arc with both
/// ends outside `a` has its reverse.
fn check_shape(d: &Digraph, a: VertexSet) -> Result<()> {
    for &(u, v) in d.arcs() {
        if a.contains(u) && a.contains(v) {
            return Err(Error::argument(format!("arc {u}->{v} inside the independent set")));
        }
        if !a.contains(u) && !a.contains(v) && !d.has_arc(v, u) {
            return Err(Error::argument(format!(
                "arc {u}->{v} outside the independent set is not doubled"
            )));
        }
    }
    Ok(())
}

/// With `a` supplied, builds a kernel of `D[within]` by the constructive
/// route: `a` itself if it absorbs everything, otherwise a vertex `v` outside
/// `a` with no out-arc into `a` (all its neighbors point at it), plus a
/// kernel of what remains after deleting `v` and its neighbors. Without `a`,
/// searches exhaustively and may return `None`.
pub fn find_kernel(d: &Digraph, a: Option<VertexSet>) -> Result<Option<VertexSet>> {
    find_kernel_within(d, VertexSet::full(d.n()), a)
}

pub fn find_kernel_within(
    d: &Digraph,
    within: VertexSet,
    a: Option<VertexSet>,
) -> Result<Option<VertexSet>> {
    match a {
        Some(a) => {
            check_shape(d, a)?;
            Ok(Some(constructive_kernel(d, within, a)))
        }
        None => Ok(exhaustive_kernel(d, within)),
    }
}

fn constructive_kernel(d: &Digraph, within: VertexSet, a: VertexSet) -> VertexSet {
    let mut rest = within;
    let mut kernel = VertexSet::EMPTY;
    loop {
        let a_here = a & rest;
        match (rest - a).iter().find(|&v| !d.out_neighbors(v).intersects(a_here)) {
            None => {
                kernel |= a_here;
                debug_assert!(is_kernel(d, within, kernel));
                return kernel;
            }
            Some(v) => {
                kernel.insert(v);
                rest = rest - d.neighbors(v) - VertexSet::singleton(v);
            }
        }
    }
}

/// Branch on the lowest undecided vertex (in, then out); a vertex left out
/// needs an out-neighbor in the kernel, so fail once all of them are out.
pub(crate) fn exhaustive_kernel(d: &Digraph, within: VertexSet) -> Option<VertexSet> {
    fn go(d: &Digraph, undecided: VertexSet, chosen: VertexSet, out: VertexSet) -> Option<VertexSet> {
        // excluded vertices must still be absorbable
        for v in out {
            let reach = d.out_neighbors(v);
            if !reach.intersects(chosen) && !reach.intersects(undecided) {
                return None;
            }
        }
        let Some(v) = undecided.first() else {
            return Some(chosen);
        };
        let rest = undecided.without(v);
        // v in: its neighbors are forced out
        let forced = d.neighbors(v) & rest;
        if let Some(k) = go(d, rest - forced, chosen.with(v), out | forced) {
            return Some(k);
        }
        go(d, rest, chosen, out.with(v))
    }
    go(d, within, VertexSet::EMPTY, VertexSet::EMPTY)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelPerfectness {
    pub kernel_perfect: bool,
    /// The first vertex set (by bitmask) whose induced subdigraph has no kernel.
    pub offending: Option<VertexSet>,
}

pub fn is_kernel_perfect(d: &Digraph) -> Result<KernelPerfectness> {
    is_kernel_perfect_on(d, VertexSet::full(d.n()))
}

/// Kernel-perfectness of `D[within]`.
pub fn is_kernel_perfect_on(d: &Digraph, within: VertexSet) -> Result<KernelPerfectness> {
    Error::check_limit("vertex count", within.len(), MAX_KERNEL_PERFECT_N)?;
    let offending = within
        .subsets()
        .find(|&s| exhaustive_kernel(d, s).is_none());
    Ok(KernelPerfectness {
        kernel_perfect: offending.is_none(),
        offending,
    })
}

/// The orientation from an independent set `a` and list sizes `f` on `G[h]`:
/// edges inside `h ∖ a` become opposite pairs; the edges at `a` (the graph
/// `H_A`) are oriented with `d⁻(v) >= d_H(v) + 1 - f(v)`, so `d⁺(v) <= f(v) - 1`.
pub(crate) fn build_on(g: &Graph, h: VertexSet, a: VertexSet, f: &DegreeTable) -> KernelPerfectBuild {
    let a = a & h;
    let demand: Vec<i64> = (0..g.n())
        .map(|v| {
            if h.contains(v) {
                g.degree_in(v, h) as i64 + 1 - f[v]
            } else {
                0
            }
        })
        .collect();
    let bipartite: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(u, v)| h.contains(u) && h.contains(v) && (a.contains(u) || a.contains(v)))
        .collect();
    match orient_edges(g.n(), &bipartite, &demand, h) {
        OrientationResult::Violating { set, deficiency } => {
            KernelPerfectBuild::Violating { set, deficiency }
        }
        OrientationResult::Oriented(mut d) => {
            let rest = h - a;
            for (u, v) in g.edges() {
                if rest.contains(u) && rest.contains(v) {
                    d.add_arc(u, v);
                    d.add_arc(v, u);
                }
            }
            KernelPerfectBuild::Built(d)
        }
    }
}

pub fn build_kernel_perfect(g: &Graph, a: VertexSet, f: &DegreeTable) -> Result<KernelPerfectBuild> {
    g.check_subset(a)?;
    if f.len() != g.n() {
        return Err(Error::argument("list-size table length does not match the graph"));
    }
    if !g.is_independent(a) {
        return Err(Error::argument(format!("{a} is not independent")));
    }
    if let Some(v) = (0..g.n()).find(|&v| f[v] > g.degree(v) as i64 + 1) {
        return Err(Error::argument(format!("f({v}) exceeds d({v}) + 1")));
    }
    Ok(build_on(g, g.vertices(), a, f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_graphs, make_named};

    fn named(name: &str, p: &[usize]) -> Graph {
        make_named(name, p).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().collect()
    }

    /// All kernels of D[within] by subset enumeration.
    fn brute_kernels(d: &Digraph, within: VertexSet) -> Vec<VertexSet> {
        within.subsets().filter(|&k| is_kernel(d, within, k)).collect()
    }

    #[test]
    fn find_kernel_examples() {
        // K4-e labels: a=0, b=1, x=2, y=3
        let (a, b, x, y) = (0, 1, 2, 3);
        let d = Digraph::from_arcs(4, &[(a, b), (b, a), (a, x), (y, a), (x, b), (b, y)]).unwrap();
        let k = find_kernel(&d, Some(set(&[x, y]))).unwrap().unwrap();
        assert_eq!(k, set(&[x, y]));

        let arcless = Digraph::empty(3);
        assert_eq!(find_kernel(&arcless, None).unwrap(), Some(set(&[0, 1, 2])));

        let c3 = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(find_kernel(&c3, None).unwrap(), None);
        assert!(brute_kernels(&c3, c3.support()).is_empty());
    }

    #[test]
    fn constructive_mode_rejects_bad_shape() {
        let c3 = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(find_kernel(&c3, Some(set(&[0]))), Err(Error::Argument(_))));
    }

    #[test]
    fn kernel_perfect_examples() {
        let c3 = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let r = is_kernel_perfect(&c3).unwrap();
        assert!(!r.kernel_perfect);
        assert_eq!(r.offending, Some(set(&[0, 1, 2])));
        assert!(is_kernel_perfect(&Digraph::empty(4)).unwrap().kernel_perfect);
        assert!(is_kernel_perfect(&Digraph::empty(11)).is_err());
    }

    #[test]
    fn build_examples() {
        let c4 = named("cycle", &[4]);
        let f = DegreeTable::degrees(&c4);
        let KernelPerfectBuild::Built(d) = build_kernel_perfect(&c4, set(&[0, 2]), &f).unwrap() else {
            panic!("C4 should orient");
        };
        assert_eq!(d.out_degrees(), vec![1; 4]);
        assert_eq!(d.arc_count(), 4);

        let k1 = Graph::empty(1);
        let r = build_kernel_perfect(&k1, set(&[0]), &DegreeTable::new(vec![1])).unwrap();
        assert_eq!(r, KernelPerfectBuild::Built(Digraph::empty(1)));

        let c5 = named("cycle", &[5]);
        let f = DegreeTable::degrees(&c5);
        for a in c5.vertices().subsets().filter(|&a| a.len() == 2 && c5.is_independent(a)) {
            assert!(matches!(
                build_kernel_perfect(&c5, a, &f).unwrap(),
                KernelPerfectBuild::Violating { .. }
            ));
        }
    }

    #[test]
    fn build_argument_errors() {
        let c4 = named("cycle", &[4]);
        let f = DegreeTable::degrees(&c4);
        assert!(build_kernel_perfect(&c4, set(&[0, 1]), &f).is_err());
        assert!(build_kernel_perfect(&c4, set(&[0]), &DegreeTable::constant(4, 4)).is_err());
    }

    /// Every built digraph is kernel-perfect with d⁺ <= f - 1, and the
    /// constructive kernel agrees with brute force on every induced subset.
    #[test]
    fn built_digraphs_are_kernel_perfect() {
        for n in 1..=6 {
            for g in enumerate_graphs(n, false).unwrap() {
                let f = DegreeTable::degrees(&g);
                for a in g.vertices().subsets().filter(|&a| g.is_independent(a)) {
                    if let KernelPerfectBuild::Built(d) = build_kernel_perfect(&g, a, &f).unwrap() {
                        assert!(is_kernel_perfect(&d).unwrap().kernel_perfect);
                        for v in 0..n {
                            assert!((d.out_degree(v) as i64) < f[v]);
                        }
                        for s in g.vertices().subsets() {
                            let k = find_kernel_within(&d, s, Some(a)).unwrap().unwrap();
                            assert!(brute_kernels(&d, s).contains(&k));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn exhaustive_kernel_agrees_with_brute_force() {
        // all orientations of small graphs, plus some doubled edges
        for g in enumerate_graphs(5, true).unwrap() {
            let edges: Vec<_> = g.edges().collect();
            if edges.len() > 7 {
                continue;
            }
            for mask in 0u32..1 << edges.len() {
                let arcs: Vec<_> = edges
                    .iter()
                    .enumerate()
                    .map(|(i, &(u, v))| if mask >> i & 1 == 1 { (v, u) } else { (u, v) })
                    .collect();
                let d = Digraph::from_arcs(g.n(), &arcs).unwrap();
                let found = exhaustive_kernel(&d, g.vertices());
                let all = brute_kernels(&d, g.vertices());
                assert_eq!(found.is_some(), !all.is_empty());
                if let Some(k) = found {
                    assert!(all.contains(&k));
                }
            }
        }
    }
}
