use serde::Serialize;

use super::Digraph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::table::DegreeTable;

pub const MAX_AT_ARCS: usize = 24;
pub const MAX_AT_EDGES: usize = 14;

/// Counts of spanning Eulerian subgraphs (`d⁻ = d⁺` everywhere) by parity of
/// the arc count. Parallel arcs are distinct.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EulerianCounts {
    pub even: u64,
    pub odd: u64,
}

impl EulerianCounts {
    pub fn diff(&self) -> i64 {
        self.even as i64 - self.odd as i64
    }
}

/// `EE(D)` and `EO(D)`. Arcs are decided in order; a branch dies as soon as
/// some vertex can no longer be balanced by its undecided arcs.
pub fn alon_tarsi_diff(d: &Digraph) -> Result<EulerianCounts> {
    Error::check_limit("arc count", d.arc_count(), MAX_AT_ARCS)?;
    let n = d.n();
    let arcs = d.arcs();
    // undecided out/in arcs at each vertex after position i
    let mut rem_out = d.out_degrees();
    let mut rem_in = d.in_degrees();
    let mut balance = vec![0i64; n];
    let mut counts = EulerianCounts { even: 0, odd: 0 };

    fn go(
        arcs: &[(usize, usize)],
        i: usize,
        size: usize,
        balance: &mut [i64],
        rem_out: &mut [usize],
        rem_in: &mut [usize],
        counts: &mut EulerianCounts,
    ) {
        if i == arcs.len() {
            if size.is_multiple_of(2) {
                counts.even += 1;
            } else {
                counts.odd += 1;
            }
            return;
        }
        let (u, v) = arcs[i];
        rem_out[u] -= 1;
        rem_in[v] -= 1;
        // the undecided arcs at x can still bring its balance back to zero
        let feasible = |b: &[i64], ro: &[usize], ri: &[usize], x: usize| {
            -(ro[x] as i64) <= b[x] && b[x] <= ri[x] as i64
        };
        // skip the arc
        if feasible(balance, rem_out, rem_in, u) && feasible(balance, rem_out, rem_in, v) {
            go(arcs, i + 1, size, balance, rem_out, rem_in, counts);
        }
        // take the arc
        balance[u] += 1;
        balance[v] -= 1;
        if feasible(balance, rem_out, rem_in, u) && feasible(balance, rem_out, rem_in, v) {
            go(arcs, i + 1, size + 1, balance, rem_out, rem_in, counts);
        }
        balance[u] -= 1;
        balance[v] += 1;
        rem_out[u] += 1;
        rem_in[v] += 1;
    }

    go(arcs, 0, 0, &mut balance, &mut rem_out, &mut rem_in, &mut counts);
    Ok(counts)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AtOutcome {
    pub holds: bool,
    /// First qualifying orientation in enumeration order.
    pub witness: Option<Digraph>,
    pub counts: Option<EulerianCounts>,
}

/// `G` is f-AT if some orientation has `d⁺(v) <= f(v) - 1` everywhere and
/// `EE ≠ EO`. Orientations are enumerated depth-first over the edges in
/// lexicographic order, `u -> v` (for `u < v`) before `v -> u`.
pub fn is_f_at(g: &Graph, f: &DegreeTable) -> Result<AtOutcome> {
    let edges: Vec<_> = g.edges().collect();
    Error::check_limit("edge count", edges.len(), MAX_AT_EDGES)?;
    if f.len() != g.n() {
        return Err(Error::argument("list-size table length does not match the graph"));
    }
    let cap: Vec<i64> = (0..g.n()).map(|v| f[v] - 1).collect();
    if cap.iter().any(|&c| c < 0) {
        return Ok(AtOutcome {
            holds: false,
            witness: None,
            counts: None,
        });
    }

    fn go(
        g: &Graph,
        edges: &[(usize, usize)],
        i: usize,
        out: &mut Vec<i64>,
        cap: &[i64],
        arcs: &mut Vec<(usize, usize)>,
    ) -> Option<(Digraph, EulerianCounts)> {
        if i == edges.len() {
            let d = Digraph::from_arcs(g.n(), arcs).expect("valid");
            let c = alon_tarsi_diff(&d).expect("within arc limit");
            return (c.diff() != 0).then_some((d, c));
        }
        let (u, v) = edges[i];
        for (tail, head) in [(u, v), (v, u)] {
            if out[tail] < cap[tail] {
                out[tail] += 1;
                arcs.push((tail, head));
                let r = go(g, edges, i + 1, out, cap, arcs);
                arcs.pop();
                out[tail] -= 1;
                if r.is_some() {
                    return r;
                }
            }
        }
        None
    }

    let found = go(g, &edges, 0, &mut vec![0; g.n()], &cap, &mut Vec::new());
    Ok(match found {
        Some((d, c)) => AtOutcome {
            holds: true,
            witness: Some(d),
            counts: Some(c),
        },
        None => AtOutcome {
            holds: false,
            witness: None,
            counts: None,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_graphs, make_named};

    /// Direct enumeration of all arc subsets.
    fn brute(d: &Digraph) -> (u64, u64) {
        let arcs = d.arcs();
        let (mut even, mut odd) = (0, 0);
        for mask in 0u32..1 << arcs.len() {
            let mut bal = vec![0i64; d.n()];
            for (i, &(u, v)) in arcs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    bal[u] += 1;
                    bal[v] -= 1;
                }
            }
            if bal.iter().all(|&b| b == 0) {
                if mask.count_ones() % 2 == 0 {
                    even += 1;
                } else {
                    odd += 1;
                }
            }
        }
        (even, odd)
    }

    #[test]
    fn examples() {
        let tri = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let c = alon_tarsi_diff(&tri).unwrap();
        assert_eq!((c.even, c.odd, c.diff()), (1, 1, 0));
        let sq = Digraph::from_arcs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let c = alon_tarsi_diff(&sq).unwrap();
        assert_eq!((c.even, c.odd, c.diff()), (2, 0, 2));
        let acyclic = Digraph::from_arcs(4, &[(0, 1), (0, 2), (1, 2), (2, 3), (1, 3)]).unwrap();
        let c = alon_tarsi_diff(&acyclic).unwrap();
        assert_eq!((c.even, c.odd), (1, 0));
        // opposite pair: {}, {both}
        let pair = Digraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(alon_tarsi_diff(&pair).unwrap(), EulerianCounts { even: 2, odd: 0 });
    }

    #[test]
    fn arc_limit() {
        let arcs: Vec<_> = (0..25).map(|i| (i % 2, 1 - i % 2)).collect();
        let d = Digraph::from_arcs(2, &arcs).unwrap();
        assert!(matches!(alon_tarsi_diff(&d), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn pruned_count_matches_brute_force() {
        for g in enumerate_graphs(5, true).unwrap() {
            let edges: Vec<_> = g.edges().collect();
            if edges.len() > 8 {
                continue;
            }
            for mask in 0u32..1 << edges.len() {
                let arcs: Vec<_> = edges
                    .iter()
                    .enumerate()
                    .map(|(i, &(u, v))| if mask >> i & 1 == 1 { (v, u) } else { (u, v) })
                    .collect();
                let d = Digraph::from_arcs(g.n(), &arcs).unwrap();
                let c = alon_tarsi_diff(&d).unwrap();
                assert_eq!((c.even, c.odd), brute(&d));
            }
        }
    }

    #[test]
    fn at_examples() {
        let c4 = make_named("cycle", &[4]).unwrap();
        let r = is_f_at(&c4, &DegreeTable::constant(4, 2)).unwrap();
        assert!(r.holds);
        assert_eq!(r.witness.unwrap().out_degrees(), vec![1; 4]);
        let c5 = make_named("cycle", &[5]).unwrap();
        assert!(!is_f_at(&c5, &DegreeTable::constant(5, 2)).unwrap().holds);
        let k4 = make_named("complete", &[4]).unwrap();
        assert!(!is_f_at(&k4, &DegreeTable::degrees(&k4)).unwrap().holds);
        assert!(is_f_at(&k4, &DegreeTable::constant(4, 4)).unwrap().holds);
        let k6 = make_named("complete", &[6]).unwrap();
        assert!(is_f_at(&k6, &DegreeTable::degrees(&k6)).is_err());
    }
}
