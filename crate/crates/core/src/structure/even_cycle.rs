use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{block_decomposition, Graph};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvenCycle {
    /// Vertices in cyclic order.
    pub cycle: Vec<usize>,
    pub chord: Option<(usize, usize)>,
}

/// Finds an even cycle whose vertex set spans at most one extra edge, in a
/// 2-connected graph that is neither complete nor an odd cycle.
///
/// Starts from a maximal clique (if there is a triangle) or a shortest cycle,
/// then attaches a shortest ear; the parity of the ear or of one of the two
/// arcs it closes off gives the even cycle.
pub fn find_even_cycle_one_chord(g: &Graph) -> Result<EvenCycle> {
    let n = g.n();
    if n < 3 || !g.is_connected() || !block_decomposition(g).cut_vertices.is_empty() {
        return Err(Error::argument("graph must be 2-connected"));
    }
    if g.is_clique(g.vertices()) {
        return Err(Error::argument("graph is complete"));
    }
    if n % 2 == 1 && g.edge_count() == n && (0..n).all(|v| g.degree(v) == 2) {
        return Err(Error::argument("graph is an odd cycle"));
    }

    let cycle = match first_triangle(g) {
        Some(t) => from_clique(g, maximal_clique(g, t))?,
        None => {
            let c = shortest_cycle(g).ok_or_else(|| Error::argument("graph is acyclic"))?;
            if c.len() % 2 == 0 {
                c
            } else {
                from_odd_cycle(g, &c)?
            }
        }
    };
    checked(g, cycle)
}

fn checked(g: &Graph, cycle: Vec<usize>) -> Result<EvenCycle> {
    let set: VertexSet = cycle.iter().collect();
    let k = cycle.len();
    let well_formed = k >= 4
        && k.is_multiple_of(2)
        && set.len() == k
        && (0..k).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % k]));
    if !well_formed {
        return Err(Error::argument(format!("internal: bad cycle {cycle:?}")));
    }
    let mut chords = Vec::new();
    for (i, &u) in cycle.iter().enumerate() {
        for &v in &cycle[i + 1..] {
            let j = cycle.iter().position(|&x| x == v).unwrap();
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(u, v) && !consecutive {
                chords.push((u.min(v), u.max(v)));
            }
        }
    }
    if chords.len() > 1 {
        return Err(Error::argument(format!(
            "internal: cycle {cycle:?} has chords {chords:?}"
        )));
    }
    Ok(EvenCycle {
        cycle,
        chord: chords.pop(),
    })
}

fn first_triangle(g: &Graph) -> Option<VertexSet> {
    g.edges().find_map(|(u, v)| {
        (g.neighbors(u) & g.neighbors(v))
            .iter()
            .find(|&w| w > v)
            .map(|w| [u, v, w].into_iter().collect())
    })
}

fn maximal_clique(g: &Graph, mut clique: VertexSet) -> VertexSet {
    loop {
        let common = clique
            .iter()
            .fold(g.vertices(), |acc, v| acc & g.neighbors(v));
        match common.first() {
            Some(w) => clique.insert(w),
            None => return clique,
        }
    }
}

/// Girth cycle: induced, since a chord would close a shorter one.
fn shortest_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w && u < w {
                    let up = |mut x: usize| {
                        let mut p = vec![x];
                        while x != root {
                            x = parent[x];
                            p.push(x);
                        }
                        p
                    };
                    let (pu, pw) = (up(u), up(w));
                    let su: VertexSet = pu.iter().collect();
                    let sw: VertexSet = pw.iter().collect();
                    if (su & sw) != VertexSet::singleton(root) {
                        continue;
                    }
                    let mut c: Vec<usize> = pu.into_iter().rev().collect();
                    c.extend(pw.into_iter().take_while(|&x| x != root));
                    if best.as_ref().is_none_or(|b| c.len() < b.len()) {
                        best = Some(c);
                    }
                }
            }
        }
    }
    best
}

/// A shortest path `a, p_1..p_m, b` with `a != b` in `s` and interior outside
/// `s`. Minimality over all choices forces `p_1` and `p_m` to see only `a` and
/// `b` in `s` (when `m >= 2`), no interior vertex to see `s`, and the
/// interior to be an induced path.
fn shortest_ear(g: &Graph, s: VertexSet) -> Option<Vec<usize>> {
    let n = g.n();
    let outside = g.vertices() - s;
    let mut best: Option<Vec<usize>> = None;
    for a in s {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for p in g.neighbors(a) & outside {
            dist[p] = 1;
            parent[p] = a;
            queue.push_back(p);
        }
        while let Some(x) = queue.pop_front() {
            if best.as_ref().is_some_and(|b| dist[x] + 2 >= b.len()) {
                break;
            }
            if let Some(b) = (g.neighbors(x) & s).without(a).first() {
                let mut path = vec![b];
                let mut y = x;
                while y != a {
                    path.push(y);
                    y = parent[y];
                }
                path.push(a);
                path.reverse();
                best = Some(path);
                break;
            }
            for w in g.neighbors(x) & outside {
                if dist[w] == usize::MAX {
                    dist[w] = dist[x] + 1;
                    parent[w] = x;
                    queue.push_back(w);
                }
            }
        }
    }
    best
}

fn from_clique(g: &Graph, clique: VertexSet) -> Result<Vec<usize>> {
    let ear = shortest_ear(g, clique).ok_or_else(|| Error::argument("no ear: not 2-connected"))?;
    let (a, b) = (ear[0], *ear.last().unwrap());
    let interior = &ear[1..ear.len() - 1];
    if interior.len() == 1 {
        let w = interior[0];
        let seen = g.neighbors(w) & clique;
        // the clique is maximal, so w misses some z
        let z = (clique - seen)
            .first()
            .ok_or_else(|| Error::argument("internal: clique not maximal"))?;
        let mut it = seen.iter();
        let (x, y) = (it.next().unwrap(), it.next().unwrap());
        return Ok(vec![w, x, z, y]);
    }
    let mut cycle = ear.clone();
    if cycle.len() % 2 == 1 {
        let c = (clique.without(a).without(b))
            .first()
            .ok_or_else(|| Error::argument("internal: clique too small"))?;
        cycle.push(c);
    }
    Ok(cycle)
}

fn from_odd_cycle(g: &Graph, cyc: &[usize]) -> Result<Vec<usize>> {
    let len = cyc.len();
    let s: VertexSet = cyc.iter().collect();
    let pos = |v: usize| cyc.iter().position(|&x| x == v).unwrap();
    // vertices of the cycle walking forward from position i to position j
    let arc = |i: usize, j: usize| -> Vec<usize> {
        let steps = (j + len - i) % len;
        (0..=steps).map(|k| cyc[(i + k) % len]).collect()
    };
    let ear = shortest_ear(g, s).ok_or_else(|| Error::argument("no ear: not 2-connected"))?;
    let interior = &ear[1..ear.len() - 1];

    if interior.len() == 1 {
        let w = interior[0];
        let mut at: Vec<usize> = (g.neighbors(w) & s).iter().map(pos).collect();
        at.sort_unstable();
        let t = at.len();
        let gap = |i: usize| (at[(i + 1) % t] + len - at[i]) % len;
        if let Some(i) = (0..t).find(|&i| gap(i) % 2 == 0) {
            let mut c = vec![w];
            c.extend(arc(at[i], at[(i + 1) % t]));
            return Ok(c);
        }
        // all gaps odd, so t is odd and >= 3; skip past an arc of length >= 3
        let i = (0..t)
            .find(|&i| len - gap(i) - gap((i + 1) % t) >= 2)
            .ok_or_else(|| Error::argument("internal: no usable pair of arcs"))?;
        let mut c = vec![w];
        c.extend(arc(at[i], at[(i + 2) % t]));
        return Ok(c);
    }

    let (a, b) = (ear[0], *ear.last().unwrap());
    let m = interior.len();
    // close the ear b -> a along whichever arc makes the length even
    let forward = arc(pos(b), pos(a));
    let backward = arc(pos(a), pos(b));
    let close: Vec<usize> = if (m + 1 + forward.len() - 1) % 2 == 0 {
        forward
    } else {
        backward.into_iter().rev().collect()
    };
    let mut c = ear.clone();
    c.extend(&close[1..close.len() - 1]);
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_graphs, make_named};

    /// Every simple cycle, each listed once (smallest vertex first).
    fn all_cycles(g: &Graph) -> Vec<Vec<usize>> {
        fn extend(g: &Graph, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let start = path[0];
            let last = *path.last().unwrap();
            for w in g.neighbors(last) {
                if w == start && path.len() >= 3 && path[1] < last {
                    out.push(path.clone());
                } else if w > start && !path.contains(&w) {
                    path.push(w);
                    extend(g, path, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        for s in 0..g.n() {
            extend(g, &mut vec![s], &mut out);
        }
        out
    }

    fn oracle_has_even_cycle_one_chord(g: &Graph) -> bool {
        all_cycles(g).iter().any(|c| {
            let s: VertexSet = c.iter().collect();
            c.len() % 2 == 0 && g.edges_within(s) <= c.len() + 1
        })
    }

    #[test]
    fn examples() {
        let c4 = find_even_cycle_one_chord(&make_named("cycle", &[4]).unwrap()).unwrap();
        assert_eq!((c4.cycle.len(), c4.chord), (4, None));
        let c6 = find_even_cycle_one_chord(&make_named("cycle", &[6]).unwrap()).unwrap();
        assert_eq!((c6.cycle.len(), c6.chord), (6, None));
        let k = find_even_cycle_one_chord(&make_named("K4_minus_e", &[]).unwrap()).unwrap();
        assert_eq!(k.cycle.len(), 4);
        assert_eq!(k.chord, Some((0, 1)));
    }

    #[test]
    fn preconditions() {
        for (name, p) in [("cycle", vec![5]), ("complete", vec![4]), ("path", vec![4])] {
            let g = make_named(name, &p).unwrap();
            assert!(matches!(find_even_cycle_one_chord(&g), Err(Error::Argument(_))));
        }
    }

    #[test]
    fn agrees_with_cycle_enumeration() {
        let mut checked = 0;
        for n in 3..=7 {
            for g in enumerate_graphs(n, true).unwrap() {
                let two_connected = block_decomposition(&g).cut_vertices.is_empty();
                let complete = g.is_clique(g.vertices());
                let odd_cycle = n % 2 == 1 && g.edge_count() == n && g.max_degree() == 2;
                if !two_connected || complete || odd_cycle {
                    continue;
                }
                let found = find_even_cycle_one_chord(&g).unwrap();
                let s: VertexSet = found.cycle.iter().collect();
                assert!(g.edges_within(s) <= found.cycle.len() + 1);
                assert!(oracle_has_even_cycle_one_chord(&g));
                checked += 1;
            }
        }
        assert!(checked > 400);
    }

    #[test]
    fn petersen() {
        let p = make_named("petersen", &[]).unwrap();
        let c = find_even_cycle_one_chord(&p).unwrap();
        assert_eq!(c.cycle.len() % 2, 0);
    }
}
