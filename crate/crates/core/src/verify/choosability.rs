//! Offline list coloring: every f-assignment, up to renaming colors.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::table::DegreeTable;
use crate::vertex_set::VertexSet;

pub const MAX_CHOOSABILITY_N: usize = 8;
pub const MAX_CHOOSABILITY_LIST_TOTAL: i64 = 20;

/// A color list per vertex, each sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ListAssignment(pub Vec<Vec<u32>>);

impl ListAssignment {
    pub fn is_f_assignment(&self, f: &DegreeTable) -> bool {
        self.0.len() == f.len() && self.0.iter().zip(f.iter()).all(|(l, k)| l.len() as i64 == k)
    }

    /// A proper coloring with `π(v) ∈ L(v)`, by backtracking.
    pub fn coloring(&self, g: &Graph) -> Option<Vec<u32>> {
        color_within(g, self, g.vertices())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChoosabilityOutcome {
    pub choosable: bool,
    /// An f-assignment with no coloring.
    pub counterexample: Option<ListAssignment>,
}

fn color_within(g: &Graph, lists: &ListAssignment, within: VertexSet) -> Option<Vec<u32>> {
    fn go(g: &Graph, lists: &ListAssignment, order: &[usize], i: usize, color: &mut [Option<u32>]) -> bool {
        let Some(&v) = order.get(i) else {
            return true;
        };
        for &c in &lists.0[v] {
            if g.neighbors(v).iter().all(|u| color[u] != Some(c)) {
                color[v] = Some(c);
                if go(g, lists, order, i + 1, color) {
                    return true;
                }
            }
        }
        color[v] = None;
        false
    }
    // short lists first
    let mut order = within.to_vec();
    order.sort_by_key(|&v| lists.0[v].len());
    let mut color = vec![None; g.n()];
    go(g, lists, &order, 0, &mut color).then(|| color.into_iter().map(|c| c.unwrap_or(0)).collect())
}

/// Vertices with more colors than remaining neighbors can always be colored
/// last, so they are peeled off first.
fn core(g: &Graph, f: &DegreeTable) -> VertexSet {
    let mut rest = g.vertices();
    while let Some(v) = rest.iter().find(|&v| f[v] > g.degree_in(v, rest) as i64) {
        rest.remove(v);
    }
    rest
}

/// Lists are assigned vertex by vertex; a list is some subset of colors
/// already in use plus the right number of brand-new colors, which covers
/// every assignment up to renaming.
pub fn is_f_choosable(g: &Graph, f: &DegreeTable) -> Result<ChoosabilityOutcome> {
    Error::check_limit("vertex count", g.n(), MAX_CHOOSABILITY_N)?;
    if f.len() != g.n() {
        return Err(Error::argument("list-size table length does not match the graph"));
    }
    let fresh_lists = |lists: &mut Vec<Vec<u32>>, vs: &mut dyn Iterator<Item = usize>| {
        let mut next = lists.iter().flatten().max().map_or(0, |&c| c + 1);
        for v in vs {
            lists[v] = (next..next + f[v].max(0) as u32).collect();
            next += f[v].max(0) as u32;
        }
    };
    if let Some(v) = (0..g.n()).find(|&v| f[v] <= 0) {
        let mut lists = vec![Vec::new(); g.n()];
        fresh_lists(&mut lists, &mut (0..g.n()).filter(|&u| u != v));
        return Ok(ChoosabilityOutcome {
            choosable: false,
            counterexample: Some(ListAssignment(lists)),
        });
    }
    let rest = core(g, f);
    let total: i64 = rest.iter().map(|v| f[v]).sum();
    if total > MAX_CHOOSABILITY_LIST_TOTAL {
        return Err(Error::SizeLimit {
            what: "total list size",
            actual: total as usize,
            limit: MAX_CHOOSABILITY_LIST_TOTAL as usize,
        });
    }

    struct Search<'a> {
        g: &'a Graph,
        f: &'a DegreeTable,
        order: Vec<usize>,
        rest: VertexSet,
        lists: ListAssignment,
    }

    impl Search<'_> {
        /// True once an uncolorable assignment is found (left in `lists`).
        fn go(&mut self, i: usize, used: u32) -> bool {
            let Some(&v) = self.order.get(i) else {
                return color_within(self.g, &self.lists, self.rest).is_none();
            };
            let k = self.f[v] as u32;
            // subsets of the used colors of size at most k, in increasing order
            let mut pick = Vec::with_capacity(k as usize);
            self.choose(i, v, k, used, 0, &mut pick)
        }

        fn choose(&mut self, i: usize, v: usize, k: u32, used: u32, from: u32, pick: &mut Vec<u32>) -> bool {
            // complete the list with new colors
            let fresh = k - pick.len() as u32;
            let mut list = pick.clone();
            list.extend(used..used + fresh);
            self.lists.0[v] = list;
            if self.go(i + 1, used + fresh) {
                return true;
            }
            if pick.len() as u32 == k {
                return false;
            }
            for c in from..used {
                pick.push(c);
                if self.choose(i, v, k, used, c + 1, pick) {
                    return true;
                }
                pick.pop();
            }
            false
        }
    }

    // most constrained first: high degree vertices early share colors with
    // the most neighbors
    let mut order = rest.to_vec();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree_in(v, rest)));
    let mut s = Search {
        g,
        f,
        order,
        rest,
        lists: ListAssignment(vec![Vec::new(); g.n()]),
    };
    if s.go(0, 0) {
        let mut lists = s.lists.0;
        fresh_lists(&mut lists, &mut (g.vertices() - rest).iter());
        return Ok(ChoosabilityOutcome {
            choosable: false,
            counterexample: Some(ListAssignment(lists)),
        });
    }
    Ok(ChoosabilityOutcome {
        choosable: true,
        counterexample: None,
    })
}
