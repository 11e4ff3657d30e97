//! Extracting a certificate from a large independent cover.

use serde::Serialize;

use super::Certificate;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orient::{build_on, KernelPerfectBuild};
use crate::structure::mic;
use crate::table::DegreeTable;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extraction {
    pub certificate: Certificate,
    /// The independent set used.
    pub independent_set: VertexSet,
    /// The violating sets removed, in order.
    pub peeled: Vec<VertexSet>,
}

/// `Σ_{v∈h} (d_G(v) + 1 - f(v))`. Restricting `f` to `f_H` leaves each term
/// unchanged, so this is also the requirement inside `H`.
fn requirement(g: &Graph, f: &DegreeTable, h: VertexSet) -> i64 {
    h.iter().map(|v| g.degree(v) as i64 + 1 - f[v]).sum()
}

/// `‖H_A‖`: edges of `G[h]` with an end in `a`.
fn bipartite_size(g: &Graph, h: VertexSet, a: VertexSet) -> i64 {
    (a & h).iter().map(|v| g.degree_in(v, h) as i64).sum()
}

fn restrict(g: &Graph, f: &DegreeTable, h: VertexSet) -> DegreeTable {
    DegreeTable::new(
        (0..g.n())
            .map(|v| {
                if h.contains(v) {
                    f[v] + g.degree_in(v, h) as i64 - g.degree(v) as i64
                } else {
                    0
                }
            })
            .collect(),
    )
}

/// Starting from `H = G`, tries to orient `H_A` with in-degrees
/// `d_H(v) + 1 - f_H(v)`; each failure yields a violating set that is
/// removed from `H`. The cover inequality `‖H_A‖ >= Σ (d_H + 1 - f_H)` holds
/// throughout, so the violating set is never all of `H`.
///
/// `a` defaults to the optimal set of [`mic`].
pub fn extract_reducible_traced(g: &Graph, f: &DegreeTable, a: Option<VertexSet>) -> Result<Extraction> {
    if f.len() != g.n() {
        return Err(Error::argument("list-size table length does not match the graph"));
    }
    if g.n() == 0 {
        return Err(Error::argument("the graph is empty"));
    }
    if let Some(v) = (0..g.n()).find(|&v| f[v] > g.degree(v) as i64 + 1) {
        return Err(Error::argument(format!("f({v}) exceeds d({v}) + 1")));
    }
    let a = match a {
        Some(a) => {
            g.check_subset(a)?;
            if !g.is_independent(a) {
                return Err(Error::argument(format!("{a} is not independent")));
            }
            a
        }
        None => mic(g).witness,
    };
    let cover = bipartite_size(g, g.vertices(), a);
    let required = requirement(g, f, g.vertices());
    if cover < required {
        return Err(Error::HypothesisNotMet { cover, required });
    }

    let mut h = g.vertices();
    let mut peeled = Vec::new();
    loop {
        let f_h = restrict(g, f, h);
        match build_on(g, h, a, &f_h) {
            KernelPerfectBuild::Built(digraph) => {
                debug_assert!(h.iter().all(|v| (digraph.out_degree(v) as i64) < f_h[v]));
                return Ok(Extraction {
                    certificate: Certificate {
                        h_vertices: h,
                        digraph,
                        f_h,
                    },
                    independent_set: a,
                    peeled,
                });
            }
            KernelPerfectBuild::Violating { set, .. } => {
                assert!(
                    !set.is_empty() && set != h && set.is_subset(h),
                    "violating set {set} must be a nonempty proper subset of {h}"
                );
                let before = h.len();
                h -= set;
                assert!(h.len() < before);
                assert!(
                    bipartite_size(g, h, a) >= requirement(g, f, h),
                    "cover inequality lost after removing {set}"
                );
                peeled.push(set);
            }
        }
    }
}

pub fn extract_reducible(g: &Graph, f: &DegreeTable, a: Option<VertexSet>) -> Result<Certificate> {
    extract_reducible_traced(g, f, a).map(|e| e.certificate)
}
