//! OC-reducibility and the checks built on it.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::mic;
use crate::table::DegreeTable;
use crate::verify::PaintSolver;
use crate::vertex_set::VertexSet;

pub const MAX_OC_N: usize = 7;
pub const MAX_CUT_LEMMA_N: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OcReduction {
    pub h_vertices: VertexSet,
    /// `f_H(v) = δ(G) + d_H(v) - d_G(v)`, aligned with `h_vertices`.
    pub f_h: Vec<i64>,
}

fn oc_table(g: &Graph, h: VertexSet, delta: i64) -> Vec<i64> {
    (0..g.n())
        .map(|v| delta + g.degree_in(v, h) as i64 - g.degree(v) as i64)
        .collect()
}

/// Some nonempty induced `H` that is online `f_H`-choosable, checked by the
/// game solver. Candidates are tried by size, then by sorted vertex list;
/// the first success is returned.
pub fn is_oc_reducible(g: &Graph) -> Result<Option<OcReduction>> {
    Error::check_limit("vertex count", g.n(), MAX_OC_N)?;
    if g.n() == 0 {
        return Err(Error::argument("the graph is empty"));
    }
    let delta = g.min_degree() as i64;
    let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new(); g.n() + 1];
    for h in g.vertices().subsets().skip(1) {
        by_size[h.len()].push(h);
    }
    for mut level in by_size {
        level.sort_by_key(|h| h.to_vec());
        let found = level.par_iter().find_first(|&&h| {
            let table = oc_table(g, h, delta);
            h.iter().all(|v| table[v] >= 1)
                && PaintSolver::new(g).expect("within limits").wins(h, &table)
        });
        if let Some(&h) = found {
            let table = oc_table(g, h, delta);
            return Ok(Some(OcReduction {
                h_vertices: h,
                f_h: h.iter().map(|v| table[v]).collect(),
            }));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MicStrength {
    pub irreducible: bool,
    pub mic: usize,
    /// `2‖G‖ - (δ - 1)|G| - 1`.
    pub bound: i64,
    /// Vacuous when the graph is reducible.
    pub holds: bool,
    pub reduction: Option<OcReduction>,
}

/// OC-irreducible graphs have `mic(G) <= 2‖G‖ - (δ - 1)|G| - 1`.
pub fn check_mic_strength(g: &Graph) -> Result<MicStrength> {
    let reduction = is_oc_reducible(g)?;
    let m = mic(g).value;
    let bound = 2 * g.edge_count() as i64 - (g.min_degree() as i64 - 1) * g.n() as i64 - 1;
    let irreducible = reduction.is_none();
    Ok(MicStrength {
        irreducible,
        mic: m,
        bound,
        holds: !irreducible || m as i64 <= bound,
        reduction,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutLemma {
    /// `G - H` is online `f`-choosable.
    pub rest_choosable: bool,
    /// `H` is online `f_H`-choosable, `f_H = f + d_H - d_G`.
    pub h_choosable: bool,
    pub whole_choosable: bool,
    /// The implication; false only on a counterexample.
    pub holds: bool,
}

pub fn cut_lemma_check(g: &Graph, f: &DegreeTable, h: VertexSet) -> Result<CutLemma> {
    Error::check_limit("vertex count", g.n(), MAX_CUT_LEMMA_N)?;
    g.check_subset(h)?;
    if f.len() != g.n() {
        return Err(Error::argument("list-size table length does not match the graph"));
    }
    let f_h: Vec<i64> = (0..g.n())
        .map(|v| f[v] + g.degree_in(v, h) as i64 - g.degree(v) as i64)
        .collect();
    let mut solver = PaintSolver::new(g)?;
    let rest_choosable = solver.wins(g.vertices() - h, f.values());
    let h_choosable = solver.wins(h, &f_h);
    let whole_choosable = solver.wins(g.vertices(), f.values());
    Ok(CutLemma {
        rest_choosable,
        h_choosable,
        whole_choosable,
        holds: !(rest_choosable && h_choosable) || whole_choosable,
    })
}
