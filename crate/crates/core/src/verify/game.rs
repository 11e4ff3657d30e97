//! Playing the painting game with concrete strategies.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::HashSet;

use super::online::{PaintSolver, MAX_ONLINE_N};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orient::exhaustive_kernel;
use crate::reduce::Certificate;
use crate::table::DegreeTable;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug)]
pub enum Painter {
    /// Colors a kernel of the certificate digraph induced on `S`. The
    /// certificate must span the graph being played.
    Kernel(Certificate),
    /// Scans `S` by increasing budget, then index, keeping whatever stays
    /// independent.
    Greedy,
    SolverOptimal,
}

#[derive(Clone, Debug)]
pub enum Lister {
    /// Every nonempty `S` at every position: Painter wins only if it wins
    /// every line of play.
    Exhaustive,
    /// Uniform nonempty `S ⊆ R` from a seeded stream.
    Random(u64),
    /// The given sets in order, each intersected with the uncolored vertices.
    Scripted(Vec<VertexSet>),
    SolverOptimal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Winner {
    Painter,
    Lister,
    /// A scripted Lister ran out of moves.
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Round {
    #[serde(rename = "S")]
    pub s: VertexSet,
    #[serde(rename = "I")]
    pub i: VertexSet,
    /// Budgets of all vertices after the round; colored vertices keep theirs.
    pub budgets: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GameOutcome {
    pub winner: Winner,
    /// The line played; for the exhaustive Lister, a losing line if one
    /// exists and otherwise empty.
    pub transcript: Vec<Round>,
    /// Positions visited by the exhaustive Lister.
    pub positions: usize,
}

struct PainterState<'g> {
    g: &'g Graph,
    painter: &'g Painter,
    solver: Option<PaintSolver<'g>>,
}

impl PainterState<'_> {
    fn respond(&mut self, remaining: VertexSet, budget: &[i64], s: VertexSet) -> Result<VertexSet> {
        match self.painter {
            Painter::Kernel(cert) => exhaustive_kernel(&cert.digraph, s)
                .ok_or_else(|| Error::argument(format!("certificate digraph has no kernel on {s}"))),
            Painter::Greedy => {
                let mut order = s.to_vec();
                order.sort_by_key(|&v| (budget[v], v));
                let mut i = VertexSet::EMPTY;
                for v in order {
                    if !self.g.neighbors(v).intersects(i) {
                        i.insert(v);
                    }
                }
                Ok(i)
            }
            Painter::SolverOptimal => Ok(self.solver.as_mut().expect("solver").painter_move(remaining, budget, s)),
        }
    }
}

fn apply(budget: &mut [i64], s: VertexSet, i: VertexSet) {
    for v in s - i {
        budget[v] -= 1;
    }
}

fn lost(remaining: VertexSet, budget: &[i64]) -> bool {
    remaining.iter().any(|v| budget[v] <= 0)
}

/// Plays `(g, f)` under the rules of the online recursion: Lister names a
/// nonempty set of uncolored vertices, Painter colors an independent subset,
/// the rest of the set loses one unit of budget.
pub fn play_paint_game(g: &Graph, f: &DegreeTable, painter: &Painter, lister: &Lister) -> Result<GameOutcome> {
    if f.len() != g.n() {
        return Err(Error::argument("list-size table length does not match the graph"));
    }
    if let Painter::Kernel(cert) = painter {
        if cert.digraph.n() != g.n() || cert.h_vertices != g.vertices() {
            return Err(Error::argument("the certificate does not span the graph"));
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| !cert.digraph.has_arc(u, v) && !cert.digraph.has_arc(v, u)) {
            return Err(Error::argument(format!("edge {u}-{v} carries no arc of the certificate")));
        }
    }
    let needs_solver = matches!(painter, Painter::SolverOptimal) || matches!(lister, Lister::SolverOptimal);
    if needs_solver {
        Error::check_limit("vertex count", g.n(), MAX_ONLINE_N)?;
    }
    let mut p = PainterState {
        g,
        painter,
        solver: if matches!(painter, Painter::SolverOptimal) { Some(PaintSolver::new(g)?) } else { None },
    };

    if let Lister::Exhaustive = lister {
        return exhaustive(g, f, &mut p);
    }

    let mut lister_solver = if let Lister::SolverOptimal = lister { Some(PaintSolver::new(g)?) } else { None };
    let mut rng = match lister {
        Lister::Random(seed) => Some(ChaCha8Rng::seed_from_u64(*seed)),
        _ => None,
    };
    let mut script = match lister {
        Lister::Scripted(moves) => moves.clone().into_iter(),
        _ => Vec::new().into_iter(),
    };

    let mut remaining = g.vertices();
    let mut budget = f.values().to_vec();
    let mut transcript = Vec::new();
    loop {
        if lost(remaining, &budget) {
            return Ok(GameOutcome { winner: Winner::Lister, transcript, positions: 0 });
        }
        if remaining.is_empty() {
            return Ok(GameOutcome { winner: Winner::Painter, transcript, positions: 0 });
        }
        let s = match lister {
            Lister::Random(_) => {
                let rng = rng.as_mut().expect("rng");
                loop {
                    let s: VertexSet = remaining.iter().filter(|_| rng.gen_bool(0.5)).collect();
                    if !s.is_empty() {
                        break s;
                    }
                }
            }
            Lister::Scripted(_) => match script.next() {
                Some(s) if !(s & remaining).is_empty() => s & remaining,
                Some(s) => return Err(Error::argument(format!("scripted move {s} has no uncolored vertex"))),
                None => return Ok(GameOutcome { winner: Winner::Undecided, transcript, positions: 0 }),
            },
            Lister::SolverOptimal => lister_solver.as_mut().expect("solver").lister_move(remaining, &budget),
            Lister::Exhaustive => unreachable!(),
        };
        let i = p.respond(remaining, &budget, s)?;
        if !i.is_subset(s) || !g.is_independent(i) {
            return Err(Error::argument(format!("Painter answered {s} with {i}")));
        }
        apply(&mut budget, s, i);
        remaining -= i;
        transcript.push(Round { s, i, budgets: budget.clone() });
    }
}

/// Depth-first over every Lister move. Painter's strategies here depend only
/// on the position, so won positions are remembered.
fn exhaustive(g: &Graph, f: &DegreeTable, p: &mut PainterState) -> Result<GameOutcome> {
    fn go(
        p: &mut PainterState,
        remaining: VertexSet,
        budget: &mut Vec<i64>,
        won: &mut HashSet<(VertexSet, Vec<i64>)>,
        line: &mut Vec<Round>,
    ) -> Result<bool> {
        if lost(remaining, budget) {
            return Ok(false);
        }
        if remaining.is_empty() {
            return Ok(true);
        }
        let key = (remaining, remaining.iter().map(|v| budget[v]).collect::<Vec<_>>());
        if won.contains(&key) {
            return Ok(true);
        }
        for s in remaining.subsets().skip(1) {
            let i = p.respond(remaining, budget, s)?;
            if !i.is_subset(s) || !p.g.is_independent(i) {
                return Err(Error::argument(format!("Painter answered {s} with {i}")));
            }
            apply(budget, s, i);
            line.push(Round { s, i, budgets: budget.clone() });
            let ok = go(p, remaining - i, budget, won, line)?;
            for v in s - i {
                budget[v] += 1;
            }
            if !ok {
                return Ok(false);
            }
            line.pop();
        }
        won.insert(key);
        Ok(true)
    }
    let mut won = HashSet::new();
    let mut line = Vec::new();
    let mut budget = f.values().to_vec();
    let ok = go(p, g.vertices(), &mut budget, &mut won, &mut line)?;
    Ok(GameOutcome {
        winner: if ok { Winner::Painter } else { Winner::Lister },
        transcript: line,
        positions: won.len(),
    })
}
