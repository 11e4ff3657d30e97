use std::fmt::Write;

use super::Graph;
use crate::orient::Digraph;

pub fn graph_to_dot(g: &Graph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.n() {
        let _ = writeln!(s, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}

/// Parallel arcs are collapsed into one edge labeled with the multiplicity;
/// an opposite pair is drawn as two arcs.
pub fn digraph_to_dot(d: &Digraph) -> String {
    let mut s = String::from("digraph D {\n");
    for v in 0..d.n() {
        let _ = writeln!(s, "  {v};");
    }
    for (u, v, m) in d.arc_multiplicities() {
        if m == 1 {
            let _ = writeln!(s, "  {u} -> {v};");
        } else {
            let _ = writeln!(s, "  {u} -> {v} [label=\"x{m}\"];");
        }
    }
    s.push_str("}\n");
    s
}
