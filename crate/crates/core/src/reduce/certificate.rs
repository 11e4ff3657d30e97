use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orient::{is_kernel_perfect_on, Digraph};
use crate::table::DegreeTable;
use crate::vertex_set::VertexSet;

/// A nonempty induced subgraph `H`, a kernel-perfect orientation `D` of it
/// with `d⁺(v) <= f_H(v) - 1`, and the list sizes `f_H`. By the kernel
/// strategy Painter wins the online game on `(H, f_H)`.
///
/// `digraph` and `f_h` use the vertex labels of the parent graph; `f_h` is 0
/// outside `H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawCertificate", into = "RawCertificate")]
pub struct Certificate {
    pub h_vertices: VertexSet,
    pub digraph: Digraph,
    pub f_h: DegreeTable,
}

/// JSON layout: `vertices` sorted, `arcs` as `[tail, head, multiplicity]`,
/// `f_h` aligned with `vertices`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCertificate {
    n: usize,
    vertices: Vec<usize>,
    arcs: Vec<(usize, usize, usize)>,
    f_h: Vec<i64>,
}

impl From<Certificate> for RawCertificate {
    fn from(c: Certificate) -> Self {
        RawCertificate {
            n: c.digraph.n(),
            vertices: c.h_vertices.to_vec(),
            arcs: c.digraph.arc_multiplicities(),
            f_h: c.h_vertices.iter().map(|v| c.f_h[v]).collect(),
        }
    }
}

impl TryFrom<RawCertificate> for Certificate {
    type Error = String;
    fn try_from(r: RawCertificate) -> std::result::Result<Self, String> {
        if r.vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err("vertices must be strictly increasing".into());
        }
        if let Some(&v) = r.vertices.iter().find(|&&v| v >= r.n) {
            return Err(format!("vertex {v} out of range for n = {}", r.n));
        }
        if r.f_h.len() != r.vertices.len() {
            return Err(format!("f_h has {} entries for {} vertices", r.f_h.len(), r.vertices.len()));
        }
        if r.arcs.iter().any(|&(_, _, m)| m == 0) {
            return Err("arc multiplicity must be positive".into());
        }
        let arcs: Vec<(usize, usize)> = r
            .arcs
            .iter()
            .flat_map(|&(u, v, m)| std::iter::repeat_n((u, v), m))
            .collect();
        let digraph = Digraph::from_arcs(r.n, &arcs).map_err(|e| e.to_string())?;
        let mut f_h = DegreeTable::constant(r.n, 0);
        for (&v, &x) in r.vertices.iter().zip(&r.f_h) {
            f_h[v] = x;
        }
        Ok(Certificate {
            h_vertices: r.vertices.iter().collect(),
            digraph,
            f_h,
        })
    }
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificates serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::CertificateParse(e.to_string()))
    }

    /// Every invariant that fails for the originating `(g, f)`; empty when
    /// the certificate is valid. Kernel-perfectness is checked exhaustively.
    pub fn problems(&self, g: &Graph, f: &DegreeTable) -> Result<Vec<String>> {
        let mut out = Vec::new();
        let h = self.h_vertices;
        if self.digraph.n() != g.n() || f.len() != g.n() || self.f_h.len() != g.n() {
            out.push(format!(
                "size mismatch: graph {}, digraph {}, f {}, f_h {}",
                g.n(),
                self.digraph.n(),
                f.len(),
                self.f_h.len()
            ));
            return Ok(out);
        }
        if h.is_empty() {
            out.push("H is empty".into());
            return Ok(out);
        }
        for &(u, v) in self.digraph.arcs() {
            if !h.contains(u) || !h.contains(v) {
                out.push(format!("arc {u}->{v} leaves H"));
            } else if !g.has_edge(u, v) {
                out.push(format!("arc {u}->{v} is not an edge"));
            }
        }
        for (u, v) in g.edges() {
            if h.contains(u) && h.contains(v) && !self.digraph.has_arc(u, v) && !self.digraph.has_arc(v, u) {
                out.push(format!("edge {u}-{v} of H carries no arc"));
            }
        }
        for v in h {
            let expect = f[v] + g.degree_in(v, h) as i64 - g.degree(v) as i64;
            if self.f_h[v] != expect {
                out.push(format!("f_h({v}) = {} but f + d_H - d_G = {expect}", self.f_h[v]));
            }
            if self.digraph.out_degree(v) as i64 > self.f_h[v] - 1 {
                out.push(format!(
                    "d+({v}) = {} exceeds f_h({v}) - 1 = {}",
                    self.digraph.out_degree(v),
                    self.f_h[v] - 1
                ));
            }
        }
        let kp = is_kernel_perfect_on(&self.digraph, h)?;
        if let Some(s) = kp.offending {
            out.push(format!("induced subdigraph on {s} has no kernel"));
        }
        Ok(out)
    }

    pub fn is_valid(&self, g: &Graph, f: &DegreeTable) -> Result<bool> {
        Ok(self.problems(g, f)?.is_empty())
    }

    /// The game the certificate wins, relabeled onto `0..|H|`: `(H, f_H)`
    /// and the certificate with `h_vertices` spanning `H`.
    pub fn subgame(&self, g: &Graph) -> (Graph, DegreeTable, Certificate) {
        let (h, map) = g.induced(self.h_vertices);
        let mut index = vec![usize::MAX; g.n()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let arcs: Vec<_> = self
            .digraph
            .arcs()
            .iter()
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        let f_h = DegreeTable::new(map.iter().map(|&v| self.f_h[v]).collect());
        let cert = Certificate {
            h_vertices: h.vertices(),
            digraph: Digraph::from_arcs(h.n(), &arcs).expect("arcs stay inside H"),
            f_h: f_h.clone(),
        };
        (h, f_h, cert)
    }
}
