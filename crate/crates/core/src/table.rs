use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// A per-vertex integer table: list sizes `f`, in-degree demands `g`,
/// residual paint budgets. Values may go non-positive when a table is
/// restricted to a subgraph (`f_H(v) = f(v) + d_H(v) - d_G(v)`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeTable(Vec<i64>);

impl DegreeTable {
    pub fn new(values: Vec<i64>) -> Self {
        DegreeTable(values)
    }

    pub fn constant(n: usize, value: i64) -> Self {
        DegreeTable(vec![value; n])
    }

    /// `d₀`: every vertex gets its own degree.
    pub fn degrees(g: &Graph) -> Self {
        DegreeTable((0..g.n()).map(|v| g.degree(v) as i64).collect())
    }

    /// `d(v) + 1` at every vertex.
    pub fn degrees_plus_one(g: &Graph) -> Self {
        DegreeTable((0..g.n()).map(|v| g.degree(v) as i64 + 1).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.0.iter().copied()
    }

    pub fn max(&self) -> Option<i64> {
        self.0.iter().copied().max()
    }

    /// Pointwise `self >= other`.
    pub fn dominates(&self, other: &DegreeTable) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
}

impl Index<usize> for DegreeTable {
    type Output = i64;
    fn index(&self, v: usize) -> &i64 {
        &self.0[v]
    }
}

impl IndexMut<usize> for DegreeTable {
    fn index_mut(&mut self, v: usize) -> &mut i64 {
        &mut self.0[v]
    }
}

impl From<Vec<i64>> for DegreeTable {
    fn from(v: Vec<i64>) -> Self {
        DegreeTable(v)
    }
}
