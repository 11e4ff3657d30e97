use serde::Serialize;

use super::mic::mic;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Absolute slack allowed on the logarithmic side.
pub const LOG_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TriangleFreeMic {
    pub mic: usize,
    /// `¼ Σ_v lg d(v)`.
    pub bound: f64,
    pub holds: bool,
}

pub fn triangle_free_mic_check(g: &Graph) -> Result<TriangleFreeMic> {
    if !g.is_triangle_free() {
        return Err(Error::argument("graph contains a triangle"));
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(Error::argument(format!("vertex {v} has degree 0")));
    }
    let bound: f64 = (0..g.n()).map(|v| (g.degree(v) as f64).log2()).sum::<f64>() / 4.0;
    let m = mic(g).value;
    Ok(TriangleFreeMic {
        mic: m,
        bound,
        holds: m as f64 + LOG_TOLERANCE >= bound,
    })
}
