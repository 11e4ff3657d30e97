use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{block_decomposition, Graph};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockKind {
    Complete,
    OddCycle,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GallaiVerdict {
    pub is_gallai: bool,
    pub blocks: Vec<(VertexSet, BlockKind)>,
    /// First block that is neither complete nor an odd cycle.
    pub offending: Option<VertexSet>,
}

pub fn classify_block(g: &Graph, block: VertexSet) -> BlockKind {
    let k = block.len();
    let m = g.edges_within(block);
    if m == k * (k - 1) / 2 {
        BlockKind::Complete
    } else if k >= 3 && k % 2 == 1 && m == k && block.iter().all(|v| g.degree_in(v, block) == 2) {
        BlockKind::OddCycle
    } else {
        BlockKind::Other
    }
}

/// Every block complete or an odd cycle, tested across all components.
pub fn is_gallai_forest(g: &Graph) -> GallaiVerdict {
    let bt = block_decomposition(g);
    let blocks: Vec<_> = bt
        .blocks
        .iter()
        .map(|&b| (b, classify_block(g, b)))
        .collect();
    let offending = blocks
        .iter()
        .find(|(_, k)| *k == BlockKind::Other)
        .map(|&(b, _)| b);
    GallaiVerdict {
        is_gallai: offending.is_none(),
        blocks,
        offending,
    }
}

pub fn is_gallai_tree(g: &Graph) -> Result<GallaiVerdict> {
    if !g.is_connected() {
        return Err(Error::argument(
            "Gallai tree test needs a connected graph; use is_gallai_forest",
        ));
    }
    Ok(is_gallai_forest(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_named;

    fn tree(name: &str, p: &[usize]) -> bool {
        is_gallai_tree(&make_named(name, p).unwrap()).unwrap().is_gallai
    }

    #[test]
    fn examples() {
        assert!(tree("cycle", &[5]));
        assert!(!tree("cycle", &[4]));
        assert!(!tree("K4_minus_e", &[]));
        assert!(tree("complete", &[5]));
        assert!(tree("path", &[4]));
        let v = is_gallai_tree(&make_named("K4_minus_e", &[]).unwrap()).unwrap();
        assert_eq!(v.offending, Some(VertexSet::full(4)));
    }

    #[test]
    fn disconnected_tree_input_rejected() {
        let g = Graph::empty(2);
        assert!(matches!(is_gallai_tree(&g), Err(Error::Argument(_))));
        assert!(is_gallai_forest(&g).is_gallai);
    }
}
