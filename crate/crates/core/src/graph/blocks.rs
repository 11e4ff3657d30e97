use serde::Serialize;

use super::Graph;
use crate::vertex_set::VertexSet;

/// Blocks (maximal 2-connected subgraphs, bridges, isolated vertices) and
/// the cutvertices joining them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockTree {
    /// Sorted by smallest member.
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
    /// `containing[v]`: indices into `blocks` of the blocks holding `v`.
    pub containing: Vec<Vec<usize>>,
}

impl BlockTree {
    /// Blocks containing exactly one cutvertex (or none, for a lone block).
    pub fn end_blocks(&self) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&i| (self.blocks[i] & self.cut_vertices).len() <= 1)
            .collect()
    }
}

/// Hopcroft-Tarjan lowpoint search with an edge stack.
pub fn block_decomposition(g: &Graph) -> BlockTree {
    struct Dfs<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<VertexSet>,
        cuts: VertexSet,
    }

    impl Dfs<'_> {
        fn visit(&mut self, u: usize, parent: Option<usize>) {
            self.time += 1;
            self.disc[u] = self.time;
            self.low[u] = self.time;
            let mut children = 0;
            for w in self.g.neighbors(u) {
                if self.disc[w] == 0 {
                    children += 1;
                    self.stack.push((u, w));
                    self.visit(w, Some(u));
                    self.low[u] = self.low[u].min(self.low[w]);
                    if self.low[w] >= self.disc[u] {
                        if parent.is_some() || children > 1 {
                            self.cuts.insert(u);
                        }
                        let mut block = VertexSet::EMPTY;
                        while let Some((a, b)) = self.stack.pop() {
                            block.insert(a);
                            block.insert(b);
                            if (a, b) == (u, w) {
                                break;
                            }
                        }
                        self.blocks.push(block);
                    }
                } else if Some(w) != parent && self.disc[w] < self.disc[u] {
                    self.stack.push((u, w));
                    self.low[u] = self.low[u].min(self.disc[w]);
                }
            }
        }
    }

    let n = g.n();
    let mut dfs = Dfs {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
        cuts: VertexSet::EMPTY,
    };
    for v in 0..n {
        if dfs.disc[v] == 0 {
            if g.degree(v) == 0 {
                dfs.disc[v] = usize::MAX;
                dfs.blocks.push(VertexSet::singleton(v));
            } else {
                dfs.visit(v, None);
            }
        }
    }
    let mut blocks = dfs.blocks;
    blocks.sort_by_key(|b| (b.first(), b.bits()));
    let mut containing = vec![Vec::new(); n];
    for (i, b) in blocks.iter().enumerate() {
        for v in *b {
            containing[v].push(i);
        }
    }
    BlockTree {
        blocks,
        cut_vertices: dfs.cuts,
        containing,
    }
}
