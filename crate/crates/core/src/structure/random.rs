use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::vertex_set::MAX_VERTICES;

/// Grows a Gallai tree one end block at a time, gluing each new block at a
/// uniformly random existing vertex. Each block is an odd cycle with
/// probability ½ (when `max_block_size >= 3`), otherwise a clique of uniform
/// size in `2..=max_block_size`.
#[derive(Clone, Debug)]
pub struct GallaiTreeGenerator {
    pub block_count: usize,
    pub max_block_size: usize,
    /// Blocks are only glued where the result keeps every degree within this.
    pub max_degree: Option<usize>,
}

enum Block {
    Clique(usize),
    OddCycle(usize),
}

impl Block {
    fn size(&self) -> usize {
        match *self {
            Block::Clique(s) | Block::OddCycle(s) => s,
        }
    }

    fn degree(&self) -> usize {
        match *self {
            Block::Clique(s) => s - 1,
            Block::OddCycle(_) => 2,
        }
    }
}

impl GallaiTreeGenerator {
    fn draw_block<R: Rng>(&self, rng: &mut R) -> Block {
        let max = self.max_block_size;
        if max >= 3 && rng.gen_bool(0.5) {
            let odd_lengths = (max - 1) / 2;
            Block::OddCycle(3 + 2 * rng.gen_range(0..odd_lengths))
        } else {
            Block::Clique(rng.gen_range(2..=max))
        }
    }

    pub fn generate<R: Rng>(&self, rng: &mut R) -> Graph {
        assert!(self.block_count >= 1 && self.max_block_size >= 2);
        let cap = self.max_degree.unwrap_or(usize::MAX);
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut degree: Vec<usize> = Vec::new();
        let mut placed = 0;
        let mut attempts = 0;
        while placed < self.block_count && attempts < 50 * self.block_count {
            attempts += 1;
            let block = self.draw_block(rng);
            if block.degree() > cap {
                continue;
            }
            let fresh = if degree.is_empty() { block.size() } else { block.size() - 1 };
            if degree.len() + fresh > MAX_VERTICES {
                break;
            }
            let mut verts = Vec::with_capacity(block.size());
            if !degree.is_empty() {
                let eligible: Vec<usize> = (0..degree.len())
                    .filter(|&v| degree[v] + block.degree() <= cap)
                    .collect();
                if eligible.is_empty() {
                    continue;
                }
                verts.push(eligible[rng.gen_range(0..eligible.len())]);
            }
            while verts.len() < block.size() {
                verts.push(degree.len());
                degree.push(0);
            }
            match block {
                Block::Clique(s) => {
                    for i in 0..s {
                        for j in i + 1..s {
                            edges.push((verts[i], verts[j]));
                        }
                    }
                }
                Block::OddCycle(s) => {
                    for i in 0..s {
                        edges.push((verts[i], verts[(i + 1) % s]));
                    }
                }
            }
            for &v in &verts {
                degree[v] += block.degree();
            }
            placed += 1;
        }
        Graph::from_edges(degree.len(), &edges).expect("generated edges are valid")
    }
}

/// Reproducible from `seed`.
pub fn random_gallai_tree(block_count: usize, max_block_size: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    GallaiTreeGenerator {
        block_count,
        max_block_size,
        max_degree: None,
    }
    .generate(&mut rng)
}

/// Disjoint union of trees from `generator`, stopping early at the vertex limit.
pub fn random_gallai_forest<R: Rng>(
    generator: &GallaiTreeGenerator,
    trees: usize,
    rng: &mut R,
) -> Graph {
    let mut edges = Vec::new();
    let mut n = 0;
    for _ in 0..trees {
        let t = generator.generate(rng);
        if n + t.n() > MAX_VERTICES {
            break;
        }
        edges.extend(t.edges().map(|(u, v)| (u + n, v + n)));
        n += t.n();
    }
    Graph::from_edges(n, &edges).expect("disjoint union is valid")
}
