//! Turning a corpus description into the list of cases a suite checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Limits, Source, Suite};
use crate::error::{Error, Result};
use crate::graph::{enumerate_graphs, enumerate_hereditary, make_named, read_graph6_file, Graph};
use crate::structure::{random_gallai_forest, GallaiTreeGenerator};
use crate::table::DegreeTable;
use crate::vertex_set::VertexSet;

/// One unit of work. Most suites only look at `graph`; `gallai-count` may fix
/// `k`, and `cut-lemma` samples `f` and `h`.
#[derive(Clone, Debug)]
pub struct Case {
    pub graph: Graph,
    pub label: Option<String>,
    pub k: Option<usize>,
    pub f: Option<DegreeTable>,
    pub h: Option<VertexSet>,
}

impl Case {
    pub fn plain(graph: Graph) -> Self {
        Case {
            graph,
            label: None,
            k: None,
            f: None,
            h: None,
        }
    }

    fn labeled(graph: Graph, label: &str) -> Self {
        Case {
            label: Some(label.to_string()),
            ..Case::plain(graph)
        }
    }
}

/// Suites that only make sense on connected graphs enumerate just those.
fn connected_only(suite: Suite) -> bool {
    !matches!(suite, Suite::InOrientOracle | Suite::GallaiCount | Suite::CutLemma)
}

fn corpus(suite: Suite, source: &Source) -> Result<Vec<Graph>> {
    match source {
        Source::Enumerate { max_n } => {
            let mut out = Vec::new();
            for n in 1..=*max_n {
                let graphs = if suite == Suite::TriangleFreeMic {
                    enumerate_hereditary(n, |g| g.is_triangle_free())?
                } else {
                    enumerate_graphs(n, false)?
                };
                out.extend(graphs.into_iter().filter(|g| !connected_only(suite) || g.is_connected()));
            }
            Ok(out)
        }
        Source::File(path) => read_graph6_file(path),
        Source::Random { .. } => Err(Error::argument(format!(
            "random sources are only available for gallai-count, not {suite}"
        ))),
    }
}

pub(crate) fn build(suite: Suite, source: &Source, limits: &Limits) -> Result<Vec<Case>> {
    match (suite, source) {
        (Suite::GallaiCount, Source::Random { count }) => {
            let mut cases = vec![Case {
                k: Some(6),
                ..Case::labeled(make_named("complete", &[5])?, "K5 with k = 6")
            }];
            for k in 6..=8usize {
                let mut rng = ChaCha8Rng::seed_from_u64(limits.seed ^ (k as u64) << 32);
                for _ in 0..*count {
                    let gen = GallaiTreeGenerator {
                        block_count: rng.gen_range(1..=4),
                        max_block_size: k - 1,
                        max_degree: Some(k - 1),
                    };
                    let trees = rng.gen_range(1..=2);
                    let forest = random_gallai_forest(&gen, trees, &mut rng);
                    cases.push(Case {
                        k: Some(k),
                        ..Case::plain(forest)
                    });
                }
            }
            Ok(cases)
        }
        (Suite::CutLemma, _) => {
            let graphs = corpus(suite, source)?;
            if graphs.is_empty() {
                return Ok(Vec::new());
            }
            let mut rng = ChaCha8Rng::seed_from_u64(limits.seed);
            let mut cases = Vec::with_capacity(limits.samples);
            for _ in 0..limits.samples {
                let g = graphs[rng.gen_range(0..graphs.len())].clone();
                let f = DegreeTable::new((0..g.n()).map(|v| rng.gen_range(1..=g.degree(v) as i64 + 1)).collect());
                let h = loop {
                    let h: VertexSet = g.vertices().iter().filter(|_| rng.gen_bool(0.5)).collect();
                    if !h.is_empty() {
                        break h;
                    }
                };
                cases.push(Case {
                    f: Some(f),
                    h: Some(h),
                    ..Case::plain(g)
                });
            }
            Ok(cases)
        }
        _ => {
            let mut cases = Vec::new();
            if let (Suite::KpClassify, Source::Enumerate { max_n }) = (suite, source) {
                if *max_n >= 4 {
                    cases.push(Case::labeled(make_named("K4_minus_e", &[])?, "K4_minus_e"));
                }
            }
            cases.extend(corpus(suite, source)?.into_iter().map(Case::plain));
            Ok(cases)
        }
    }
}
