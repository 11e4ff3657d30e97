//! Named graph families with fixed labelings.
//!
//! | name                | params | labeling                                                        |
//! |---------------------|--------|-----------------------------------------------------------------|
//! | `complete`          | `n`    | `0..n` pairwise adjacent                                        |
//! | `cycle`             | `n>=3` | `i ~ i+1 (mod n)`                                               |
//! | `path`              | `n>=1` | `i ~ i+1`                                                       |
//! | `complete_bipartite`| `a, b` | parts `0..a` and `a..a+b`                                       |
//! | `petersen`          |        | outer cycle `0..5`, spokes `i ~ i+5`, inner `i+5 ~ (i+2)%5+5`   |
//! | `moser_spindle`     |        | diamonds `{0,1,2,3}`, `{0,4,5,6}` with tips `0,3` / `0,6`, edge `3-6` |
//! | `K4_minus_e`        |        | `0-1` is the edge in two triangles; `2,3` nonadjacent           |
//! | `O_n`               | `n>=3` | `K_n - xy` on `0..n` with `x=0, y=1`; `K_{n-1}` on `n..2n-1`; the first `⌊(n-1)/2⌋` clique vertices join `x`, the rest join `y` |

use super::Graph;
use crate::error::{Error, Result};
use crate::vertex_set::MAX_VERTICES;

pub const NAMED_FAMILIES: &[&str] = &[
    "complete",
    "cycle",
    "path",
    "complete_bipartite",
    "petersen",
    "moser_spindle",
    "K4_minus_e",
    "O_n",
];

fn param(name: &str, params: &[usize], arity: usize) -> Result<()> {
    if params.len() != arity {
        return Err(Error::Construction(format!(
            "{name} takes {arity} parameter(s), got {}",
            params.len()
        )));
    }
    Ok(())
}

fn check_size(name: &str, n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::Construction(format!(
            "{name} would have {n} vertices (limit {MAX_VERTICES})"
        )));
    }
    Ok(())
}

fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn make_named(name: &str, params: &[usize]) -> Result<Graph> {
    let g = match name {
        "complete" => {
            param(name, params, 1)?;
            check_size(name, params[0])?;
            complete(params[0])
        }
        "cycle" => {
            param(name, params, 1)?;
            let n = params[0];
            if n < 3 {
                return Err(Error::Construction(format!("cycle needs n >= 3, got {n}")));
            }
            check_size(name, n)?;
            let mut g = Graph::empty(n);
            for i in 0..n {
                g.add_edge(i, (i + 1) % n);
            }
            g
        }
        "path" => {
            param(name, params, 1)?;
            let n = params[0];
            if n < 1 {
                return Err(Error::Construction("path needs n >= 1".into()));
            }
            check_size(name, n)?;
            let mut g = Graph::empty(n);
            for i in 1..n {
                g.add_edge(i - 1, i);
            }
            g
        }
        "complete_bipartite" => {
            param(name, params, 2)?;
            let (a, b) = (params[0], params[1]);
            check_size(name, a + b)?;
            let mut g = Graph::empty(a + b);
            for u in 0..a {
                for v in a..a + b {
                    g.add_edge(u, v);
                }
            }
            g
        }
        "petersen" => {
            param(name, params, 0)?;
            let mut g = Graph::empty(10);
            for i in 0..5 {
                g.add_edge(i, (i + 1) % 5);
                g.add_edge(i, i + 5);
                g.add_edge(i + 5, (i + 2) % 5 + 5);
            }
            g
        }
        "moser_spindle" => {
            param(name, params, 0)?;
            Graph::from_edges(
                7,
                &[
                    (0, 1),
                    (0, 2),
                    (1, 2),
                    (1, 3),
                    (2, 3),
                    (0, 4),
                    (0, 5),
                    (4, 5),
                    (4, 6),
                    (5, 6),
                    (3, 6),
                ],
            )?
        }
        "K4_minus_e" => {
            param(name, params, 0)?;
            let mut g = complete(4);
            g.remove_edge(2, 3);
            g
        }
        "O_n" => {
            param(name, params, 1)?;
            let n = params[0];
            if n < 3 {
                return Err(Error::Construction(format!("O_n needs n >= 3, got {n}")));
            }
            check_size(name, 2 * n - 1)?;
            let mut g = Graph::empty(2 * n - 1);
            for u in 0..n {
                for v in u + 1..n {
                    if (u, v) != (0, 1) {
                        g.add_edge(u, v);
                    }
                }
            }
            for u in n..2 * n - 1 {
                for v in u + 1..2 * n - 1 {
                    g.add_edge(u, v);
                }
            }
            let to_x = (n - 1) / 2;
            for (i, u) in (n..2 * n - 1).enumerate() {
                g.add_edge(u, if i < to_x { 0 } else { 1 });
            }
            g
        }
        _ => {
            return Err(Error::Construction(format!(
                "unknown family {name:?}; known: {}",
                NAMED_FAMILIES.join(", ")
            )))
        }
    };
    Ok(g)
}
