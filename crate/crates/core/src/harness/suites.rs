//! The checks behind each suite. Each returns a pass or fail payload, or a
//! skip reason when the graph is outside the statement's hypotheses.

use num_rational::Rational64;
use serde_json::{json, Value};

use super::{Case, Outcome, Suite};
use crate::error::Error;
use crate::graph::{clique_number, cut_size, independence_number, Graph};
use crate::orient::{
    extend_d0_kp_fully, is_f_at, is_f_kp, is_kernel_perfect_on, kp_witnesses, orient_with_indegrees,
    Digraph, OrientationResult, SupergraphMode, MAX_KP_N,
};
use crate::reduce::{check_mic_strength, cut_lemma_check, extract_reducible, extract_reducible_traced};
use crate::structure::{
    gallai_count_check, is_gallai_forest, is_gallai_tree, low_high_split, mic, sigma, triangle_free_mic_check,
};
use crate::table::DegreeTable;
use crate::verify::{is_k_critical, is_online_f_choosable, play_paint_game, Lister, Painter, Winner};
use crate::vertex_set::VertexSet;

type Check = Result<Outcome, Error>;

pub(crate) fn evaluate(suite: Suite, case: &Case) -> Outcome {
    let g = &case.graph;
    let result = match suite {
        Suite::BrooksAlpha => brooks_alpha(g),
        Suite::MicBasics => connected(g).and_then(|()| mic_basics(g)),
        Suite::MainLemmaD0 => connected(g).and_then(|()| main_lemma_d0(g)),
        Suite::KernelGame => connected(g).and_then(|()| kernel_game(g)),
        Suite::InOrientOracle => in_orient_oracle(g),
        Suite::AtClassify => connected(g).and_then(|()| at_classify(g)),
        Suite::KpClassify if case.label.as_deref() == Some("K4_minus_e") => k4_minus_e_pair(g),
        Suite::KpClassify => connected(g).and_then(|()| kp_classify(g)),
        Suite::MicStrength => connected(g).and_then(|()| mic_strength(g)),
        Suite::GallaiCount => gallai_count(g, case.k),
        Suite::TriangleFreeMic => connected(g).and_then(|()| triangle_free(g)),
        Suite::Edges4Critical => connected(g).and_then(|()| edges_4critical(g)),
        Suite::OrePrecursors => connected(g).and_then(|()| ore_precursors(g)),
        Suite::CutLemma => cut_lemma(g, case),
    };
    match result {
        Ok(o) => o,
        Err(e) => Outcome::Skip(e.to_string()),
    }
}

/// Routes a disconnected graph to a skip.
fn connected(g: &Graph) -> Result<(), Error> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::argument("disconnected graph"))
    }
}

fn verdict(ok: bool, payload: Value) -> Outcome {
    if ok {
        Outcome::Pass(payload)
    } else {
        Outcome::Fail(payload)
    }
}

fn skip(reason: &str) -> Check {
    Ok(Outcome::Skip(reason.to_string()))
}

fn arcs_json(d: &Digraph) -> Value {
    json!(d.arc_multiplicities())
}

fn brooks_alpha(g: &Graph) -> Check {
    let delta = g.max_degree();
    if delta < 3 {
        return skip("maximum degree below 3");
    }
    if !g.is_connected() {
        return skip("disconnected graph");
    }
    if clique_number(g) > delta {
        return skip("contains K_{Δ+1}");
    }
    let alpha = independence_number(g, g.vertices());
    Ok(verdict(
        alpha * delta >= g.n(),
        json!({ "alpha": alpha, "max_degree": delta, "n": g.n() }),
    ))
}

fn mic_basics(g: &Graph) -> Check {
    let m = mic(g);
    let gallai = is_gallai_tree(g)?.is_gallai;
    let n = g.n();
    let ok = (m.value + 1 == n) == gallai && (gallai || m.value >= n);
    Ok(verdict(
        ok,
        json!({ "mic": m.value, "witness": m.witness, "n": n, "gallai_tree": gallai }),
    ))
}

fn main_lemma_d0(g: &Graph) -> Check {
    if is_gallai_tree(g)?.is_gallai {
        return skip("Gallai tree");
    }
    let f = DegreeTable::degrees(g);
    let e = match extract_reducible_traced(g, &f, None) {
        Ok(e) => e,
        Err(Error::HypothesisNotMet { cover, required }) => {
            return Ok(Outcome::Fail(json!({
                "error": "hypothesis not met on a non-Gallai tree",
                "cover": cover,
                "required": required,
            })))
        }
        Err(e) => return Err(e),
    };
    let problems = e.certificate.problems(g, &f)?;
    let online = if g.n() <= 6 {
        let (h, f_h, _) = e.certificate.subgame(g);
        Some(is_online_f_choosable(&h, &f_h)?)
    } else {
        None
    };
    let ok = problems.is_empty() && online != Some(false);
    Ok(verdict(
        ok,
        json!({
            "independent_set": e.independent_set,
            "peeled": e.peeled,
            "certificate": e.certificate,
            "problems": problems,
            "online_confirmed": online,
        }),
    ))
}

fn kernel_game(g: &Graph) -> Check {
    if is_gallai_tree(g)?.is_gallai {
        return skip("Gallai tree");
    }
    let cert = extract_reducible(g, &DegreeTable::degrees(g), None)?;
    let (h, f_h, local) = cert.subgame(g);
    let r = play_paint_game(&h, &f_h, &Painter::Kernel(local), &Lister::Exhaustive)?;
    Ok(verdict(
        r.winner == Winner::Painter,
        json!({
            "h_vertices": cert.h_vertices,
            "positions": r.positions,
            "losing_line": r.transcript,
        }),
    ))
}

/// Every orientation's in-degree vector, then each demand table `g <= d`
/// against the flow answer.
fn in_orient_oracle(g: &Graph) -> Check {
    let edges: Vec<_> = g.edges().collect();
    let n = g.n();
    let mut indegrees: Vec<Vec<i64>> = Vec::with_capacity(1 << edges.len());
    for mask in 0u32..1 << edges.len() {
        let mut indeg = vec![0i64; n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            indeg[if mask >> i & 1 == 1 { u } else { v }] += 1;
        }
        indegrees.push(indeg);
    }
    let (mut feasible, mut infeasible) = (0usize, 0usize);
    let mut demand = vec![0i64; n];
    loop {
        let brute = indegrees.iter().any(|x| x.iter().zip(&demand).all(|(a, b)| a >= b));
        let table = DegreeTable::new(demand.clone());
        match orient_with_indegrees(g, &table)? {
            OrientationResult::Oriented(d) => {
                let meets = d.in_degrees().iter().zip(&demand).all(|(&a, &b)| a as i64 >= b);
                if !brute || !meets || !d.covers(g) || d.arc_count() != edges.len() {
                    return Ok(Outcome::Fail(json!({ "demand": demand, "flow": "oriented", "brute_force": brute })));
                }
                feasible += 1;
            }
            OrientationResult::Violating { set, deficiency } => {
                let inside = cut_size(g, set, set)? / 2;
                let across = cut_size(g, set, g.vertices() - set)?;
                let need: i64 = set.iter().map(|v| demand[v]).sum();
                let recheck = need - inside as i64 - across as i64;
                if brute || recheck != deficiency || deficiency <= 0 {
                    return Ok(Outcome::Fail(json!({
                        "demand": demand,
                        "flow": "violating",
                        "set": set,
                        "deficiency": deficiency,
                        "recomputed": recheck,
                        "brute_force": brute,
                    })));
                }
                infeasible += 1;
            }
        }
        // odometer over 0 <= demand(v) <= d(v)
        let mut i = 0;
        loop {
            if i == n {
                return Ok(Outcome::Pass(json!({ "feasible": feasible, "infeasible": infeasible })));
            }
            demand[i] += 1;
            if demand[i] <= g.degree(i) as i64 {
                break;
            }
            demand[i] = 0;
            i += 1;
        }
    }
}

fn at_classify(g: &Graph) -> Check {
    if g.edge_count() > 12 {
        return skip("more than 12 edges");
    }
    let gallai = is_gallai_tree(g)?.is_gallai;
    let at = is_f_at(g, &DegreeTable::degrees(g))?;
    Ok(verdict(
        at.holds != gallai,
        json!({
            "d0_at": at.holds,
            "gallai_tree": gallai,
            "witness": at.witness.as_ref().map(arcs_json),
            "counts": at.counts,
        }),
    ))
}

/// No strict orientation works, and every supergraph witness doubles the
/// edge lying in two triangles (`0-1` in the named labeling).
fn k4_minus_e_pair(g: &Graph) -> Check {
    let f = DegreeTable::degrees(g);
    let strict = kp_witnesses(g, &f, SupergraphMode::StrictOrientation)?;
    let all = kp_witnesses(g, &f, SupergraphMode::Supergraph)?;
    let doubled = all.iter().all(|d| d.has_arc(0, 1) && d.has_arc(1, 0));
    Ok(verdict(
        strict.is_empty() && !all.is_empty() && doubled,
        json!({
            "strict_witnesses": strict.len(),
            "supergraph_witnesses": all.len(),
            "all_double_the_shared_edge": doubled,
        }),
    ))
}

fn kp_classify(g: &Graph) -> Check {
    let gallai = is_gallai_tree(g)?.is_gallai;
    let f = DegreeTable::degrees(g);
    let exhaustive = if g.n() <= MAX_KP_N { Some(is_f_kp(g, &f)?.holds) } else { None };
    if gallai && exhaustive.is_none() {
        return skip("Gallai tree above the exhaustive range");
    }
    let mut ok = exhaustive != Some(gallai);
    let mut constructive = Value::Null;
    if !gallai {
        let cert = extract_reducible(g, &f, None)?;
        let mut problems = cert.problems(g, &f)?;
        let h = cert.h_vertices;
        let steps = if h == g.vertices() { Vec::new() } else { extend_d0_kp_fully(g, h, &cert.digraph)? };
        for (q, d) in &steps {
            if !is_kernel_perfect_on(d, *q)?.kernel_perfect {
                problems.push(format!("extension to {q} is not kernel-perfect"));
            }
            if let Some(v) = q.iter().find(|&v| d.out_degree(v) >= g.degree_in(v, *q)) {
                problems.push(format!("extension to {q} breaks the out-degree bound at {v}"));
            }
        }
        let last = steps.last().map_or(&cert.digraph, |s| &s.1);
        if !last.covers(g) {
            problems.push("final witness does not cover the graph".into());
        }
        ok &= problems.is_empty();
        constructive = json!({
            "h_vertices": h,
            "extension_steps": steps.iter().map(|s| s.0).collect::<Vec<VertexSet>>(),
            "witness": arcs_json(last),
            "problems": problems,
        });
    }
    Ok(verdict(
        ok,
        json!({ "gallai_tree": gallai, "exhaustive_d0_kp": exhaustive, "constructive": constructive }),
    ))
}

fn mic_strength(g: &Graph) -> Check {
    let r = check_mic_strength(g)?;
    // irreducible graphs also have a Gallai forest as their low part
    let low_gallai = if r.irreducible {
        let split = low_high_split(g)?;
        let (low, _) = g.induced(split.low);
        Some(is_gallai_forest(&low).is_gallai)
    } else {
        None
    };
    Ok(verdict(
        r.holds && low_gallai != Some(false),
        json!({
            "irreducible": r.irreducible,
            "mic": r.mic,
            "bound": r.bound,
            "tight": r.irreducible && r.mic as i64 == r.bound,
            "reduction": r.reduction,
            "low_part_gallai_forest": low_gallai,
        }),
    ))
}

fn gallai_count(g: &Graph, k: Option<usize>) -> Check {
    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None => vec![6, 7, 8],
    };
    let mut results = serde_json::Map::new();
    let mut ok = true;
    for k in ks {
        match gallai_count_check(g, k) {
            Ok(r) => {
                ok &= r.holds;
                results.insert(k.to_string(), json!(r));
            }
            Err(Error::Argument(reason)) if k == 8 || results.is_empty() && k < 8 => {
                results.insert(k.to_string(), json!({ "skipped": reason }));
            }
            Err(e) => return Err(e),
        }
    }
    if results.values().all(|r| r.get("skipped").is_some()) {
        let reason = results.values().next().and_then(|r| r["skipped"].as_str()).unwrap_or("");
        return Ok(Outcome::Skip(reason.to_string()));
    }
    Ok(verdict(ok, Value::Object(results)))
}

fn triangle_free(g: &Graph) -> Check {
    if !g.is_triangle_free() {
        return skip("contains a triangle");
    }
    if g.min_degree() == 0 {
        return skip("has a vertex of degree 0");
    }
    let r = triangle_free_mic_check(g)?;
    Ok(verdict(r.holds, json!(r)))
}

fn edges_4critical(g: &Graph) -> Check {
    if g.max_degree() > 4 {
        return skip("maximum degree above 4");
    }
    // high means degree above χ - 1 = 3; for a 4-regular graph the
    // min-degree split would call every vertex low
    let high: VertexSet = (0..g.n()).filter(|&v| g.degree(v) > 3).collect();
    if g.edges_within(high) > 0 {
        return skip("high part has an edge");
    }
    if !is_k_critical(g, 4)? {
        return skip("not 4-critical");
    }
    let n = g.n() as i64;
    let formula = (5 * n - 2 + 2) / 3;
    let m = g.edge_count() as i64;
    Ok(verdict(
        m == formula && n % 3 != 0,
        json!({ "n": n, "edges": m, "ceil_5n_minus_2_over_3": formula }),
    ))
}

fn ore_precursors(g: &Graph) -> Check {
    let split = low_high_split(g)?;
    if !split.gap_one {
        return skip("Δ ≠ δ + 1");
    }
    if !split.high_edgeless {
        return skip("high part has an edge");
    }
    if check_mic_strength(g)?.reduction.is_some() {
        return skip("OC-reducible");
    }
    let delta = split.min_degree as i64;
    let n = g.n() as i64;
    let high = split.high.len() as i64;
    let low = split.low.len() as i64;
    let low_edges = g.edges_within(split.low) as i64;
    let m = mic(g).value as i64;
    let s = sigma(g)?;

    let mut checks = serde_json::Map::new();
    let mut ok = true;
    let mut record = |name: &str, applied: bool, holds: bool, detail: Value| {
        if applied {
            ok &= holds;
        }
        checks.insert(name.into(), json!({ "applied": applied, "holds": holds, "detail": detail }));
    };

    record("mic_below_high_plus_order", true, m < high + n, json!({ "mic": m, "high": high, "n": n }));
    record("low_exceeds_scaled_high", true, (delta - 1) * high < low, json!({ "high": high, "low": low }));
    // 2‖G‖ < (δ + 1/δ)|G|, multiplied through by δ
    let edges = g.edge_count() as i64;
    record(
        "edge_density",
        true,
        2 * edges * delta < (delta * delta + 1) * n,
        json!({ "edges": edges, "delta": delta }),
    );
    record(
        "sigma_identity",
        true,
        (1 + delta) * high == delta * low - 2 * low_edges,
        json!({ "lhs": (1 + delta) * high, "rhs": delta * low - 2 * low_edges }),
    );
    // the σ bound is only derived for δ >= 3; below that its proof step
    // does not go through, so the value is reported but not enforced
    let sigma_bound = (Rational64::from_integer(4) - Rational64::new(2, delta)) * high;
    record(
        "sigma_bound",
        delta >= 3,
        s < sigma_bound,
        json!({ "sigma": s.to_string(), "bound": sigma_bound.to_string(), "reason": (delta < 3).then_some("δ < 3") }),
    );
    let big = split.max_degree >= 7 && clique_number(g) < split.max_degree;
    let low_components = g.components_within(split.low).len() as i64;
    let high_bound = if big {
        Some(Rational64::new(delta * (delta - 3) * low_components, (delta - 1) * (delta - 5)))
    } else {
        None
    };
    record(
        "high_vs_low_components",
        big,
        high_bound.is_none_or(|b| Rational64::from_integer(high) < b),
        json!({
            "high": high,
            "bound": high_bound.map(|b| b.to_string()),
            "reason": (!big).then_some("needs Δ >= 7 and no K_Δ"),
        }),
    );
    let (low_graph, _) = g.induced(split.low);
    record("low_part_gallai_forest", true, is_gallai_forest(&low_graph).is_gallai, Value::Null);
    Ok(verdict(ok, Value::Object(checks)))
}

fn cut_lemma(g: &Graph, case: &Case) -> Check {
    let f = case.f.as_ref().ok_or_else(|| Error::argument("cut-lemma case without f"))?;
    let h = case.h.ok_or_else(|| Error::argument("cut-lemma case without H"))?;
    let r = cut_lemma_check(g, f, h)?;
    Ok(verdict(r.holds, json!({ "f": f, "h": h, "result": r })))
}
