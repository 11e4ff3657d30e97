use micolor::graph::{encode_graph6, parse_graph6};
use micolor::orient::{alon_tarsi_diff, build_kernel_perfect, find_kernel, is_kernel, is_kernel_perfect, KernelPerfectBuild};
use micolor::structure::{find_even_cycle_one_chord, is_gallai_tree, mic, mic_within};
use micolor::verify::{is_f_choosable, is_online_f_choosable};
use micolor::{cut_size, DegreeTable, Digraph, Graph, VertexSet};
use proptest::prelude::*;

/// `(n, edge bits)` over the upper triangle.
fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut i = 0;
            for v in 0..n {
                for u in 0..v {
                    if bits[i] {
                        g.add_edge(u, v);
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

fn subset(n: usize) -> impl Strategy<Value = VertexSet> {
    any::<u64>().prop_map(move |b| VertexSet::from_bits(b) & VertexSet::full(n))
}

fn graph_and_two_sets(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet, VertexSet)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), subset(n), subset(n))
    })
}

/// A graph with a list size `1..=d(v)+1` at every vertex.
fn graph_and_f(max_n: usize) -> impl Strategy<Value = (Graph, DegreeTable)> {
    graph(max_n).prop_flat_map(|g| {
        let caps: Vec<_> = (0..g.n()).map(|v| 1..=g.degree(v) as i64 + 1).collect();
        (Just(g), caps).prop_map(|(g, f)| (g, DegreeTable::new(f)))
    })
}

fn dag(max_n: usize) -> impl Strategy<Value = Digraph> {
    graph(max_n).prop_map(|g| {
        // every edge points from the smaller label
        let arcs: Vec<_> = g.edges().map(|(u, v)| (u.min(v), u.max(v))).collect();
        Digraph::from_arcs(g.n(), &arcs).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn cut_size_symmetric_and_splits((g, a, b) in graph_and_two_sets(12)) {
        let ab = cut_size(&g, a, b).unwrap();
        prop_assert_eq!(ab, cut_size(&g, b, a).unwrap());
        let both = a & b;
        let split = cut_size(&g, a - b, b - a).unwrap() + cut_size(&g, both, both).unwrap()
            + cut_size(&g, a - b, both).unwrap() + cut_size(&g, both, b - a).unwrap();
        prop_assert_eq!(ab, split);
        // the same pair counted both ways inside A ∩ B
        prop_assert_eq!(cut_size(&g, both, both).unwrap(), 2 * g.edges_within(both));
    }

    #[test]
    fn degree_sum_is_twice_edges(g in graph(20)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn graph6_round_trip(g in graph(40)) {
        let s = encode_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn mic_grows_by_at_least_one_per_vertex((g, s) in graph(9).prop_flat_map(|g| { let n = g.n(); (Just(g), subset(n)) })) {
        prop_assume!(g.is_connected() && !s.is_empty());
        let (h, _) = g.induced(s);
        prop_assume!(h.is_connected());
        let whole = mic(&g).value;
        prop_assert!(whole >= mic_within(&g, s).value + g.n() - s.len());
        prop_assert!(whole + 1 >= g.n());
    }

    #[test]
    fn even_cycle_with_at_most_one_chord(g in graph(9)) {
        let n = g.n();
        let two_connected = n >= 3 && g.is_connected() && (0..n).all(|v| g.induced(g.vertices().without(v)).0.is_connected());
        let odd_cycle = n % 2 == 1 && g.edge_count() == n && (0..n).all(|v| g.degree(v) == 2);
        prop_assume!(two_connected && !odd_cycle && !g.is_clique(g.vertices()));
        let c = find_even_cycle_one_chord(&g).unwrap();
        let k = c.cycle.len();
        prop_assert!(k.is_multiple_of(2) && k >= 4);
        for i in 0..k {
            prop_assert!(g.has_edge(c.cycle[i], c.cycle[(i + 1) % k]));
        }
        let span: VertexSet = c.cycle.iter().collect();
        prop_assert_eq!(span.len(), k);
        prop_assert!(g.edges_within(span) <= k + 1);
    }

    #[test]
    fn built_orientations_are_kernel_perfect((g, f) in graph_and_f(8)) {
        let a = mic(&g).witness;
        if let KernelPerfectBuild::Built(d) = build_kernel_perfect(&g, a, &f).unwrap() {
            prop_assert!(is_kernel_perfect(&d).unwrap().kernel_perfect);
            for v in 0..g.n() {
                prop_assert!((d.out_degree(v) as i64) < f[v]);
            }
            let k = find_kernel(&d, Some(a)).unwrap().unwrap();
            prop_assert!(is_kernel(&d, VertexSet::full(d.n()), k));
        }
    }

    #[test]
    fn acyclic_digraphs_have_one_eulerian_subgraph(d in dag(8)) {
        let c = alon_tarsi_diff(&d).unwrap();
        prop_assert_eq!(c.even, 1);
        prop_assert_eq!(c.odd, 0);
        prop_assert_eq!(c.diff(), 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn online_implies_offline((g, f) in graph_and_f(6)) {
        prop_assume!(f.iter().sum::<i64>() <= 20);
        if is_online_f_choosable(&g, &f).unwrap() {
            prop_assert!(is_f_choosable(&g, &f).unwrap().choosable);
        }
    }

    #[test]
    fn more_colors_never_hurt((g, f) in graph_and_f(6), bump in any::<u64>()) {
        prop_assume!(is_online_f_choosable(&g, &f).unwrap());
        let more: Vec<i64> = (0..g.n()).map(|v| f[v] + (bump >> v & 1) as i64).collect();
        prop_assert!(is_online_f_choosable(&g, &DegreeTable::new(more)).unwrap());
    }

    #[test]
    fn degree_lists_paint_exactly_non_gallai(g in graph(6)) {
        prop_assume!(g.is_connected());
        let online = is_online_f_choosable(&g, &DegreeTable::degrees(&g)).unwrap();
        prop_assert_eq!(online, !is_gallai_tree(&g).unwrap().is_gallai);
    }
}
