use proptest::prelude::*;

use tempotrav::check::{check_agreement, check_graph, check_index, check_path, check_tree};
use tempotrav::io::{load_edge_list, write_edge_list, LoadOptions};
use tempotrav::paths::{build_occurrence_index, fastest_paths, foremost_from, foremost_paths, shortest_paths, ForemostEngine};
use tempotrav::{traverse, Graph, Labels, TemporalGraph, TraversalKind, VertexId};

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (2usize..16).prop_flat_map(|n| {
        prop::collection::vec((0..n as u32, 0..n as u32, 0i64..25), 0..80).prop_map(move |raw| {
            TemporalGraph::from_edges(n, raw, Labels::Numeric, true).unwrap().0
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph_invariants(g in graph_strategy()) {
        prop_assert!(check_graph(&g).is_empty());
        let stats = g.stats();
        prop_assert_eq!(stats.m, g.vertices().map(|u| g.out_degree(u)).sum::<usize>());
    }

    #[test]
    fn edge_list_round_trip(g in graph_strategy()) {
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        let (h, _) = load_edge_list::<i64, _>(buf.as_slice(), LoadOptions::default()).unwrap();
        let mut a: Vec<_> = g.edges().map(|e| (g.label(e.src), g.label(e.dst), e.t)).collect();
        let mut b: Vec<_> = h.edges().map(|e| (h.label(e.src), h.label(e.dst), e.t)).collect();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn traversal_invariants(g in graph_strategy(), src in 0u32..16, t_s in 0i64..25) {
        let s = VertexId(src % g.vertex_count() as u32);
        let trees: Vec<_> = TraversalKind::ALL.iter().map(|&k| traverse(&g, s, t_s, k).unwrap()).collect();
        for t in &trees {
            let v = check_tree(&g, t);
            prop_assert!(v.is_empty(), "{:?}", v);
        }
        let refs: Vec<_> = trees.iter().collect();
        prop_assert!(check_agreement(&refs).is_empty());
        prop_assert!(g.project_static().reachable_count(s) >= trees[0].reachable_count());

        let index = build_occurrence_index(&trees[1]).unwrap();
        prop_assert!(check_index(&index).is_empty());
        let from_index = foremost_from(&index, t_s).unwrap();
        let v1 = foremost_paths(&g, s, t_s, ForemostEngine::DfsV1).unwrap();
        let bf = foremost_paths(&g, s, t_s, ForemostEngine::Bfs).unwrap();
        prop_assert_eq!(v1.arrivals(), bf.arrivals());
        prop_assert_eq!(v1.arrivals(), from_index);

        let fastest = fastest_paths(&index, &trees[1], t_s, i64::MAX).unwrap();
        let shortest = shortest_paths(&g, s, t_s).unwrap();
        for v in g.vertices() {
            for p in [v1.path(v), bf.path(v), fastest.path(v), shortest.path(v)].into_iter().flatten() {
                prop_assert!(check_path(&p, s, v, t_s).is_empty());
            }
        }
    }

    #[test]
    fn foremost_from_matches_rerun(g in graph_strategy(), src in 0u32..16, ts in prop::collection::vec(0i64..25, 1..6)) {
        let s = VertexId(src % g.vertex_count() as u32);
        let index = build_occurrence_index(&traverse(&g, s, 0, TraversalKind::DfsV2).unwrap()).unwrap();
        for t in ts {
            let rerun = foremost_paths(&g, s, t, ForemostEngine::DfsV1).unwrap().arrivals();
            prop_assert_eq!(foremost_from(&index, t).unwrap(), rerun);
        }
    }

    #[test]
    fn later_start_never_grows(g in graph_strategy(), src in 0u32..16, a in 0i64..25, b in 0i64..25) {
        let s = VertexId(src % g.vertex_count() as u32);
        let (lo, hi) = (a.min(b), a.max(b));
        for kind in TraversalKind::ALL {
            let early = traverse(&g, s, lo, kind).unwrap();
            let late = traverse(&g, s, hi, kind).unwrap();
            prop_assert!(late.log().len() <= early.log().len());
            prop_assert!(late.reachable_count() <= early.reachable_count());
        }
    }
}
