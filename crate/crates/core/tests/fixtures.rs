use tempotrav::paths::{build_occurrence_index, fastest_paths, foremost_paths, shortest_paths, ForemostEngine};
use tempotrav::{classify_edges, dfs_v1, dfs_v2, bfs, extract_cycles, fixtures, EdgeLabel, Graph, TemporalEdge, VertexId};

fn v(g: &Graph, name: &str) -> VertexId {
    g.resolve(name).unwrap()
}

fn edge_id(g: &Graph, src: &str, dst: &str, t: i64) -> u32 {
    let (s, d) = (v(g, src), v(g, dst));
    g.edges().position(|e| e.src == s && e.dst == d && e.t == t).unwrap() as u32
}

fn names(g: &Graph, vs: &[VertexId]) -> Vec<String> {
    vs.iter().map(|&x| g.label(x)).collect()
}

#[test]
fn g1_shape() {
    let g = fixtures::g1();
    assert_eq!((g.vertex_count(), g.edge_count()), (6, 12));
    let s = g.stats();
    assert_eq!(s.static_edges, 9);
    assert_eq!(g.out_degree(v(&g, "a")), 4);
}

#[test]
fn g1_reachability_excludes_h() {
    let g = fixtures::g1();
    let a = v(&g, "a");
    for tree in [dfs_v1(&g, a, 2).unwrap(), dfs_v2(&g, a, 2).unwrap(), bfs(&g, a, 2).unwrap()] {
        assert_eq!(names(&g, &tree.reachable_set()), ["a", "b", "c", "f", "g"]);
    }
    // the static projection reaches h through a -> f -> h
    assert_eq!(g.project_static().reachable_count(a), 6);
}

#[test]
fn g1_dfs_v1_labels() {
    let g = fixtures::g1();
    let tree = dfs_v1(&g, v(&g, "a"), 2).unwrap();
    let c = classify_edges(&tree, &g).unwrap();
    assert_eq!(c.label(edge_id(&g, "b", "a", 8)), EdgeLabel::Backward);
    assert_eq!(c.label(edge_id(&g, "c", "b", 6)), EdgeLabel::Cross);
    assert_eq!(c.label(edge_id(&g, "a", "f", 7)), EdgeLabel::Forward);
    for (s, d, t) in [("a", "b", 1), ("b", "c", 4), ("f", "h", 2)] {
        assert_eq!(c.label(edge_id(&g, s, d, t)), EdgeLabel::NonTraversed);
    }
    let total: usize = [
        EdgeLabel::Tree,
        EdgeLabel::Forward,
        EdgeLabel::Backward,
        EdgeLabel::Cross,
        EdgeLabel::NonTraversed,
    ]
    .iter()
    .map(|&l| c.count(l))
    .sum();
    assert_eq!(total, 12);
}

#[test]
fn g1_dfs_v2_intervals_and_cycle() {
    let g = fixtures::g1();
    let tree = dfs_v2(&g, v(&g, "a"), 2).unwrap();
    let c = classify_edges(&tree, &g).unwrap();
    assert_eq!(c.label(edge_id(&g, "a", "f", 7)), EdgeLabel::Tree);

    let index = build_occurrence_index(&tree).unwrap();
    let intervals: Vec<(i64, i64)> = index.entries(v(&g, "c")).iter().map(|e| (e.t_start, e.t_end)).collect();
    assert_eq!(intervals, [(6, 7), (3, 5)]);

    let cycles = extract_cycles(&tree, &g).unwrap();
    let (a, f, gg) = (v(&g, "a").0, v(&g, "f").0, v(&g, "g").0);
    let expected = vec![TemporalEdge::new(a, f, 7), TemporalEdge::new(f, gg, 8), TemporalEdge::new(gg, a, 9)];
    assert!(cycles.iter().any(|c| c.edges == expected), "{cycles:?}");
    assert!(cycles.iter().all(|c| c.is_valid()));
}

#[test]
fn g1_paths() {
    let g = fixtures::g1();
    let (a, c) = (v(&g, "a"), v(&g, "c"));
    for engine in [ForemostEngine::DfsV1, ForemostEngine::Bfs] {
        assert_eq!(foremost_paths(&g, a, 2, engine).unwrap().arrival(c), Some(5));
    }
    let tree = dfs_v2(&g, a, 2).unwrap();
    let index = build_occurrence_index(&tree).unwrap();
    let fp = fastest_paths(&index, &tree, 2, i64::MAX).unwrap();
    assert_eq!(fp.duration(c), Some(1));
    let p = fp.path(c).unwrap();
    assert_eq!((p.t_start(), p.t_end()), (Some(6), Some(7)));
    assert_eq!(fp.duration(a), Some(0));
    assert_eq!(fp.path(a).unwrap().hops(), 0);
}

#[test]
fn g5_shortest_and_bfs_levels() {
    let g = fixtures::g5();
    let (a, b, f, gg) = (v(&g, "a"), v(&g, "b"), v(&g, "f"), v(&g, "g"));
    let sp = shortest_paths(&g, a, 0).unwrap();
    assert_eq!(sp.hops(f), Some(1));
    assert_eq!(sp.path(f).unwrap().edges(), [TemporalEdge::new(a.0, f.0, 7)]);
    assert_eq!(sp.hops(gg), Some(3));
    let to_g = sp.path(gg).unwrap();
    assert_eq!(
        to_g.edges(),
        [TemporalEdge::new(a.0, b.0, 2), TemporalEdge::new(b.0, f.0, 3), TemporalEdge::new(f.0, gg.0, 3)]
    );
    // the f on the way to g is not f's shortest occurrence
    let via = to_g.edges()[1];
    assert_eq!(via.dst, f);
    assert_ne!(Some(2), sp.hops(f));
    assert_eq!(sp.hops(a), Some(0));

    let tree = sp.tree();
    let levels: Vec<(u32, i64)> = tree
        .occurrences_of(f)
        .iter()
        .map(|&o| (tree.occurrence(o).dist(), tree.occurrence(o).sigma()))
        .collect();
    assert_eq!(levels, [(1, 7), (2, 3)]);
}
