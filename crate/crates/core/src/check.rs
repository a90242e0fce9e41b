//! Structural invariant checkers for graphs, traversal trees, indexes and
//! path answers. Each returns the list of violations found (empty = ok).

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::graph::{TemporalGraph, VertexId};
use crate::paths::{OccurrenceIndex, PathAnswer};
use crate::time::Time;
use crate::traversal::{extract_cycles, EdgeLabel, TraversalKind, TraversalTree};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub invariant: &'static str,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.invariant, self.detail)
    }
}

#[derive(Default)]
struct Sink(Vec<Violation>);

impl Sink {
    fn fail(&mut self, invariant: &'static str, detail: impl Into<String>) {
        self.0.push(Violation { invariant, detail: detail.into() });
    }

    fn ensure(&mut self, ok: bool, invariant: &'static str, detail: impl FnOnce() -> String) {
        if !ok {
            self.fail(invariant, detail());
        }
    }
}

pub fn check_graph<T: Time>(g: &TemporalGraph<T>) -> Vec<Violation> {
    let mut s = Sink::default();
    let mut in_degree = vec![0usize; g.vertex_count()];
    for u in g.vertices() {
        let range = g.out_range(u);
        for e in range.clone() {
            let v = g.dst_at(e);
            s.ensure(v != u, "no-self-loops", || format!("edge {e} is a loop at {u}"));
            s.ensure(v.index() < g.vertex_count(), "vertex-range", || format!("edge {e} points to {v}"));
            in_degree[v.index().min(g.vertex_count() - 1)] += 1;
            if e > range.start {
                let prev = (g.time_at(e - 1), g.dst_at(e - 1));
                s.ensure(prev < (g.time_at(e), v), "chronological-storage", || {
                    format!("edges {} and {e} of {u} out of order", e - 1)
                });
            }
        }
        let mut pairs = HashSet::new();
        for e in range {
            s.ensure(pairs.insert((g.dst_at(e), g.time_at(e))), "distinct-pair-times", || {
                format!("duplicate edge ({u}, {}, {})", g.dst_at(e), g.time_at(e))
            });
        }
    }
    for v in g.vertices() {
        s.ensure(g.in_degree(v) == in_degree[v.index()], "in-degree", || {
            format!("{v}: stored {} counted {}", g.in_degree(v), in_degree[v.index()])
        });
    }
    // projection soundness and degree identities
    let stat = g.project_static();
    for u in g.vertices() {
        let distinct: HashSet<VertexId> = g.out_edges(u).map(|(v, _)| v).collect();
        s.ensure(stat.out_degree(u) == distinct.len(), "static-projection", || {
            format!("{u}: static degree {} distinct neighbors {}", stat.out_degree(u), distinct.len())
        });
        for v in &distinct {
            s.ensure(stat.has_edge(u, *v), "static-projection", || format!("missing ({u}, {v})"));
        }
    }
    s.0
}

/// Tree-level invariants for any traversal kind.
pub fn check_tree<T: Time>(g: &TemporalGraph<T>, tree: &TraversalTree<T>) -> Vec<Violation> {
    let mut s = Sink::default();
    let occ = tree.occurrences();
    let t_s = tree.start_time();
    let e_ts = g.edges_from(t_s);

    s.ensure(
        occ[0].vertex() == tree.source() && occ[0].sigma() == t_s && occ[0].parent().is_none(),
        "root",
        || format!("root is {:?}", occ[0]),
    );
    s.ensure(occ.len() <= e_ts + 1, "tree-size", || format!("{} occurrences, |E(t_s)| = {e_ts}", occ.len()));

    let log = tree.log();
    s.ensure(log.len() <= e_ts, "edge-once", || format!("{} traversals, |E(t_s)| = {e_ts}", log.len()));
    let mut seen = vec![false; g.edge_count()];
    for entry in log {
        let e = entry.edge as usize;
        s.ensure(!seen[e], "edge-once", || format!("edge {e} traversed twice"));
        seen[e] = true;
        let from = tree.occurrence(entry.from);
        let edge = g.edge(entry.edge);
        s.ensure(edge.src == from.vertex() && from.sigma() <= edge.t, "traversal-eligibility", || {
            format!("edge {edge:?} traversed from occurrence {} visited at {}", entry.from, from.sigma())
        });
    }
    let c = tree.counters();
    s.ensure(c.traversed == log.len(), "counters", || format!("{c:?} vs log {}", log.len()));
    s.ensure(c.traversed <= g.edge_count() && c.scanned <= g.edge_count(), "linear-scan", || {
        format!("{c:?} with |E| = {}", g.edge_count())
    });

    for (i, o) in occ.iter().enumerate().skip(1) {
        let Some(p) = o.parent() else {
            s.fail("tree-shape", format!("occurrence {i} has no parent"));
            continue;
        };
        s.ensure((p as usize) < i, "tree-shape", || format!("parent {p} of {i} created later"));
        let parent = tree.occurrence(p);
        s.ensure(parent.sigma() <= o.sigma(), "monotone-sigma", || {
            format!("occurrence {i}: parent sigma {} > sigma {}", parent.sigma(), o.sigma())
        });
        s.ensure(o.dist() == parent.dist() + 1, "dist", || format!("occurrence {i} dist {}", o.dist()));
        match o.entry() {
            Some(e) => {
                let edge = g.edge(e);
                s.ensure(
                    edge.src == parent.vertex() && edge.dst == o.vertex() && edge.t == o.sigma(),
                    "entry-edge",
                    || format!("occurrence {i} entered by {edge:?}"),
                );
            }
            None => s.fail("entry-edge", format!("occurrence {i} has no entry edge")),
        }
        // no vertex twice on one root path
        let mut cur = o.parent();
        while let Some(a) = cur {
            let anc = tree.occurrence(a);
            if anc.vertex() == o.vertex() {
                s.fail("root-path-distinct", format!("occurrence {i} below occurrence {a} of the same vertex"));
                break;
            }
            cur = anc.parent();
        }
    }

    for v in g.vertices() {
        let list = tree.occurrences_of(v);
        // creation order is also visit order, so visit times must strictly drop
        s.ensure(
            list.windows(2).all(|w| tree.occurrence(w[0]).sigma() > tree.occurrence(w[1]).sigma()),
            "strict-improvement",
            || format!("{v}: visit times not strictly decreasing"),
        );
        if tree.kind() == TraversalKind::Bfs {
            let dists: HashSet<u32> = list.iter().map(|&o| tree.occurrence(o).dist()).collect();
            s.ensure(dists.len() == list.len(), "bfs-distinct-levels", || format!("{v}: repeated level"));
        }
    }

    let labels = crate::traversal::classify_traversal(tree, g);
    let tree_labels = labels.count(EdgeLabel::Tree);
    s.ensure(tree_labels == occ.len() - 1, "tree-edge-count", || {
        format!("{tree_labels} tree labels for {} non-root occurrences", occ.len() - 1)
    });
    for (e, &l) in labels.labels().iter().enumerate() {
        if g.time_at(e) < t_s {
            s.ensure(l == EdgeLabel::NonTraversed, "early-edges-untouched", || format!("edge {e} labelled {l:?}"));
        }
        let allowed = match (tree.kind().is_dfs(), l) {
            (_, EdgeLabel::Tree | EdgeLabel::NonTraversed) => true,
            (true, EdgeLabel::Forward | EdgeLabel::Backward | EdgeLabel::Cross) => true,
            (false, EdgeLabel::NonTree) => true,
            _ => false,
        };
        s.ensure(allowed, "label-domain", || format!("{} tree labels edge {e} {l:?}", tree.kind().name()));
    }
    let total: usize = [
        EdgeLabel::Tree,
        EdgeLabel::Forward,
        EdgeLabel::Backward,
        EdgeLabel::Cross,
        EdgeLabel::NonTree,
        EdgeLabel::NonTraversed,
    ]
    .iter()
    .map(|&l| labels.count(l))
    .sum();
    s.ensure(total == g.edge_count(), "label-partition", || format!("{total} labels for {} edges", g.edge_count()));

    if tree.kind().is_dfs() {
        match extract_cycles(tree, g) {
            Ok(cycles) => {
                for c in cycles {
                    s.ensure(c.is_valid(), "cycle-validity", || format!("{:?}", c.edges));
                }
            }
            Err(e) => s.fail("cycle-validity", e.to_string()),
        }
    }
    s.0
}

/// DFS-v1, DFS-v2 and BFS reach the same vertices and traverse the same
/// number of edges.
pub fn check_agreement<T: Time>(trees: &[&TraversalTree<T>]) -> Vec<Violation> {
    let mut s = Sink::default();
    if let Some((first, rest)) = trees.split_first() {
        let reach = first.reachable_set();
        for t in rest {
            s.ensure(t.reachable_set() == reach, "reachability-agreement", || {
                format!("{} and {} disagree", first.kind().name(), t.kind().name())
            });
            s.ensure(t.log().len() == first.log().len(), "traversed-agreement", || {
                format!(
                    "{} traversed {}, {} traversed {}",
                    first.kind().name(),
                    first.log().len(),
                    t.kind().name(),
                    t.log().len()
                )
            });
        }
    }
    s.0
}

pub fn check_index<T: Time>(index: &OccurrenceIndex<T>) -> Vec<Violation> {
    let mut s = Sink::default();
    for v in 0..index.vertex_count() as u32 {
        let entries = index.entries(VertexId(v));
        for w in entries.windows(2) {
            s.ensure(w[0].t_start > w[1].t_start && w[0].t_end > w[1].t_end, "index-monotone", || {
                format!("vertex {v}: {:?} then {:?}", w[0], w[1])
            });
        }
        for e in entries {
            s.ensure(e.t_start <= e.t_end && e.t_start >= index.start_time(), "index-interval", || {
                format!("vertex {v}: {e:?}")
            });
        }
    }
    s.0
}

/// A path answer for `target` from `source` starting no earlier than `lower`.
pub fn check_path<T: Time>(path: &PathAnswer<T>, source: VertexId, target: VertexId, lower: T) -> Vec<Violation> {
    let mut s = Sink::default();
    s.ensure(path.is_time_respecting(lower), "time-respecting", || format!("{:?}", path.edges()));
    match (path.edges().first(), path.edges().last()) {
        (Some(first), Some(last)) => {
            s.ensure(first.src == source && last.dst == target, "path-endpoints", || {
                format!("path {:?} for {source} -> {target}", path.edges())
            });
        }
        _ => s.ensure(source == target, "path-endpoints", || format!("empty path for {source} -> {target}")),
    }
    s.0
}
