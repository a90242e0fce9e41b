//! Temporal DFS (two variants) and temporal BFS.
//!
//! Every traversal produces a tree of vertex *occurrences*: a vertex can be
//! visited several times, each time with a strictly earlier visit time than
//! all of its previous visits. Edges are traversed at most once, and only
//! when the traversing occurrence was visited no later than the edge's time.

mod bfs;
mod cycles;
mod dfs;
mod scan;

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, TemporalEdge, TemporalGraph, VertexId};
use crate::paths::PathAnswer;
use crate::time::Time;

pub use bfs::bfs;
pub use cycles::{extract_cycles, TemporalCycle};
pub use dfs::{dfs_v1, dfs_v2};
pub(crate) use dfs::{dfs_with_order, ScanOrder};

pub type OccId = u32;

pub(crate) const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TraversalKind {
    DfsV1,
    DfsV2,
    Bfs,
}

impl TraversalKind {
    pub const ALL: [TraversalKind; 3] = [TraversalKind::DfsV1, TraversalKind::DfsV2, TraversalKind::Bfs];

    pub fn is_dfs(self) -> bool {
        !matches!(self, TraversalKind::Bfs)
    }

    pub fn name(self) -> &'static str {
        match self {
            TraversalKind::DfsV1 => "dfs-v1",
            TraversalKind::DfsV2 => "dfs-v2",
            TraversalKind::Bfs => "bfs",
        }
    }
}

/// Runs the traversal of the given kind.
pub fn traverse<T: Time>(
    g: &TemporalGraph<T>,
    source: VertexId,
    t_s: T,
    kind: TraversalKind,
) -> Result<TraversalTree<T>> {
    match kind {
        TraversalKind::DfsV1 => dfs_v1(g, source, t_s),
        TraversalKind::DfsV2 => dfs_v2(g, source, t_s),
        TraversalKind::Bfs => bfs(g, source, t_s),
    }
}

/// One appearance of a vertex in a traversal tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Occurrence<T> {
    pub(crate) vertex: VertexId,
    pub(crate) parent: u32,
    pub(crate) entry: u32,
    pub(crate) dist: u32,
    pub(crate) sigma: T,
}

impl<T: Time> Occurrence<T> {
    pub(crate) fn root(vertex: VertexId, t_s: T) -> Self {
        Occurrence {
            vertex,
            parent: NONE,
            entry: NONE,
            dist: 0,
            sigma: t_s,
        }
    }

    pub fn vertex(&self) -> VertexId {
        self.vertex
    }

    pub fn parent(&self) -> Option<OccId> {
        (self.parent != NONE).then_some(self.parent)
    }

    /// Tree edge through which this occurrence was (last) visited.
    pub fn entry(&self) -> Option<EdgeId> {
        (self.entry != NONE).then_some(self.entry)
    }

    /// Hops from the root along tree edges.
    pub fn dist(&self) -> u32 {
        self.dist
    }

    /// Visit time.
    pub fn sigma(&self) -> T {
        self.sigma
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeLabel {
    Tree,
    Forward,
    Backward,
    Cross,
    /// Traversed by BFS without ending up in the tree.
    NonTree,
    NonTraversed,
}

/// An edge traversal, in traversal order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LogEntry {
    pub edge: EdgeId,
    /// Occurrence from which the edge was traversed.
    pub from: OccId,
    pub label: EdgeLabel,
}

/// Instrumentation for the linear-time contract.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counters {
    /// Edges traversed.
    pub traversed: usize,
    /// Total movement of the per-vertex out-edge cursors.
    pub scanned: usize,
}

#[derive(Clone, Debug)]
pub struct TraversalTree<T> {
    kind: TraversalKind,
    source: VertexId,
    t_s: T,
    occurrences: Vec<Occurrence<T>>,
    log: Vec<LogEntry>,
    counters: Counters,
    n: usize,
    reachable: usize,
    /// Occurrence ids grouped by vertex (CSR), built on first use.
    by_vertex: OnceLock<(Vec<u32>, Vec<OccId>)>,
}

impl<T: Time> TraversalTree<T> {
    pub(crate) fn new(
        kind: TraversalKind,
        source: VertexId,
        t_s: T,
        occurrences: Vec<Occurrence<T>>,
        log: Vec<LogEntry>,
        counters: Counters,
        n: usize,
    ) -> Self {
        let mut seen = vec![false; n];
        let mut reachable = 0;
        for o in &occurrences {
            let v = &mut seen[o.vertex.index()];
            reachable += usize::from(!*v);
            *v = true;
        }
        TraversalTree {
            kind,
            source,
            t_s,
            occurrences,
            log,
            counters,
            n,
            reachable,
            by_vertex: OnceLock::new(),
        }
    }

    fn by_vertex(&self) -> &(Vec<u32>, Vec<OccId>) {
        self.by_vertex.get_or_init(|| {
            let n = self.n;
            let mut offsets = vec![0u32; n + 1];
            for o in &self.occurrences {
                offsets[o.vertex.index() + 1] += 1;
            }
            for i in 0..n {
                offsets[i + 1] += offsets[i];
            }
            let mut fill = offsets.clone();
            let mut by_vertex = vec![0; self.occurrences.len()];
            for (id, o) in self.occurrences.iter().enumerate() {
                let slot = &mut fill[o.vertex.index()];
                by_vertex[*slot as usize] = id as OccId;
                *slot += 1;
            }
            (offsets, by_vertex)
        })
    }

    pub fn kind(&self) -> TraversalKind {
        self.kind
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn start_time(&self) -> T {
        self.t_s
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Occurrences in creation order; index 0 is the root.
    pub fn occurrences(&self) -> &[Occurrence<T>] {
        &self.occurrences
    }

    pub fn occurrence(&self, id: OccId) -> &Occurrence<T> {
        &self.occurrences[id as usize]
    }

    /// Occurrences of `v` in creation order.
    pub fn occurrences_of(&self, v: VertexId) -> &[OccId] {
        let (offsets, ids) = self.by_vertex();
        &ids[offsets[v.index()] as usize..offsets[v.index() + 1] as usize]
    }

    pub fn tree_edge_count(&self) -> usize {
        self.occurrences.len() - 1
    }

    pub fn log(&self) -> &[LogEntry] {
        &self.log
    }

    pub fn counters(&self) -> Counters {
        self.counters
    }

    /// The tree edge entering `id`, if it is not the root.
    pub fn entry_edge(&self, id: OccId) -> Option<TemporalEdge<T>> {
        let o = &self.occurrences[id as usize];
        o.parent().map(|p| TemporalEdge {
            src: self.occurrences[p as usize].vertex,
            dst: o.vertex,
            t: o.sigma,
        })
    }

    /// Root-to-occurrence path along tree edges.
    pub fn path_to(&self, id: OccId) -> PathAnswer<T> {
        let mut edges = Vec::with_capacity(self.occurrences[id as usize].dist as usize);
        let mut cur = id;
        while let Some(e) = self.entry_edge(cur) {
            edges.push(e);
            cur = self.occurrences[cur as usize].parent;
        }
        edges.reverse();
        PathAnswer::new(edges)
    }

    /// Distinct vertices of the tree, ascending.
    pub fn reachable_set(&self) -> Vec<VertexId> {
        let mut vs: Vec<VertexId> = self.occurrences.iter().map(|o| o.vertex).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn reachable_count(&self) -> usize {
        self.reachable
    }

    /// Labels every edge of `g` from the traversal log.
    pub(crate) fn labels(&self, g: &TemporalGraph<T>) -> Vec<EdgeLabel> {
        let mut labels = vec![EdgeLabel::NonTraversed; g.edge_count()];
        for entry in &self.log {
            labels[entry.edge as usize] = entry.label;
        }
        labels
    }
}

/// Label of every temporal edge, indexed by edge id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClassification {
    kind: TraversalKind,
    labels: Vec<EdgeLabel>,
}

impl EdgeClassification {
    pub fn kind(&self) -> TraversalKind {
        self.kind
    }

    pub fn label(&self, e: EdgeId) -> EdgeLabel {
        self.labels[e as usize]
    }

    pub fn labels(&self) -> &[EdgeLabel] {
        &self.labels
    }

    pub fn count(&self, label: EdgeLabel) -> usize {
        self.labels.iter().filter(|&&l| l == label).count()
    }
}

/// Five-way DFS classification, decided online while the DFS ran.
pub fn classify_edges<T: Time>(tree: &TraversalTree<T>, g: &TemporalGraph<T>) -> Result<EdgeClassification> {
    if !tree.kind.is_dfs() {
        return Err(Error::Contract(
            "tree/forward/backward/cross labels are defined for DFS trees only".into(),
        ));
    }
    Ok(EdgeClassification {
        kind: tree.kind,
        labels: tree.labels(g),
    })
}

/// Tree / non-tree / non-traversed labels for any traversal.
pub fn classify_traversal<T: Time>(tree: &TraversalTree<T>, g: &TemporalGraph<T>) -> EdgeClassification {
    EdgeClassification {
        kind: tree.kind,
        labels: tree.labels(g),
    }
}

/// Distinct vertices reached by the traversal.
pub fn reachable_set<T: Time>(tree: &TraversalTree<T>) -> Vec<VertexId> {
    tree.reachable_set()
}

pub(crate) fn check_source<T: Time>(g: &TemporalGraph<T>, source: VertexId) -> Result<()> {
    if source.index() >= g.vertex_count() {
        return Err(Error::UnknownVertex(source.to_string()));
    }
    Ok(())
}
