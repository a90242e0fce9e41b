//! Single-source foremost, fastest and shortest temporal paths read off
//! traversal trees.
//!
//! The source reaches itself at the query start time through the empty path;
//! every answer includes it under that convention.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{TemporalEdge, TemporalGraph, VertexId};
use crate::time::Time;
use crate::traversal::{bfs, dfs_v1, OccId, TraversalKind, TraversalTree, NONE};

/// A time-respecting path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathAnswer<T> {
    edges: Vec<TemporalEdge<T>>,
}

impl<T: Time> PathAnswer<T> {
    pub fn new(edges: Vec<TemporalEdge<T>>) -> Self {
        PathAnswer { edges }
    }

    pub fn edges(&self) -> &[TemporalEdge<T>] {
        &self.edges
    }

    pub fn hops(&self) -> usize {
        self.edges.len()
    }

    pub fn t_start(&self) -> Option<T> {
        self.edges.first().map(|e| e.t)
    }

    pub fn t_end(&self) -> Option<T> {
        self.edges.last().map(|e| e.t)
    }

    /// Consecutive edges chain through shared vertices, timestamps never
    /// decrease, and the first edge is not earlier than `lower`.
    pub fn is_time_respecting(&self, lower: T) -> bool {
        self.t_start().is_none_or(|t| t >= lower)
            && self.edges.windows(2).all(|w| w[0].dst == w[1].src && w[0].t <= w[1].t)
    }
}

/// Optimum of one path query at one vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PathValue<T> {
    Arrival(T),
    Duration(T),
    Hops(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForemostEngine {
    DfsV1,
    Bfs,
}

/// Earliest arrival times from one source.
#[derive(Clone, Debug)]
pub struct ForemostPaths<T> {
    tree: TraversalTree<T>,
    best: Vec<OccId>,
}

impl<T: Time> ForemostPaths<T> {
    pub fn tree(&self) -> &TraversalTree<T> {
        &self.tree
    }

    pub fn occurrence(&self, v: VertexId) -> Option<OccId> {
        let o = self.best[v.index()];
        (o != NONE).then_some(o)
    }

    pub fn arrival(&self, v: VertexId) -> Option<T> {
        self.occurrence(v).map(|o| self.tree.occurrence(o).sigma())
    }

    pub fn path(&self, v: VertexId) -> Option<PathAnswer<T>> {
        self.occurrence(v).map(|o| self.tree.path_to(o))
    }

    /// `(vertex, arrival)` for every reachable vertex, by vertex id.
    pub fn arrivals(&self) -> Vec<Option<T>> {
        (0..self.best.len() as u32).map(|v| self.arrival(VertexId(v))).collect()
    }
}

/// Foremost paths from `source` departing no earlier than `t_s`.
///
/// The answer for `v` is the occurrence of `v` with the smallest visit time.
/// With the BFS engine that occurrence also has the fewest hops among all
/// foremost paths.
pub fn foremost_paths<T: Time>(
    g: &TemporalGraph<T>,
    source: VertexId,
    t_s: T,
    engine: ForemostEngine,
) -> Result<ForemostPaths<T>> {
    let tree = match engine {
        ForemostEngine::DfsV1 => dfs_v1(g, source, t_s)?,
        ForemostEngine::Bfs => bfs(g, source, t_s)?,
    };
    // visit times of a vertex strictly decrease with creation order
    let mut best = vec![NONE; g.vertex_count()];
    for (id, o) in tree.occurrences().iter().enumerate() {
        best[o.vertex().index()] = id as OccId;
    }
    Ok(ForemostPaths { tree, best })
}

/// Active interval of one DFS-v2 occurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IndexEntry<T> {
    pub t_start: T,
    pub t_end: T,
    pub occ: OccId,
}

/// Per-vertex active intervals of a DFS-v2 tree.
///
/// Entries of a vertex are in creation order, and both `t_start` and `t_end`
/// strictly decrease along them. Only reached vertices are stored.
#[derive(Clone, Debug)]
pub struct OccurrenceIndex<T> {
    source: VertexId,
    t_s: T,
    n: usize,
    vertices: Vec<u32>,
    starts: Vec<u32>,
    entries: Vec<IndexEntry<T>>,
}

impl<T: Time> OccurrenceIndex<T> {
    pub fn start_time(&self) -> T {
        self.t_s
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn entries(&self, v: VertexId) -> &[IndexEntry<T>] {
        match self.vertices.binary_search(&v.0) {
            Ok(i) => self.group(i),
            Err(_) => &[],
        }
    }

    fn group(&self, i: usize) -> &[IndexEntry<T>] {
        &self.entries[self.starts[i] as usize..self.starts[i + 1] as usize]
    }

    /// `(vertex, entries)` for every vertex with at least one entry.
    pub fn groups(&self) -> impl Iterator<Item = (VertexId, &[IndexEntry<T>])> + '_ {
        (0..self.vertices.len()).map(move |i| (VertexId(self.vertices[i]), self.group(i)))
    }

    pub fn is_strictly_monotone(&self) -> bool {
        self.groups().all(|(_, es)| {
            es.windows(2)
                .all(|w| w[0].t_start > w[1].t_start && w[0].t_end > w[1].t_end)
        })
    }
}

pub fn build_occurrence_index<T: Time>(tree: &TraversalTree<T>) -> Result<OccurrenceIndex<T>> {
    if tree.kind() != TraversalKind::DfsV2 {
        return Err(Error::Contract(format!(
            "occurrence index needs a dfs-v2 tree, got {}",
            tree.kind().name()
        )));
    }
    let occ = tree.occurrences();
    // parents precede children, so one forward pass propagates start times
    let mut t_start = vec![tree.start_time(); occ.len()];
    for (i, o) in occ.iter().enumerate().skip(1) {
        t_start[i] = if o.parent == 0 { o.sigma } else { t_start[o.parent as usize] };
    }

    let mut keys: Vec<u64> = (1..occ.len())
        .map(|i| (u64::from(occ[i].vertex.0) << 32) | i as u64)
        .collect();
    keys.sort_unstable();

    let mut vertices = Vec::new();
    let mut starts = Vec::new();
    let mut entries: Vec<IndexEntry<T>> = Vec::with_capacity(keys.len());
    for key in keys {
        let (v, o) = ((key >> 32) as u32, key as u32);
        let entry = IndexEntry {
            t_start: t_start[o as usize],
            t_end: occ[o as usize].sigma,
            occ: o,
        };
        if vertices.last() != Some(&v) {
            vertices.push(v);
            starts.push(entries.len() as u32);
            entries.push(entry);
        } else if entries.last().map(|e| e.t_start) == Some(entry.t_start) {
            // same start, the later occurrence arrives earlier
            *entries.last_mut().unwrap() = entry;
        } else {
            entries.push(entry);
        }
    }
    starts.push(entries.len() as u32);
    let index = OccurrenceIndex {
        source: tree.source(),
        t_s: tree.start_time(),
        n: tree.vertex_count(),
        vertices,
        starts,
        entries,
    };
    debug_assert!(index.is_strictly_monotone());
    Ok(index)
}

/// Minimum-duration paths within `[t_x, t_y]`.
#[derive(Clone, Debug)]
pub struct FastestPaths<'a, T> {
    tree: &'a TraversalTree<T>,
    index: &'a OccurrenceIndex<T>,
    /// Position in the index entries, `NONE` if unreached.
    hits: Vec<u32>,
}

impl<'a, T: Time> FastestPaths<'a, T> {
    pub fn duration(&self, v: VertexId) -> Option<T> {
        if v == self.index.source {
            return Some(T::zero());
        }
        let h = self.hits[v.index()];
        (h != NONE).then(|| {
            let e = &self.index.entries[h as usize];
            e.t_end - e.t_start
        })
    }

    pub fn occurrence(&self, v: VertexId) -> Option<OccId> {
        if v == self.index.source {
            return Some(0);
        }
        let h = self.hits[v.index()];
        (h != NONE).then(|| self.index.entries[h as usize].occ)
    }

    pub fn path(&self, v: VertexId) -> Option<PathAnswer<T>> {
        self.occurrence(v).map(|o| self.tree.path_to(o))
    }

    pub fn durations(&self) -> Vec<Option<T>> {
        (0..self.hits.len() as u32).map(|v| self.duration(VertexId(v))).collect()
    }
}

/// Per vertex, the occurrence minimizing `t_end - t_start` among those with
/// `t_start >= t_x` and `t_end <= t_y`; earliest created wins ties.
pub fn fastest_paths<'a, T: Time>(
    index: &'a OccurrenceIndex<T>,
    tree: &'a TraversalTree<T>,
    t_x: T,
    t_y: T,
) -> Result<FastestPaths<'a, T>> {
    if t_x > t_y {
        return Err(Error::Argument(format!("empty interval [{t_x}, {t_y}]")));
    }
    if t_x < index.t_s {
        return Err(Error::Argument(format!(
            "interval start {t_x} precedes traversal start {}",
            index.t_s
        )));
    }
    let mut hits = vec![NONE; index.n];
    for i in 0..index.vertices.len() {
        let (lo, hi) = (index.starts[i] as usize, index.starts[i + 1] as usize);
        let mut best: Option<(T, u32)> = None;
        for (p, e) in index.entries[lo..hi].iter().enumerate() {
            if e.t_start >= t_x && e.t_end <= t_y {
                let d = e.t_end - e.t_start;
                if best.is_none_or(|(b, _)| d < b) {
                    best = Some((d, (lo + p) as u32));
                }
            }
        }
        if let Some((_, p)) = best {
            hits[index.vertices[i] as usize] = p;
        }
    }
    Ok(FastestPaths { tree, index, hits })
}

/// Earliest arrival per vertex when departing the source at or after `t`.
pub fn foremost_from<T: Time>(index: &OccurrenceIndex<T>, t: T) -> Result<Vec<Option<T>>> {
    if t < index.t_s {
        return Err(Error::Argument(format!(
            "departure {t} precedes traversal start {}",
            index.t_s
        )));
    }
    let mut out = vec![None; index.n];
    for (v, entries) in index.groups() {
        // entries with t_start >= t form a prefix; its last has the smallest t_end
        let k = entries.partition_point(|e| e.t_start >= t);
        if k > 0 {
            out[v.index()] = Some(entries[k - 1].t_end);
        }
    }
    out[index.source.index()] = Some(t);
    Ok(out)
}

/// Fewest-hop paths from one source.
#[derive(Clone, Debug)]
pub struct ShortestPaths<T> {
    tree: TraversalTree<T>,
    first: Vec<OccId>,
}

impl<T: Time> ShortestPaths<T> {
    pub fn tree(&self) -> &TraversalTree<T> {
        &self.tree
    }

    pub fn occurrence(&self, v: VertexId) -> Option<OccId> {
        let o = self.first[v.index()];
        (o != NONE).then_some(o)
    }

    pub fn hops(&self, v: VertexId) -> Option<u32> {
        self.occurrence(v).map(|o| self.tree.occurrence(o).dist())
    }

    pub fn path(&self, v: VertexId) -> Option<PathAnswer<T>> {
        self.occurrence(v).map(|o| self.tree.path_to(o))
    }

    pub fn all_hops(&self) -> Vec<Option<u32>> {
        (0..self.first.len() as u32).map(|v| self.hops(VertexId(v))).collect()
    }
}

/// Shortest temporal paths: the BFS path to each vertex's first occurrence.
pub fn shortest_paths<T: Time>(g: &TemporalGraph<T>, source: VertexId, t_s: T) -> Result<ShortestPaths<T>> {
    let tree = bfs(g, source, t_s)?;
    let mut first = vec![NONE; g.vertex_count()];
    for (id, o) in tree.occurrences().iter().enumerate().rev() {
        first[o.vertex().index()] = id as OccId;
    }
    Ok(ShortestPaths { tree, first })
}
