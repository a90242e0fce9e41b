//! Temporal graph storage.
//!
//! Out-edges of every vertex live in one contiguous run of a CSR array,
//! ordered by timestamp and, within a timestamp, by destination id. All
//! traversal engines rely on that layout: the edges of `u` that are active at
//! or after some time form a suffix of `u`'s run.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::time::Time;

/// Dense vertex index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Position of a temporal edge in the graph's chronological edge array.
pub type EdgeId = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TemporalEdge<T> {
    pub src: VertexId,
    pub dst: VertexId,
    pub t: T,
}

impl<T> TemporalEdge<T> {
    pub fn new(src: u32, dst: u32, t: T) -> Self {
        TemporalEdge {
            src: VertexId(src),
            dst: VertexId(dst),
            t,
        }
    }
}

/// External vertex names.
#[derive(Clone, Debug, Default)]
pub enum Labels {
    /// Vertex `i` is named by the decimal string of `i`.
    #[default]
    Numeric,
    Named {
        names: Vec<String>,
        index: HashMap<String, u32>,
    },
}

impl Labels {
    pub fn from_names(names: Vec<String>) -> Self {
        let index = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i as u32))
            .collect();
        Labels::Named { names, index }
    }

    pub fn name(&self, v: VertexId) -> String {
        match self {
            Labels::Numeric => v.0.to_string(),
            Labels::Named { names, .. } => names[v.index()].clone(),
        }
    }

    fn lookup(&self, label: &str, n: usize) -> Option<VertexId> {
        match self {
            Labels::Numeric => label
                .parse::<u32>()
                .ok()
                .filter(|&i| (i as usize) < n)
                .map(VertexId),
            Labels::Named { index, .. } => index.get(label).copied().map(VertexId),
        }
    }
}

/// Immutable temporal graph with chronologically ordered out-edge lists.
#[derive(Clone, Debug)]
pub struct TemporalGraph<T> {
    offsets: Vec<usize>,
    dst: Vec<u32>,
    time: Vec<T>,
    in_degree: Vec<u32>,
    labels: Labels,
}

/// Counts of input edges that did not make it into the graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BuildReport {
    pub duplicates_dropped: usize,
    pub self_loops_dropped: usize,
}

impl<T: Time> TemporalGraph<T> {
    /// Builds a graph over `n` vertices.
    ///
    /// Self-loops are dropped and counted. Repeated `(src, dst, t)` triples
    /// are dropped when `dedupe` is set and rejected otherwise.
    pub fn from_edges(
        n: usize,
        mut edges: Vec<(u32, u32, T)>,
        labels: Labels,
        dedupe: bool,
    ) -> Result<(Self, BuildReport)> {
        assert!(n <= u32::MAX as usize, "vertex count exceeds u32 range");
        let mut report = BuildReport::default();
        let before = edges.len();
        edges.retain(|&(u, v, _)| u != v);
        report.self_loops_dropped = before - edges.len();
        for &(u, v, _) in &edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::Contract(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{n}"
                )));
            }
        }

        edges.sort_unstable_by_key(|a| (a.0, a.2, a.1));
        let before = edges.len();
        if dedupe {
            edges.dedup();
        } else if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            let (u, v, t) = w[0];
            return Err(Error::Duplicate {
                src: labels.name(VertexId(u)),
                dst: labels.name(VertexId(v)),
                t: t.to_string(),
            });
        }
        report.duplicates_dropped = before - edges.len();
        assert!(edges.len() < u32::MAX as usize, "edge count exceeds u32 range");

        let mut offsets = vec![0usize; n + 1];
        let mut in_degree = vec![0u32; n];
        for &(u, v, _) in &edges {
            offsets[u as usize + 1] += 1;
            in_degree[v as usize] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let dst = edges.iter().map(|e| e.1).collect();
        let time = edges.iter().map(|e| e.2).collect();
        Ok((
            TemporalGraph {
                offsets,
                dst,
                time,
                in_degree,
                labels,
            },
            report,
        ))
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.dst.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertex_count() as u32).map(VertexId)
    }

    /// Range of edge ids leaving `u`, in chronological order.
    #[inline]
    pub fn out_range(&self, u: VertexId) -> std::ops::Range<usize> {
        self.offsets[u.index()]..self.offsets[u.index() + 1]
    }

    #[inline]
    pub fn dst_at(&self, e: usize) -> VertexId {
        VertexId(self.dst[e])
    }

    #[inline]
    pub fn time_at(&self, e: usize) -> T {
        self.time[e]
    }

    #[inline]
    pub(crate) fn dst_slice(&self) -> &[u32] {
        &self.dst
    }

    #[inline]
    pub(crate) fn time_slice(&self) -> &[T] {
        &self.time
    }

    #[inline]
    pub(crate) fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// Source vertex of edge `e`.
    pub fn src_of(&self, e: EdgeId) -> VertexId {
        let i = self.offsets.partition_point(|&o| o <= e as usize) - 1;
        VertexId(i as u32)
    }

    pub fn edge(&self, e: EdgeId) -> TemporalEdge<T> {
        TemporalEdge {
            src: self.src_of(e),
            dst: VertexId(self.dst[e as usize]),
            t: self.time[e as usize],
        }
    }

    /// `(dst, t)` pairs leaving `u` in storage order.
    pub fn out_edges(&self, u: VertexId) -> impl Iterator<Item = (VertexId, T)> + '_ {
        self.out_range(u).map(move |e| (VertexId(self.dst[e]), self.time[e]))
    }

    /// All edges in edge-id order.
    pub fn edges(&self) -> impl Iterator<Item = TemporalEdge<T>> + '_ {
        self.vertices().flat_map(move |u| {
            self.out_range(u).map(move |e| TemporalEdge {
                src: u,
                dst: VertexId(self.dst[e]),
                t: self.time[e],
            })
        })
    }

    pub fn out_degree(&self, u: VertexId) -> usize {
        self.out_range(u).len()
    }

    pub fn in_degree(&self, u: VertexId) -> usize {
        self.in_degree[u.index()] as usize
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> String {
        self.labels.name(v)
    }

    pub fn resolve(&self, label: &str) -> Result<VertexId> {
        self.labels
            .lookup(label, self.vertex_count())
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    /// Sorted distinct timestamps over all edges.
    pub fn snapshots(&self) -> Vec<T> {
        let mut ts = self.time.clone();
        ts.sort_unstable();
        ts.dedup();
        ts
    }

    /// Number of edges with timestamp `>= t_s`.
    pub fn edges_from(&self, t_s: T) -> usize {
        self.time.iter().filter(|&&t| t >= t_s).count()
    }

    pub fn project_static(&self) -> StaticGraph {
        let mut offsets = Vec::with_capacity(self.offsets.len());
        let mut adjacency = Vec::new();
        offsets.push(0);
        let mut scratch: Vec<u32> = Vec::new();
        for u in self.vertices() {
            scratch.clear();
            scratch.extend(self.out_range(u).map(|e| self.dst[e]));
            scratch.sort_unstable();
            scratch.dedup();
            adjacency.extend_from_slice(&scratch);
            offsets.push(adjacency.len());
        }
        StaticGraph { offsets, adjacency }
    }

    pub fn stats(&self) -> GraphStats {
        let n = self.vertex_count();
        let m = self.edge_count();
        let stat = self.project_static();
        let static_edges = stat.edge_count();
        let d_max_temporal = self.vertices().map(|u| self.out_degree(u)).max().unwrap_or(0);
        let d_max_static = self.vertices().map(|u| stat.out_degree(u)).max().unwrap_or(0);
        let mut d_max_pair = 0;
        for u in self.vertices() {
            let mut run = 0;
            let mut dsts: Vec<u32> = self.out_range(u).map(|e| self.dst[e]).collect();
            dsts.sort_unstable();
            for (i, &d) in dsts.iter().enumerate() {
                run = if i > 0 && dsts[i - 1] == d { run + 1 } else { 1 };
                d_max_pair = d_max_pair.max(run);
            }
        }
        let ratio = |a: usize, b: usize| if b == 0 { 0.0 } else { a as f64 / b as f64 };
        GraphStats {
            n,
            m,
            static_edges,
            d_avg_temporal: ratio(m, n),
            d_max_temporal,
            d_avg_static: ratio(static_edges, n),
            d_max_static,
            d_avg_pair: ratio(m, static_edges),
            d_max_pair,
            snapshots: self.snapshots().len(),
        }
    }
}

/// Summary statistics, serialized with exactly these keys.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub static_edges: usize,
    pub d_avg_temporal: f64,
    pub d_max_temporal: usize,
    pub d_avg_static: f64,
    pub d_max_static: usize,
    pub d_avg_pair: f64,
    pub d_max_pair: usize,
    pub snapshots: usize,
}

/// Non-temporal projection: one edge per distinct `(src, dst)` pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaticGraph {
    offsets: Vec<usize>,
    adjacency: Vec<u32>,
}

impl StaticGraph {
    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.len()
    }

    /// Sorted distinct out-neighbors.
    pub fn neighbors(&self, u: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency[self.offsets[u.index()]..self.offsets[u.index() + 1]]
            .iter()
            .map(|&v| VertexId(v))
    }

    pub fn out_degree(&self, u: VertexId) -> usize {
        self.offsets[u.index() + 1] - self.offsets[u.index()]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[self.offsets[u.index()]..self.offsets[u.index() + 1]]
            .binary_search(&v.0)
            .is_ok()
    }

    /// Vertices reachable from `source` by plain BFS, source included.
    pub fn reachable_count(&self, source: VertexId) -> usize {
        let mut seen = vec![false; self.vertex_count()];
        let mut queue = std::collections::VecDeque::new();
        seen[source.index()] = true;
        queue.push_back(source);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if !seen[v.index()] {
                    seen[v.index()] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count
    }
}
