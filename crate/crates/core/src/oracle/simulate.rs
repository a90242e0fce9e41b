//! Literal replays of the traversal definitions.
//!
//! Every step recomputes the candidate edge set by scanning the whole edge
//! list, and ancestor/descendant questions are answered by walking parent
//! links. Nothing here shares logic with the optimized engines.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{TemporalEdge, TemporalGraph, VertexId};
use crate::time::Time;
use crate::traversal::{Counters, EdgeLabel, LogEntry, Occurrence, TraversalKind, TraversalTree, NONE};

use super::guard;

/// Edge budget of the simulators.
pub const SIMULATION_EDGE_LIMIT: usize = 10_000;

pub fn simulate_definition<T: Time>(
    g: &TemporalGraph<T>,
    source: VertexId,
    t_s: T,
    kind: TraversalKind,
) -> Result<TraversalTree<T>> {
    guard("edges", g.edge_count(), SIMULATION_EDGE_LIMIT)?;
    if source.index() >= g.vertex_count() {
        return Err(Error::UnknownVertex(source.to_string()));
    }
    let edges: Vec<TemporalEdge<T>> = g.edges().collect();
    match kind {
        TraversalKind::DfsV1 | TraversalKind::DfsV2 => Ok(simulate_dfs(g, &edges, source, t_s, kind)),
        TraversalKind::Bfs => simulate_bfs(g, &edges, source, t_s),
    }
}

/// Untraversed edges out of `u` with timestamp at least `sigma_u`.
fn candidates<T: Time>(edges: &[TemporalEdge<T>], traversed: &[bool], u: VertexId, sigma_u: T) -> Vec<usize> {
    (0..edges.len())
        .filter(|&e| !traversed[e] && edges[e].src == u && edges[e].t >= sigma_u)
        .collect()
}

/// Earliest candidate edge per out-neighbor, neighbors ordered by that
/// earliest time descending, ties by smaller vertex id.
fn neighbor_minima<T: Time>(edges: &[TemporalEdge<T>], cand: &[usize]) -> Vec<usize> {
    let mut minima: Vec<usize> = Vec::new();
    for &e in cand {
        match minima.iter_mut().find(|m| edges[**m].dst == edges[e].dst) {
            Some(m) if edges[e].t < edges[*m].t => *m = e,
            Some(_) => {}
            None => minima.push(e),
        }
    }
    minima.sort_by(|&a, &b| edges[b].t.cmp(&edges[a].t).then(edges[a].dst.cmp(&edges[b].dst)));
    minima
}

fn is_ancestor<T>(occ: &[Occurrence<T>], anc: u32, mut o: u32) -> bool {
    while o != NONE {
        if o == anc {
            return true;
        }
        o = occ[o as usize].parent;
    }
    false
}

fn simulate_dfs<T: Time>(
    g: &TemporalGraph<T>,
    edges: &[TemporalEdge<T>],
    source: VertexId,
    t_s: T,
    kind: TraversalKind,
) -> TraversalTree<T> {
    let n = g.vertex_count();
    let mut traversed = vec![false; edges.len()];
    let mut sigma: Vec<Option<T>> = vec![None; n];
    let mut occ = vec![Occurrence::root(source, t_s)];
    let mut log = Vec::new();
    let mut path = vec![0u32];
    sigma[source.index()] = Some(t_s);

    while let Some(&cur) = path.last() {
        let u = occ[cur as usize].vertex;
        let cand = candidates(edges, &traversed, u, occ[cur as usize].sigma);
        if cand.is_empty() {
            path.pop();
            continue;
        }
        let e = match kind {
            TraversalKind::DfsV1 => neighbor_minima(edges, &cand)[0],
            _ => *cand
                .iter()
                .max_by(|&&a, &&b| edges[a].t.cmp(&edges[b].t).then(edges[b].dst.cmp(&edges[a].dst)))
                .unwrap(),
        };
        traversed[e] = true;
        let TemporalEdge { dst: v, t, .. } = edges[e];
        let label = if sigma[v.index()].is_none_or(|s| s > t) {
            sigma[v.index()] = Some(t);
            occ.push(Occurrence {
                vertex: v,
                parent: cur,
                entry: e as u32,
                dist: occ[cur as usize].dist + 1,
                sigma: t,
            });
            path.push(occ.len() as u32 - 1);
            EdgeLabel::Tree
        } else if (0..occ.len() as u32).any(|o| occ[o as usize].vertex == v && is_ancestor(&occ, o, cur)) {
            EdgeLabel::Backward
        } else if (0..occ.len() as u32).any(|o| occ[o as usize].vertex == v && o != cur && is_ancestor(&occ, cur, o)) {
            EdgeLabel::Forward
        } else {
            EdgeLabel::Cross
        };
        log.push(LogEntry { edge: e as u32, from: cur, label });
    }
    let counters = Counters { traversed: log.len(), scanned: 0 };
    TraversalTree::new(kind, source, t_s, occ, log, counters, n)
}

fn simulate_bfs<T: Time>(
    g: &TemporalGraph<T>,
    edges: &[TemporalEdge<T>],
    source: VertexId,
    t_s: T,
) -> Result<TraversalTree<T>> {
    let n = g.vertex_count();
    let mut traversed = vec![false; edges.len()];
    let mut sigma: Vec<Option<T>> = vec![None; n];
    let mut rec = vec![Occurrence::root(source, t_s)];
    let mut queue: VecDeque<u32> = VecDeque::from([0]);
    let mut log = Vec::new();
    sigma[source.index()] = Some(t_s);

    while let Some(r) = queue.pop_front() {
        let Occurrence { vertex: u, sigma: sigma_u, dist: level, .. } = rec[r as usize];
        let cand = candidates(edges, &traversed, u, sigma_u);
        let order: Vec<VertexId> = neighbor_minima(edges, &cand).iter().map(|&e| edges[e].dst).collect();
        for v in order {
            loop {
                let Some(e) = candidates(edges, &traversed, u, sigma_u)
                    .into_iter()
                    .filter(|&e| edges[e].dst == v)
                    .min_by_key(|&e| edges[e].t)
                else {
                    break;
                };
                traversed[e] = true;
                log.push(LogEntry { edge: e as u32, from: r, label: EdgeLabel::NonTree });
                let t = edges[e].t;
                let improves = sigma[v.index()].is_none_or(|s| s > t);
                let same_next = queue.iter().copied().find(|&q| rec[q as usize].vertex == v && rec[q as usize].dist == level + 1);
                let same_level = queue.iter().any(|&q| rec[q as usize].vertex == v && rec[q as usize].dist == level);
                let any = queue.iter().any(|&q| rec[q as usize].vertex == v);
                if let Some(q) = same_next {
                    if improves {
                        let o = &mut rec[q as usize];
                        o.sigma = t;
                        o.parent = r;
                        o.entry = e as u32;
                        sigma[v.index()] = Some(t);
                    }
                } else if same_level || !any {
                    if improves {
                        rec.push(Occurrence { vertex: v, parent: r, entry: e as u32, dist: level + 1, sigma: t });
                        queue.push_back(rec.len() as u32 - 1);
                        sigma[v.index()] = Some(t);
                    }
                } else {
                    let found = queue.iter().map(|&q| rec[q as usize]).find(|o| o.vertex == v).unwrap().dist;
                    return Err(Error::QueueInvariant { vertex: v.0, level, found });
                }
            }
        }
    }

    let finals: Vec<u32> = rec[1..].iter().map(|o| o.entry).collect();
    for entry in &mut log {
        if finals.contains(&entry.edge) {
            entry.label = EdgeLabel::Tree;
        }
    }
    let counters = Counters { traversed: log.len(), scanned: 0 };
    Ok(TraversalTree::new(TraversalKind::Bfs, source, t_s, rec, log, counters, n))
}
