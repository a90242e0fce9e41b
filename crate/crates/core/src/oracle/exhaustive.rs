//! Exact path optima by dynamic programming over (vertex, time, hops) states.

use crate::error::Result;
use crate::graph::{TemporalEdge, TemporalGraph, VertexId};
use crate::time::Time;

use super::{guard, Objective, PathValue};

pub const EXHAUSTIVE_EDGE_LIMIT: usize = 10_000;
pub const EXHAUSTIVE_SNAPSHOT_LIMIT: usize = 1_000;

pub fn exhaustive_paths<T: Time>(
    g: &TemporalGraph<T>,
    source: VertexId,
    t_s: T,
    objective: Objective<T>,
) -> Result<Vec<Option<PathValue<T>>>> {
    guard("edges", g.edge_count(), EXHAUSTIVE_EDGE_LIMIT)?;
    guard("snapshots", g.snapshots().len(), EXHAUSTIVE_SNAPSHOT_LIMIT)?;
    let mut edges: Vec<TemporalEdge<T>> = g.edges().collect();
    edges.sort_by_key(|e| e.t);
    let n = g.vertex_count();

    let mut out: Vec<Option<PathValue<T>>> = match objective {
        Objective::Foremost => earliest_arrival(&edges, n, source, t_s)
            .into_iter()
            .map(|a| a.map(PathValue::Arrival))
            .collect(),
        Objective::Fastest { t_x, t_y } => {
            let mut best: Vec<Option<T>> = vec![None; n];
            let mut departures: Vec<T> = edges
                .iter()
                .filter(|e| e.src == source && e.t >= t_x && e.t >= t_s)
                .map(|e| e.t)
                .collect();
            departures.dedup();
            for tau in departures {
                for (v, a) in earliest_arrival(&edges, n, source, tau).into_iter().enumerate() {
                    if let Some(a) = a.filter(|&a| a <= t_y) {
                        let d = a - tau;
                        if best[v].is_none_or(|b| d < b) {
                            best[v] = Some(d);
                        }
                    }
                }
            }
            best.into_iter().map(|d| d.map(PathValue::Duration)).collect()
        }
        Objective::Shortest => {
            let layers = earliest_by_hops(g, source, t_s, n)?;
            (0..n)
                .map(|v| layers.iter().position(|l| l[v].is_some()).map(|h| PathValue::Hops(h as u32)))
                .collect()
        }
    };
    out[source.index()] = Some(match objective {
        Objective::Foremost => PathValue::Arrival(t_s),
        Objective::Fastest { .. } => PathValue::Duration(T::zero()),
        Objective::Shortest => PathValue::Hops(0),
    });
    Ok(out)
}

/// Earliest arrival over paths with at least one edge whose first edge is not
/// earlier than `depart`. Edges of one timestamp are relaxed to a fixpoint,
/// since a path may use several of them in a row.
fn earliest_arrival<T: Time>(sorted: &[TemporalEdge<T>], n: usize, source: VertexId, depart: T) -> Vec<Option<T>> {
    let mut arr: Vec<Option<T>> = vec![None; n];
    let ready = |arr: &[Option<T>], u: VertexId, t: T| {
        if u == source {
            depart <= t
        } else {
            arr[u.index()].is_some_and(|a| a <= t)
        }
    };
    let mut i = 0;
    while i < sorted.len() {
        let t = sorted[i].t;
        let mut j = i;
        while j < sorted.len() && sorted[j].t == t {
            j += 1;
        }
        loop {
            let mut changed = false;
            for e in &sorted[i..j] {
                if e.dst != source && ready(&arr, e.src, t) && arr[e.dst.index()].is_none_or(|a| t < a) {
                    arr[e.dst.index()] = Some(t);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        i = j;
    }
    arr
}

/// `layers[h][v]`: earliest arrival at `v` using exactly `h` edges
/// (`h <= max_hops`), walks allowed. Layer 0 holds only the source at `t_s`.
pub fn earliest_by_hops<T: Time>(
    g: &TemporalGraph<T>,
    source: VertexId,
    t_s: T,
    max_hops: usize,
) -> Result<Vec<Vec<Option<T>>>> {
    guard("edges", g.edge_count(), EXHAUSTIVE_EDGE_LIMIT)?;
    let n = g.vertex_count();
    let edges: Vec<TemporalEdge<T>> = g.edges().collect();
    let mut layer = vec![None; n];
    layer[source.index()] = Some(t_s);
    let mut layers = vec![layer];
    for _ in 0..max_hops {
        let prev = layers.last().unwrap();
        let mut next: Vec<Option<T>> = vec![None; n];
        for e in &edges {
            if prev[e.src.index()].is_some_and(|a| a <= e.t) && next[e.dst.index()].is_none_or(|b| e.t < b) {
                next[e.dst.index()] = Some(e.t);
            }
        }
        layers.push(next);
    }
    Ok(layers)
}
