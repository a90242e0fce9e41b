//! Conventional solver: for every ordered vertex pair a sorted list of edge
//! times, searched by bisection. Foremost is a Dijkstra over arrival times,
//! fastest repeats it once per departure time of the source, shortest relaxes
//! hop layers.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::{TemporalGraph, VertexId};
use crate::time::Time;

use super::{Objective, PathValue};

pub struct Baseline<T> {
    /// Pair range of each vertex.
    offsets: Vec<usize>,
    pair_dst: Vec<u32>,
    /// Time range of each pair.
    pair_times: Vec<usize>,
    times: Vec<T>,
    source_times: Vec<Vec<T>>,
}

impl<T: Time> Baseline<T> {
    pub fn new(g: &TemporalGraph<T>) -> Self {
        let n = g.vertex_count();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut pair_dst = Vec::new();
        let mut pair_times = vec![0];
        let mut times = Vec::with_capacity(g.edge_count());
        let mut source_times = Vec::with_capacity(n);
        let mut buf: Vec<(u32, T)> = Vec::new();
        offsets.push(0);
        for u in g.vertices() {
            buf.clear();
            buf.extend(g.out_edges(u).map(|(v, t)| (v.0, t)));
            buf.sort_unstable();
            for (i, &(v, t)) in buf.iter().enumerate() {
                if i == 0 || buf[i - 1].0 != v {
                    if i > 0 {
                        pair_times.push(times.len());
                    }
                    pair_dst.push(v);
                }
                times.push(t);
            }
            if !buf.is_empty() {
                pair_times.push(times.len());
            }
            offsets.push(pair_dst.len());
            let mut ts: Vec<T> = buf.iter().map(|&(_, t)| t).collect();
            ts.sort_unstable();
            ts.dedup();
            source_times.push(ts);
        }
        Baseline { offsets, pair_dst, pair_times, times, source_times }
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Earliest time >= `a` on the pair, if any.
    fn next_time(&self, pair: usize, a: T) -> Option<T> {
        let ts = &self.times[self.pair_times[pair]..self.pair_times[pair + 1]];
        let i = ts.partition_point(|&t| t < a);
        ts.get(i).copied()
    }

    fn check(&self, s: VertexId) -> Result<()> {
        if s.index() >= self.vertex_count() {
            return Err(Error::UnknownVertex(s.to_string()));
        }
        Ok(())
    }

    /// Earliest arrival at every vertex, leaving `s` no earlier than `t_s`.
    /// Arrivals later than `horizon` are not explored.
    fn dijkstra(&self, s: VertexId, t_s: T, horizon: T, arr: &mut Vec<Option<T>>) {
        arr.clear();
        arr.resize(self.vertex_count(), None);
        arr[s.index()] = Some(t_s);
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((t_s, s.0)));
        while let Some(Reverse((a, u))) = heap.pop() {
            if arr[u as usize] != Some(a) {
                continue;
            }
            for p in self.offsets[u as usize]..self.offsets[u as usize + 1] {
                let v = self.pair_dst[p] as usize;
                if let Some(t) = self.next_time(p, a) {
                    if t <= horizon && arr[v].is_none_or(|b| t < b) {
                        arr[v] = Some(t);
                        heap.push(Reverse((t, v as u32)));
                    }
                }
            }
        }
    }

    pub fn foremost(&self, s: VertexId, t_s: T) -> Result<Vec<Option<T>>> {
        self.check(s)?;
        let mut arr = Vec::new();
        self.dijkstra(s, t_s, T::max_value(), &mut arr);
        Ok(arr)
    }

    pub fn fastest(&self, s: VertexId, t_x: T, t_y: T) -> Result<Vec<Option<T>>> {
        self.check(s)?;
        let mut best: Vec<Option<T>> = vec![None; self.vertex_count()];
        let mut arr = Vec::new();
        for &tau in self.source_times[s.index()].iter().filter(|&&t| t >= t_x && t <= t_y) {
            self.dijkstra(s, tau, t_y, &mut arr);
            for (v, a) in arr.iter().enumerate() {
                if let Some(a) = *a {
                    let d = a - tau;
                    if best[v].is_none_or(|b| d < b) {
                        best[v] = Some(d);
                    }
                }
            }
        }
        best[s.index()] = Some(T::zero());
        Ok(best)
    }

    pub fn shortest(&self, s: VertexId, t_s: T) -> Result<Vec<Option<u32>>> {
        self.check(s)?;
        let n = self.vertex_count();
        let mut hops: Vec<Option<u32>> = vec![None; n];
        // earliest arrival seen with at most h hops; a later arrival with more
        // hops can never help
        let mut best: Vec<Option<T>> = vec![None; n];
        hops[s.index()] = Some(0);
        best[s.index()] = Some(t_s);
        let mut frontier = vec![(s.0, t_s)];
        let mut h = 0;
        while !frontier.is_empty() {
            h += 1;
            let mut layer: Vec<Option<T>> = vec![None; n];
            let mut touched = Vec::new();
            for &(u, a) in &frontier {
                for p in self.offsets[u as usize]..self.offsets[u as usize + 1] {
                    let v = self.pair_dst[p] as usize;
                    if let Some(t) = self.next_time(p, a) {
                        if layer[v].is_none_or(|b| t < b) {
                            if layer[v].is_none() {
                                touched.push(v);
                            }
                            layer[v] = Some(t);
                        }
                    }
                }
            }
            frontier.clear();
            for v in touched {
                let t = layer[v].unwrap();
                if best[v].is_none_or(|b| t < b) {
                    best[v] = Some(t);
                    hops[v].get_or_insert(h);
                    frontier.push((v as u32, t));
                }
            }
        }
        Ok(hops)
    }

    pub fn solve(&self, s: VertexId, t_s: T, objective: Objective<T>) -> Result<Vec<Option<PathValue<T>>>> {
        Ok(match objective {
            Objective::Foremost => self.foremost(s, t_s)?.into_iter().map(|a| a.map(PathValue::Arrival)).collect(),
            Objective::Fastest { t_x, t_y } => self
                .fastest(s, t_x.max(t_s), t_y)?
                .into_iter()
                .map(|d| d.map(PathValue::Duration))
                .collect(),
            Objective::Shortest => self.shortest(s, t_s)?.into_iter().map(|h| h.map(PathValue::Hops)).collect(),
        })
    }
}
