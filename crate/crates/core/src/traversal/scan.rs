//! Per-vertex out-edge cursors.
//!
//! Successive visits of a vertex have strictly decreasing visit times, and a
//! finished visit has consumed every out-edge at or after its visit time. The
//! edges a new visit still has to process are therefore exactly those in
//! `[sigma_new, sigma_prev)`: a contiguous slice just below the vertex's
//! cursor. The cursor only ever moves down, so all slices together cost
//! `O(|E|)`.

use crate::graph::TemporalGraph;
use crate::time::Time;

use super::NONE;

const SMALL_SLICE: u32 = 16;

/// Order in which a slice is consumed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Order {
    /// Latest timestamp first; equal timestamps in storage order.
    Reverse,
    /// Reverse scan, but reaching a neighbor's earliest edge in the slice
    /// expands all of that neighbor's edges in ascending time.
    Grouped,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Slice {
    lo: u32,
    group_lo: u32,
    group_end: u32,
    cur: u32,
    chain: u32,
    /// Arena position of the slice's first edge (grouped order only).
    base: u32,
}

pub(crate) struct Scanner<'g, T> {
    time: &'g [T],
    dst: &'g [u32],
    offsets: &'g [usize],
    /// Cursor position plus one; 0 while the vertex is untouched.
    cursor: Vec<u32>,
    order: Order,
    // Grouped order: per slice edge, the next edge of the slice towards the
    // same neighbor and whether it is that neighbor's first. Slices are
    // closed in reverse opening order, so the arena is a stack.
    next_same: Vec<u32>,
    is_head: Vec<bool>,
    stamp: Vec<u32>,
    last_pos: Vec<u32>,
    token: u32,
    n: usize,
    pub(crate) moved: usize,
}

impl<'g, T: Time> Scanner<'g, T> {
    pub(crate) fn new(g: &'g TemporalGraph<T>, order: Order) -> Self {
        let n = g.vertex_count();
        Scanner {
            time: g.time_slice(),
            dst: g.dst_slice(),
            offsets: g.offsets(),
            cursor: vec![0; n],
            order,
            next_same: Vec::new(),
            is_head: Vec::new(),
            stamp: Vec::new(),
            last_pos: Vec::new(),
            n,
            token: 0,
            moved: 0,
        }
    }

    /// Opens the slice of not-yet-consumed edges of `u` active at or after
    /// `sigma`.
    pub(crate) fn open(&mut self, u: u32, sigma: T) -> Slice {
        let u = u as usize;
        let c = self.cursor[u];
        let hi = if c == 0 { self.offsets[u + 1] as u32 } else { c - 1 };
        let floor = self.offsets[u] as u32;
        let mut lo = hi;
        while lo > floor && self.time[lo as usize - 1] >= sigma {
            lo -= 1;
        }
        self.moved += (hi - lo) as usize;
        self.cursor[u] = lo + 1;

        let base = self.next_same.len() as u32;
        if self.order == Order::Grouped && lo < hi {
            if hi - lo <= SMALL_SLICE {
                self.link_small(lo, hi, base);
            } else {
                self.link_stamped(lo, hi, base);
            }
        }
        Slice {
            lo,
            group_lo: hi,
            group_end: hi,
            cur: hi,
            chain: NONE,
            base,
        }
    }

    /// Short slices are linked by looking back within the slice, which
    /// avoids touching the per-vertex stamp arrays.
    fn link_small(&mut self, lo: u32, hi: u32, base: u32) {
        for p in lo..hi {
            let d = self.dst[p as usize];
            let prev = (lo..p).rev().find(|&q| self.dst[q as usize] == d);
            self.is_head.push(prev.is_none());
            self.next_same.push(NONE);
            if let Some(q) = prev {
                self.next_same[(base + (q - lo)) as usize] = p;
            }
        }
    }

    fn link_stamped(&mut self, lo: u32, hi: u32, base: u32) {
        if self.stamp.is_empty() {
            self.stamp = vec![0; self.n];
            self.last_pos = vec![0; self.n];
        }
        self.token += 1;
        for p in lo..hi {
            let d = self.dst[p as usize] as usize;
            if self.stamp[d] != self.token {
                self.stamp[d] = self.token;
                self.is_head.push(true);
            } else {
                self.is_head.push(false);
                self.next_same[(base + (self.last_pos[d] - lo)) as usize] = p;
            }
            self.next_same.push(NONE);
            self.last_pos[d] = p;
        }
    }

    /// Releases the arena space of the most recently opened live slice.
    #[inline]
    pub(crate) fn close(&mut self, s: &Slice) {
        self.next_same.truncate(s.base as usize);
        self.is_head.truncate(s.base as usize);
    }

    /// Next edge id of the slice, or `None` once it is exhausted.
    #[inline]
    pub(crate) fn next(&self, s: &mut Slice) -> Option<usize> {
        let grouped = self.order == Order::Grouped;
        loop {
            if s.chain != NONE {
                let p = s.chain;
                s.chain = self.next_same[(s.base + (p - s.lo)) as usize];
                return Some(p as usize);
            }
            if s.cur < s.group_end {
                let p = s.cur;
                s.cur += 1;
                if grouped {
                    let slot = (s.base + (p - s.lo)) as usize;
                    if !self.is_head[slot] {
                        continue;
                    }
                    s.chain = self.next_same[slot];
                }
                return Some(p as usize);
            }
            if s.group_lo == s.lo {
                return None;
            }
            s.group_end = s.group_lo;
            let t = self.time[s.group_end as usize - 1];
            let mut g = s.group_end - 1;
            while g > s.lo && self.time[g as usize - 1] == t {
                g -= 1;
            }
            s.group_lo = g;
            s.cur = g;
        }
    }
}
