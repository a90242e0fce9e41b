use crate::error::Result;
use crate::graph::{TemporalGraph, VertexId};
use crate::time::Time;

use super::scan::{Order, Scanner, Slice};
use super::{check_source, Counters, EdgeLabel, LogEntry, Occurrence, TraversalKind, TraversalTree};

/// Edge selection rule of the DFS engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum ScanOrder {
    /// Earliest edge towards the chosen neighbor; neighbors whose earliest
    /// eligible edge is latest go first.
    EarliestPerNeighbor,
    /// Latest eligible edge overall.
    Latest,
}

/// DFS choosing, for the selected out-neighbor, its earliest eligible edge.
///
/// The out-neighbor itself is the one whose earliest eligible edge is the
/// latest (ties: smaller vertex id), which lets the engine run as a reverse
/// scan of each vertex's chronological edge list.
pub fn dfs_v1<T: Time>(g: &TemporalGraph<T>, source: VertexId, t_s: T) -> Result<TraversalTree<T>> {
    dfs_with_order(g, source, t_s, TraversalKind::DfsV1, ScanOrder::EarliestPerNeighbor)
}

/// DFS choosing the latest eligible out-edge (ties: smaller vertex id).
pub fn dfs_v2<T: Time>(g: &TemporalGraph<T>, source: VertexId, t_s: T) -> Result<TraversalTree<T>> {
    dfs_with_order(g, source, t_s, TraversalKind::DfsV2, ScanOrder::Latest)
}

/// Visit time, latest occurrence id plus one (0: unvisited) and whether
/// that occurrence is on the DFS stack.
#[derive(Clone, Copy)]
struct VertexState<T> {
    sigma: T,
    last: u32,
    on_stack: bool,
}

struct Frame {
    occ: u32,
    vertex: u32,
    slice: Slice,
}

pub(crate) fn dfs_with_order<T: Time>(
    g: &TemporalGraph<T>,
    source: VertexId,
    t_s: T,
    kind: TraversalKind,
    order: ScanOrder,
) -> Result<TraversalTree<T>> {
    check_source(g, source)?;
    let n = g.vertex_count();
    let dst = g.dst_slice();
    let time = g.time_slice();
    let mut scanner = Scanner::new(
        g,
        match order {
            ScanOrder::EarliestPerNeighbor => Order::Grouped,
            ScanOrder::Latest => Order::Reverse,
        },
    );

    let mut state = vec![VertexState { sigma: T::zero(), last: 0, on_stack: false }; n];
    let mut occurrences = vec![Occurrence::root(source, t_s)];
    let mut log = Vec::new();

    state[source.index()] = VertexState { sigma: t_s, last: 1, on_stack: true };
    let mut stack = vec![Frame {
        occ: 0,
        vertex: source.0,
        slice: scanner.open(source.0, t_s),
    }];

    while let Some(top) = stack.last_mut() {
        let Some(e) = scanner.next(&mut top.slice) else {
            state[top.vertex as usize].on_stack = false;
            scanner.close(&top.slice);
            stack.pop();
            continue;
        };
        let from = top.occ;
        let w = dst[e];
        let t = time[e];
        let sw = &mut state[w as usize];
        let label = if sw.last == 0 || sw.sigma > t {
            let id = occurrences.len() as u32;
            occurrences.push(Occurrence {
                vertex: VertexId(w),
                parent: from,
                entry: e as u32,
                dist: occurrences[from as usize].dist + 1,
                sigma: t,
            });
            *sw = VertexState { sigma: t, last: id + 1, on_stack: true };
            let slice = scanner.open(w, t);
            stack.push(Frame { occ: id, vertex: w, slice });
            EdgeLabel::Tree
        } else if sw.on_stack {
            EdgeLabel::Backward
        } else if sw.last - 1 > from {
            // an occurrence of w was created inside the subtree of `from`
            EdgeLabel::Forward
        } else {
            EdgeLabel::Cross
        };
        log.push(LogEntry {
            edge: e as u32,
            from,
            label,
        });
    }

    let counters = Counters {
        traversed: log.len(),
        scanned: scanner.moved,
    };
    Ok(TraversalTree::new(kind, source, t_s, occurrences, log, counters, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Labels;
    use crate::traversal::classify_edges;

    fn graph(edges: &[(u32, u32, i64)], n: usize) -> TemporalGraph<i64> {
        TemporalGraph::from_edges(n, edges.to_vec(), Labels::Numeric, false).unwrap().0
    }

    #[test]
    fn isolated_source() {
        let g = graph(&[], 1);
        for tree in [dfs_v1(&g, VertexId(0), 3).unwrap(), dfs_v2(&g, VertexId(0), 3).unwrap()] {
            assert_eq!(tree.occurrences().len(), 1);
            assert_eq!(tree.counters().traversed, 0);
        }
    }

    #[test]
    fn single_edge() {
        let g = graph(&[(0, 1, 4)], 2);
        let tree = dfs_v2(&g, VertexId(0), 2).unwrap();
        assert_eq!(tree.occurrences().len(), 2);
        assert_eq!(tree.occurrence(1).sigma(), 4);
        assert_eq!(tree.occurrence(1).parent(), Some(0));
        let late = dfs_v2(&g, VertexId(0), 5).unwrap();
        assert_eq!(late.occurrences().len(), 1);
    }

    #[test]
    fn unknown_source() {
        let g = graph(&[(0, 1, 4)], 2);
        assert!(dfs_v1(&g, VertexId(2), 0).is_err());
    }

    #[test]
    fn revisits_with_earlier_time() {
        // 0 -> 1 at 9 and at 2; v2 takes 9 first, then revisits 1 at 2
        let g = graph(&[(0, 1, 2), (0, 1, 9), (1, 2, 5)], 3);
        let v2 = dfs_v2(&g, VertexId(0), 0).unwrap();
        let sig: Vec<_> = v2.occurrences_of(VertexId(1)).iter().map(|&o| v2.occurrence(o).sigma()).collect();
        assert_eq!(sig, vec![9, 2]);
        let v1 = dfs_v1(&g, VertexId(0), 0).unwrap();
        assert_eq!(v1.occurrences_of(VertexId(1)).len(), 1);
        let c = classify_edges(&v1, &g).unwrap();
        assert_eq!(c.count(EdgeLabel::Forward), 1);
    }

    #[test]
    fn deep_chain_does_not_recurse() {
        let n = 200_000u32;
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1, i as i64)).collect();
        let g = graph(&edges, n as usize);
        let tree = dfs_v1(&g, VertexId(0), 0).unwrap();
        assert_eq!(tree.occurrences().len(), n as usize);
    }
}
