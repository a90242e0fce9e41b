use crate::error::{Error, Result};
use crate::graph::{TemporalGraph, VertexId};
use crate::time::Time;

use super::scan::{Order, Scanner};
use super::{check_source, Counters, EdgeLabel, LogEntry, Occurrence, TraversalKind, TraversalTree, NONE};

/// Temporal BFS.
///
/// Queue records double as tree occurrences: they are appended in push order
/// and popped in the same order, so the queue is just a read position into
/// the occurrence array. A vertex is "in the queue" iff its most recent
/// record has not been popped yet. While in the queue a record may still be
/// improved (earlier visit time, new parent) by another vertex of the level
/// above it.
pub fn bfs<T: Time>(g: &TemporalGraph<T>, source: VertexId, t_s: T) -> Result<TraversalTree<T>> {
    check_source(g, source)?;
    let n = g.vertex_count();
    let dst = g.dst_slice();
    let time = g.time_slice();
    let mut scanner = Scanner::new(g, Order::Grouped);

    // per vertex: visit time and its most recent record
    let mut state = vec![(T::sentinel(), NONE); n];
    let mut records = vec![Occurrence::root(source, t_s)];
    // log position of each record's entry traversal
    let mut entry_log = vec![NONE];
    let mut log = Vec::new();
    state[source.index()] = (t_s, 0);

    let mut head = 0usize;
    while head < records.len() {
        let r = head as u32;
        head += 1;
        let Occurrence { vertex: u, sigma: sigma_u, dist: level, .. } = records[r as usize];
        let mut slice = scanner.open(u.0, sigma_u);
        while let Some(e) = scanner.next(&mut slice) {
            let w = dst[e] as usize;
            let t = time[e];
            log.push(LogEntry {
                edge: e as u32,
                from: r,
                label: EdgeLabel::NonTree,
            });
            let (sigma_w, rec) = state[w];
            let queued = rec != NONE && rec as usize >= head;
            let push = if !queued {
                true
            } else {
                let queued_level = records[rec as usize].dist;
                if queued_level == level + 1 {
                    if sigma_w > t {
                        let o = &mut records[rec as usize];
                        o.sigma = t;
                        o.parent = r;
                        o.entry = e as u32;
                        entry_log[rec as usize] = log.len() as u32 - 1;
                        state[w].0 = t;
                    }
                    false
                } else if queued_level == level {
                    true
                } else {
                    return Err(Error::QueueInvariant {
                        vertex: w as u32,
                        level,
                        found: queued_level,
                    });
                }
            };
            if push && sigma_w > t {
                state[w] = (t, records.len() as u32);
                entry_log.push(log.len() as u32 - 1);
                records.push(Occurrence {
                    vertex: VertexId(w as u32),
                    parent: r,
                    entry: e as u32,
                    dist: level + 1,
                    sigma: t,
                });
            }
        }
        scanner.close(&slice);
    }

    // an edge is a tree edge iff it is the final entry of some record
    for &i in &entry_log[1..] {
        log[i as usize].label = EdgeLabel::Tree;
    }
    let counters = Counters {
        traversed: log.len(),
        scanned: scanner.moved,
    };
    Ok(TraversalTree::new(TraversalKind::Bfs, source, t_s, records, log, counters, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Labels;
    use crate::traversal::classify_traversal;

    #[test]
    fn edgeless() {
        let (g, _) = TemporalGraph::<i64>::from_edges(3, vec![], Labels::Numeric, false).unwrap();
        let tree = bfs(&g, VertexId(1), 0).unwrap();
        assert_eq!(tree.occurrences().len(), 1);
        assert_eq!(tree.reachable_set(), vec![VertexId(1)]);
    }

    #[test]
    fn queued_record_is_improved_in_place() {
        // 0->1 at 1, 0->2 at 1; both 1 and 2 reach 3, 2 earlier
        let edges = vec![(0, 1, 1), (0, 2, 1), (1, 3, 9), (2, 3, 4)];
        let (g, _) = TemporalGraph::<i64>::from_edges(4, edges, Labels::Numeric, false).unwrap();
        let tree = bfs(&g, VertexId(0), 0).unwrap();
        let occ = tree.occurrences_of(VertexId(3));
        assert_eq!(occ.len(), 1);
        let o = tree.occurrence(occ[0]);
        assert_eq!((o.dist(), o.sigma()), (2, 4));
        assert_eq!(tree.occurrence(o.parent().unwrap()).vertex(), VertexId(2));
        let c = classify_traversal(&tree, &g);
        assert_eq!(c.count(EdgeLabel::Tree), 3);
        assert_eq!(c.count(EdgeLabel::NonTree), 1);
    }
}
