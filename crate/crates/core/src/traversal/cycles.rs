use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{TemporalEdge, TemporalGraph, VertexId};
use crate::time::Time;

use super::{EdgeLabel, TraversalTree};

/// Closed sequence of temporal edges with non-decreasing timestamps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TemporalCycle<T> {
    pub edges: Vec<TemporalEdge<T>>,
}

impl<T: Time> TemporalCycle<T> {
    pub fn start(&self) -> VertexId {
        self.edges[0].src
    }

    /// Round trip time: last edge time minus first edge time.
    pub fn span(&self) -> T {
        self.edges[self.edges.len() - 1].t - self.edges[0].t
    }

    pub fn is_valid(&self) -> bool {
        let (Some(first), Some(last)) = (self.edges.first(), self.edges.last()) else {
            return false;
        };
        first.src == last.dst
            && self.edges.windows(2).all(|w| w[0].dst == w[1].src && w[0].t <= w[1].t)
    }
}

/// One cycle per backward edge `(u, v, t)`: the tree path from the ancestor
/// occurrence of `v` down to the occurrence of `u` that traversed the edge,
/// closed by the edge itself. Cycles come out in traversal order.
pub fn extract_cycles<T: Time>(tree: &TraversalTree<T>, g: &TemporalGraph<T>) -> Result<Vec<TemporalCycle<T>>> {
    if !tree.kind().is_dfs() {
        return Err(Error::Contract("cycles are extracted from DFS trees only".into()));
    }
    let mut cycles = Vec::new();
    for entry in tree.log().iter().filter(|e| e.label == EdgeLabel::Backward) {
        let closing = g.edge(entry.edge);
        let mut edges = vec![closing];
        let mut cur = entry.from;
        while tree.occurrence(cur).vertex() != closing.dst {
            let e = tree
                .entry_edge(cur)
                .expect("backward edge target lies on the root path");
            edges.push(e);
            cur = tree.occurrence(cur).parent;
        }
        edges.reverse();
        cycles.push(TemporalCycle { edges });
    }
    Ok(cycles)
}
