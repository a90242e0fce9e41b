//! Depth-first and breadth-first traversal of temporal graphs.
//!
//! A temporal graph is a set of directed edges `(u, v, t)`. A traversal from
//! a source `s` started at time `t_s` only follows edges whose timestamps do
//! not decrease along the way, and may revisit a vertex whenever it can be
//! reached strictly earlier than before. All three traversals
//! ([`dfs_v1`], [`dfs_v2`], [`bfs`]) run in `O(|V| + |E|)` time.
//!
//! Trees built by the traversals answer single-source path queries:
//! foremost (earliest arrival), fastest (minimum duration within a time
//! window) and shortest (fewest hops).
//!
//! ```
//! use tempotrav::{fixtures, paths::{foremost_paths, ForemostEngine}, VertexId};
//!
//! let g = fixtures::g1();
//! let c = g.resolve("c").unwrap();
//! let fp = foremost_paths(&g, VertexId(0), 2, ForemostEngine::DfsV1).unwrap();
//! assert_eq!(fp.arrival(c), Some(5));
//! ```

pub mod check;
pub mod error;
pub mod export;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod paths;
pub mod time;
pub mod traversal;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{EdgeId, GraphStats, Labels, StaticGraph, TemporalEdge, TemporalGraph, VertexId};
pub use time::Time;
pub use traversal::{
    bfs, classify_edges, classify_traversal, dfs_v1, dfs_v2, extract_cycles, reachable_set, traverse, EdgeLabel,
    TraversalKind, TraversalTree,
};

/// Default timestamp type: signed 64-bit, e.g. epoch seconds.
pub type Timestamp = i64;
pub type Graph = TemporalGraph<Timestamp>;
pub type Tree = TraversalTree<Timestamp>;
pub type Edge = TemporalEdge<Timestamp>;
pub type Cycle = traversal::TemporalCycle<Timestamp>;
pub type OccurrenceIndex = paths::OccurrenceIndex<Timestamp>;
