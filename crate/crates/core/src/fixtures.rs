//! Two small hand-checked graphs used by tests, examples and the CLI.

use crate::graph::TemporalGraph;
use crate::io::{load_edge_list, LoadOptions};

pub const G1: &str = include_str!("../fixtures/g1.tel");
pub const G5: &str = include_str!("../fixtures/g5.tel");

/// Vertices a, b, c, f, g, h (ids 0..6).
pub fn g1() -> TemporalGraph<i64> {
    parse(G1)
}

/// Vertices a, b, c, f, g (ids 0..5).
pub fn g5() -> TemporalGraph<i64> {
    parse(G5)
}

fn parse(text: &str) -> TemporalGraph<i64> {
    load_edge_list(text.as_bytes(), LoadOptions::default())
        .expect("bundled fixture parses")
        .0
}
