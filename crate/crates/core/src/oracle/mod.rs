//! Reference implementations used to validate the engines.
//!
//! `simulate_definition` and `exhaustive_paths` are deliberately naive and
//! refuse inputs beyond their size guards. `Baseline` is a conventional
//! per-edge-pair solver sized for benchmarking.

mod baseline;
mod exhaustive;
mod simulate;

use crate::error::{Error, Result};

pub use crate::paths::PathValue;
pub use baseline::Baseline;
pub use exhaustive::{earliest_by_hops, exhaustive_paths, EXHAUSTIVE_EDGE_LIMIT, EXHAUSTIVE_SNAPSHOT_LIMIT};
pub use simulate::{simulate_definition, SIMULATION_EDGE_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Objective<T> {
    Foremost,
    /// Minimum duration among paths departing no earlier than `t_x` and
    /// arriving no later than `t_y`.
    Fastest { t_x: T, t_y: T },
    Shortest,
}

fn guard(what: &'static str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        return Err(Error::OracleGuard { what, actual, limit });
    }
    Ok(())
}
