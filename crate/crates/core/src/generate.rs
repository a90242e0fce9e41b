use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Labels, TemporalGraph};
use crate::time::Time;

/// Uniform random temporal graph with `m` distinct `(src, dst, t)` triples.
///
/// Endpoints are uniform over ordered pairs of distinct vertices and
/// timestamps uniform over `[0, t_max]`. Colliding triples are resampled, so
/// the result is deterministic for a given seed.
pub fn generate_random<T: Time>(n: usize, m: usize, t_max: T, seed: u64) -> Result<TemporalGraph<T>> {
    if n < 2 {
        return Err(Error::Argument(format!("need at least 2 vertices, got {n}")));
    }
    let span = t_max
        .to_i64()
        .filter(|&t| t >= 0 && !t_max.is_sentinel())
        .ok_or_else(|| Error::Argument(format!("t_max {t_max} out of range")))?;
    let capacity = (n as u128) * (n as u128 - 1) * (span as u128 + 1);
    if m as u128 > capacity {
        return Err(Error::Infeasible {
            n,
            m,
            t_max: t_max.to_string(),
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(u32, u32, T)> = Vec::with_capacity(m);
    while edges.len() < m {
        let missing = m - edges.len();
        for _ in 0..missing {
            let u = rng.gen_range(0..n as u32);
            // skip u to avoid self-loops
            let mut v = rng.gen_range(0..n as u32 - 1);
            if v >= u {
                v += 1;
            }
            let t = T::from(rng.gen_range(0..=span)).expect("timestamp within t_max");
            edges.push((u, v, t));
        }
        edges.sort_unstable();
        edges.dedup();
    }
    Ok(TemporalGraph::from_edges(n, edges, Labels::Numeric, false)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::check_graph;

    #[test]
    fn edgeless() {
        let g: TemporalGraph<i64> = generate_random(2, 0, 5, 3).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.vertex_count(), 2);
    }

    #[test]
    fn deterministic() {
        let a: Vec<_> = generate_random::<i64>(10, 40, 20, 7).unwrap().edges().collect();
        let b: Vec<_> = generate_random::<i64>(10, 40, 20, 7).unwrap().edges().collect();
        assert_eq!(a, b);
        let c: Vec<_> = generate_random::<i64>(10, 40, 20, 8).unwrap().edges().collect();
        assert_ne!(a, c);
    }

    #[test]
    fn invariants_hold() {
        let g = generate_random::<i64>(50, 500, 100, 1).unwrap();
        assert_eq!(g.edge_count(), 500);
        assert_eq!(check_graph(&g), vec![]);
    }

    #[test]
    fn saturated_and_infeasible() {
        let g = generate_random::<i32>(2, 4, 1, 0).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert!(matches!(generate_random::<i32>(2, 5, 1, 0), Err(Error::Infeasible { .. })));
        assert!(generate_random::<i32>(1, 0, 1, 0).is_err());
    }
}
