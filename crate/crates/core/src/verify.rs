//! Randomized property suite: every engine against the reference oracles and
//! the structural invariant checkers, on a seeded stream of small graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::check::{check_agreement, check_graph, check_index, check_path, check_tree};
use crate::error::Result;
use crate::generate::generate_random;
use crate::graph::{Labels, TemporalEdge, TemporalGraph, VertexId};
use crate::oracle::{earliest_by_hops, exhaustive_paths, simulate_definition, Baseline, Objective, PathValue};
use crate::paths::{
    build_occurrence_index, fastest_paths, foremost_from, foremost_paths, shortest_paths, ForemostEngine,
};
use crate::traversal::{dfs_with_order, traverse, ScanOrder, TraversalKind, TraversalTree};

/// Deliberate engine defects, used to show the suite catches them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mutation {
    /// DFS-v1 picks the latest eligible edge instead of the per-neighbor earliest.
    DfsV1Latest,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct VerifyConfig {
    pub instances: usize,
    pub max_n: usize,
    pub max_m: usize,
    pub t_max: i64,
    pub seed: u64,
    pub mutation: Option<Mutation>,
    /// Also compare against the baseline solver.
    pub baseline: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            instances: 200,
            max_n: 12,
            max_m: 40,
            t_max: 30,
            seed: 0,
            mutation: None,
            baseline: true,
        }
    }
}

/// Parameters of one generated instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceParams {
    pub index: usize,
    pub n: usize,
    pub m: usize,
    pub t_max: i64,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub instance: InstanceParams,
    pub property: String,
    pub detail: String,
    /// Minimized edge list that still fails the same property.
    pub n: usize,
    pub edges: Vec<TemporalEdge<i64>>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerifyReport {
    pub instances: usize,
    pub queries: usize,
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The i-th instance of the stream; depends only on `seed` and `i`.
pub fn instance_params(cfg: &VerifyConfig, index: usize) -> InstanceParams {
    let seed = cfg.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(index as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=cfg.max_n.max(2));
    let t_max = rng.gen_range(0..=cfg.t_max.max(0));
    let cap = n * (n - 1) * (t_max as usize + 1);
    let m = rng.gen_range(0..=cfg.max_m.min(cap));
    InstanceParams { index, n, m, t_max, seed }
}

pub fn instance(params: &InstanceParams) -> Result<TemporalGraph<i64>> {
    generate_random(params.n, params.m, params.t_max, params.seed)
}

/// Start times exercised per source: 0 and the median edge timestamp.
pub fn start_times(g: &TemporalGraph<i64>) -> Vec<i64> {
    let mut times: Vec<i64> = g.edges().map(|e| e.t).collect();
    times.sort_unstable();
    let mut out = vec![0];
    if let Some(&median) = times.get(times.len() / 2) {
        if median != 0 {
            out.push(median);
        }
    }
    out
}

pub fn run(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    for i in 0..cfg.instances {
        let params = instance_params(cfg, i);
        let g = instance(&params)?;
        report.instances += 1;
        report.queries += g.vertex_count() * start_times(&g).len();
        if let Some((property, detail)) = check_instance(&g, cfg) {
            let (n, edges) = shrink(&g, cfg, &property);
            report.failures.push(Failure { instance: params, property, detail, n, edges });
        }
    }
    Ok(report)
}

/// First violated property on `g`, if any.
pub fn check_instance(g: &TemporalGraph<i64>, cfg: &VerifyConfig) -> Option<(String, String)> {
    if let Some(v) = check_graph(g).into_iter().next() {
        return Some((v.invariant.to_string(), v.to_string()));
    }
    let baseline = cfg.baseline.then(|| Baseline::new(g));
    for s in g.vertices() {
        for t_s in start_times(g) {
            if let Err((p, d)) = check_query(g, s, t_s, cfg.mutation, baseline.as_ref()) {
                return Some((p, format!("source {s}, t_s {t_s}: {d}")));
            }
        }
    }
    None
}

type Outcome = std::result::Result<(), (String, String)>;

fn fail(property: &str, detail: impl Into<String>) -> Outcome {
    Err((property.to_string(), detail.into()))
}

fn lift<T>(r: Result<T>, property: &str) -> std::result::Result<T, (String, String)> {
    r.map_err(|e| (property.to_string(), e.to_string()))
}

fn engine_tree(
    g: &TemporalGraph<i64>,
    s: VertexId,
    t_s: i64,
    kind: TraversalKind,
    mutation: Option<Mutation>,
) -> Result<TraversalTree<i64>> {
    match (kind, mutation) {
        (TraversalKind::DfsV1, Some(Mutation::DfsV1Latest)) => dfs_with_order(g, s, t_s, kind, ScanOrder::Latest),
        _ => traverse(g, s, t_s, kind),
    }
}

fn check_query(
    g: &TemporalGraph<i64>,
    s: VertexId,
    t_s: i64,
    mutation: Option<Mutation>,
    baseline: Option<&Baseline<i64>>,
) -> Outcome {
    let n = g.vertex_count();
    let mut trees = Vec::new();
    for kind in TraversalKind::ALL {
        let tree = lift(engine_tree(g, s, t_s, kind, mutation), "engine-error")?;
        let reference = lift(simulate_definition(g, s, t_s, kind), "oracle-error")?;
        if tree.occurrences() != reference.occurrences() {
            return fail("definition-equivalence", format!("{} occurrences differ", kind.name()));
        }
        if tree.log() != reference.log() {
            return fail("definition-equivalence", format!("{} traversal log differs", kind.name()));
        }
        if let Some(v) = check_tree(g, &tree).into_iter().next() {
            return fail(v.invariant, format!("{}: {}", kind.name(), v.detail));
        }
        trees.push(tree);
    }
    let refs: Vec<&TraversalTree<i64>> = trees.iter().collect();
    if let Some(v) = check_agreement(&refs).into_iter().next() {
        return fail(v.invariant, v.detail);
    }
    let stat = g.project_static().reachable_count(s);
    if stat < trees[0].reachable_count() {
        return fail("static-dominates", format!("static {stat} < temporal {}", trees[0].reachable_count()));
    }

    // foremost
    let expect = lift(exhaustive_paths(g, s, t_s, Objective::Foremost), "oracle-error")?;
    let index = lift(build_occurrence_index(&trees[1]), "engine-error")?;
    if let Some(v) = check_index(&index).into_iter().next() {
        return fail(v.invariant, v.detail);
    }
    let from_index = lift(foremost_from(&index, t_s), "engine-error")?;
    for engine in [ForemostEngine::DfsV1, ForemostEngine::Bfs] {
        let fp = lift(foremost_paths(g, s, t_s, engine), "engine-error")?;
        for v in g.vertices() {
            let got = fp.arrival(v).map(PathValue::Arrival);
            if got != expect[v.index()] {
                return fail("foremost-optimum", format!("{engine:?} at {v}: {got:?} vs {:?}", expect[v.index()]));
            }
            if let Some(p) = fp.path(v) {
                check_answer(&p, s, v, t_s, p.t_end().unwrap_or(t_s), fp.arrival(v).unwrap())?;
            }
        }
    }
    for v in g.vertices() {
        if from_index[v.index()].map(PathValue::Arrival) != expect[v.index()] {
            return fail("foremost-from-index", format!("at {v}: {:?}", from_index[v.index()]));
        }
    }
    if let Some(b) = baseline {
        compare_baseline(b, s, t_s, Objective::Foremost, &expect)?;
    }

    // fastest over the open window and a truncated one
    let t_hi = g.edges().map(|e| e.t).max().unwrap_or(t_s).max(t_s);
    for (t_x, t_y) in [(t_s, i64::MAX - 1), (t_s, t_s + (t_hi - t_s) / 2)] {
        let objective = Objective::Fastest { t_x, t_y };
        let expect = lift(exhaustive_paths(g, s, t_s, objective), "oracle-error")?;
        let fp = lift(fastest_paths(&index, &trees[1], t_x, t_y), "engine-error")?;
        for v in g.vertices() {
            let got = fp.duration(v).map(PathValue::Duration);
            if got != expect[v.index()] {
                return fail("fastest-optimum", format!("[{t_x}, {t_y}] at {v}: {got:?} vs {:?}", expect[v.index()]));
            }
            if let (Some(p), Some(d)) = (fp.path(v), fp.duration(v)) {
                let span = p.t_end().zip(p.t_start()).map_or(0, |(e, b)| e - b);
                check_answer(&p, s, v, t_x, span, d)?;
                if p.t_end().is_some_and(|e| e > t_y) {
                    return fail("fastest-window", format!("{v}: {:?}", p.edges()));
                }
            }
        }
        if let Some(b) = baseline {
            compare_baseline(b, s, t_s, objective, &expect)?;
        }
    }

    // shortest, plus the exact per-level structure of the BFS tree
    let expect = lift(exhaustive_paths(g, s, t_s, Objective::Shortest), "oracle-error")?;
    let sp = lift(shortest_paths(g, s, t_s), "engine-error")?;
    for v in g.vertices() {
        let got = sp.hops(v).map(PathValue::Hops);
        if got != expect[v.index()] {
            return fail("shortest-optimum", format!("at {v}: {got:?} vs {:?}", expect[v.index()]));
        }
        if let Some(p) = sp.path(v) {
            check_answer(&p, s, v, t_s, p.hops() as i64, sp.hops(v).unwrap() as i64)?;
        }
    }
    let layers = lift(earliest_by_hops(g, s, t_s, n), "oracle-error")?;
    let bfs = &trees[2];
    for v in g.vertices() {
        let mut expected = Vec::new();
        let mut best: Option<i64> = None;
        for (h, layer) in layers.iter().enumerate() {
            if let Some(a) = layer[v.index()] {
                if best.is_none_or(|b| a < b) {
                    best = Some(a);
                    expected.push((h as u32, a));
                }
            }
        }
        let got: Vec<(u32, i64)> = bfs
            .occurrences_of(v)
            .iter()
            .map(|&o| (bfs.occurrence(o).dist(), bfs.occurrence(o).sigma()))
            .collect();
        if got != expected {
            return fail("bfs-levels", format!("{v}: {got:?} vs {expected:?}"));
        }
    }
    if let Some(b) = baseline {
        compare_baseline(b, s, t_s, Objective::Shortest, &expect)?;
    }
    Ok(())
}

fn check_answer(
    p: &crate::paths::PathAnswer<i64>,
    s: VertexId,
    v: VertexId,
    lower: i64,
    measured: i64,
    reported: i64,
) -> Outcome {
    if let Some(viol) = check_path(p, s, v, lower).into_iter().next() {
        return fail(viol.invariant, viol.detail);
    }
    if !p.edges().is_empty() && measured != reported {
        return fail("path-value", format!("{v}: path gives {measured}, reported {reported}"));
    }
    Ok(())
}

fn compare_baseline(
    b: &Baseline<i64>,
    s: VertexId,
    t_s: i64,
    objective: Objective<i64>,
    expect: &[Option<PathValue<i64>>],
) -> Outcome {
    let got = lift(b.solve(s, t_s, objective), "baseline-error")?;
    if got != expect {
        return fail("baseline-agreement", format!("{objective:?}: {got:?} vs {expect:?}"));
    }
    Ok(())
}

/// Greedy edge removal keeping the property violated.
pub fn shrink(g: &TemporalGraph<i64>, cfg: &VerifyConfig, property: &str) -> (usize, Vec<TemporalEdge<i64>>) {
    let n = g.vertex_count();
    let mut edges: Vec<TemporalEdge<i64>> = g.edges().collect();
    let still_fails = |edges: &[TemporalEdge<i64>]| {
        let raw = edges.iter().map(|e| (e.src.0, e.dst.0, e.t)).collect();
        let Ok((h, _)) = TemporalGraph::from_edges(n, raw, Labels::Numeric, false) else {
            return false;
        };
        check_instance(&h, cfg).is_some_and(|(p, _)| p == property)
    };
    let mut i = 0;
    while i < edges.len() {
        let mut trial = edges.clone();
        trial.remove(i);
        if still_fails(&trial) {
            edges = trial;
        } else {
            i += 1;
        }
    }
    (n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stream_is_reproducible() {
        let cfg = VerifyConfig::default();
        let a: Vec<_> = (0..20).map(|i| instance_params(&cfg, i)).collect();
        let b: Vec<_> = (0..20).map(|i| instance_params(&cfg, i)).collect();
        assert_eq!(a, b);
        assert!(a.iter().all(|s| s.n <= 12 && s.m <= 40 && s.t_max <= 30));
    }

    #[test]
    fn small_run_passes() {
        let cfg = VerifyConfig { instances: 25, ..VerifyConfig::default() };
        let report = run(&cfg).unwrap();
        assert!(report.passed(), "{:?}", report.failures.first());
    }

    #[test]
    fn mutation_is_caught_and_shrunk() {
        let cfg = VerifyConfig {
            instances: 60,
            mutation: Some(Mutation::DfsV1Latest),
            ..VerifyConfig::default()
        };
        let report = run(&cfg).unwrap();
        let f = report.failures.first().expect("mutation must be detected");
        assert_eq!(f.property, "definition-equivalence");
        assert!(f.edges.len() <= f.instance.m);
    }
}
