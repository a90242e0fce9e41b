//! Experiment tables: tree sizes, traversed edges and reachability averaged
//! over source sets, at start times picked as fractions of the snapshot list.

use std::io::Write;
use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use tempotrav::oracle::Baseline;
use tempotrav::paths::{build_occurrence_index, fastest_paths, foremost_paths, ForemostEngine};
use tempotrav::{traverse, Error, Graph, Result, Timestamp, TraversalKind, VertexId};

pub const BENCH_SCHEMA: &str = "tempotrav.bench/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SourceSet {
    Random,
    TopDeg,
}

impl SourceSet {
    pub fn name(self) -> &'static str {
        match self {
            SourceSet::Random => "random",
            SourceSet::TopDeg => "topdeg",
        }
    }
}

/// Parses `random:K` or `topdeg:K`.
pub fn parse_source_set(s: &str) -> std::result::Result<(SourceSet, usize), String> {
    let (kind, k) = s.split_once(':').ok_or_else(|| format!("expected random:K or topdeg:K, got `{s}`"))?;
    let kind = match kind {
        "random" => SourceSet::Random,
        "topdeg" => SourceSet::TopDeg,
        other => return Err(format!("unknown source set `{other}`")),
    };
    let k: usize = k.parse().map_err(|_| format!("bad source count `{k}`"))?;
    if k == 0 {
        return Err("source count must be at least 1".into());
    }
    Ok((kind, k))
}

/// `k` distinct sources. Random sets are seeded; high-degree sets rank by
/// temporal out-degree, ties by vertex id.
pub fn select_sources(g: &Graph, set: SourceSet, k: usize, seed: u64) -> Vec<VertexId> {
    let n = g.vertex_count();
    let k = k.min(n);
    match set {
        SourceSet::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut picked: Vec<VertexId> = sample(&mut rng, n, k).into_iter().map(|i| VertexId(i as u32)).collect();
            picked.sort();
            picked
        }
        SourceSet::TopDeg => {
            let mut all: Vec<VertexId> = g.vertices().collect();
            all.sort_by_key(|&v| (std::cmp::Reverse(g.out_degree(v)), v));
            all.truncate(k);
            all
        }
    }
}

/// The ceil(f * |ss|)-th distinct timestamp (1-based); fraction 0 maps to
/// the first one. An edgeless graph starts at 0.
pub fn start_time_for_fraction(snapshots: &[Timestamp], f: f64) -> Result<Timestamp> {
    if !(0.0..=1.0).contains(&f) {
        return Err(Error::Argument(format!("t_s fraction {f} outside [0, 1]")));
    }
    if snapshots.is_empty() {
        return Ok(0);
    }
    let rank = (f * snapshots.len() as f64).ceil() as usize;
    Ok(snapshots[rank.clamp(1, snapshots.len()) - 1])
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub source_sets: Vec<(SourceSet, usize)>,
    pub fractions: Vec<f64>,
    pub seed: u64,
    pub repeat: usize,
    pub timing: bool,
    pub baseline: bool,
}

/// Averages over one source set at one start time.
#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub source_set: SourceSet,
    pub ts_frac: f64,
    pub t_s: Timestamp,
    pub sources: usize,
    pub t_dfs_v1: f64,
    pub t_dfs_v2: f64,
    pub t_bfs: f64,
    pub e_trv: f64,
    pub v_r: f64,
    pub v_r_static: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub baseline: Option<PathTiming>,
}

/// Mean wall-clock milliseconds per query.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Timing {
    pub ms_dfs_v1: f64,
    pub ms_dfs_v2: f64,
    pub ms_bfs: f64,
}

/// Mean milliseconds per source for path queries, ours against the
/// baseline solver.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct PathTiming {
    pub ms_foremost: f64,
    pub ms_foremost_dfs_v1: f64,
    pub ms_foremost_baseline: f64,
    pub ms_fastest: f64,
    pub ms_fastest_baseline: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExperimentReport {
    pub schema: &'static str,
    pub n: usize,
    pub m: usize,
    pub snapshots: usize,
    pub source_lists: Vec<(SourceSet, Vec<String>)>,
    pub rows: Vec<BenchRow>,
}

fn mean(xs: impl Iterator<Item = f64>) -> f64 {
    let (sum, count) = xs.fold((0.0, 0usize), |(s, c), x| (s + x, c + 1));
    if count == 0 {
        0.0
    } else {
        sum / count as f64
    }
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

/// Best of `repeat` runs.
fn timed<R>(repeat: usize, mut f: impl FnMut() -> Result<R>) -> Result<(R, Duration)> {
    let mut best = Duration::MAX;
    let mut out = None;
    for _ in 0..repeat.max(1) {
        let start = Instant::now();
        let r = f()?;
        best = best.min(start.elapsed());
        out = Some(r);
    }
    Ok((out.expect("at least one run"), best))
}

pub fn run_bench(g: &Graph, cfg: &BenchConfig) -> Result<ExperimentReport> {
    let snapshots = g.snapshots();
    let stat = g.project_static();
    let baseline = cfg.baseline.then(|| Baseline::new(g));
    let mut report = ExperimentReport {
        schema: BENCH_SCHEMA,
        n: g.vertex_count(),
        m: g.edge_count(),
        snapshots: snapshots.len(),
        source_lists: Vec::new(),
        rows: Vec::new(),
    };
    for &(set, k) in &cfg.source_sets {
        let sources = select_sources(g, set, k, cfg.seed);
        report.source_lists.push((set, sources.iter().map(|&v| g.label(v)).collect()));
        let static_reach: Vec<f64> = sources.iter().map(|&s| stat.reachable_count(s) as f64).collect();
        for &f in &cfg.fractions {
            let t_s = start_time_for_fraction(&snapshots, f)?;
            let mut tree_edges = [Vec::new(), Vec::new(), Vec::new()];
            let mut times = [Vec::new(), Vec::new(), Vec::new()];
            let mut e_trv = Vec::new();
            let mut v_r = Vec::new();
            let mut paths = Vec::new();
            for &s in &sources {
                let mut per_kind = Vec::with_capacity(3);
                for (i, kind) in TraversalKind::ALL.into_iter().enumerate() {
                    let (tree, d) = timed(cfg.repeat, || traverse(g, s, t_s, kind))?;
                    tree_edges[i].push(tree.tree_edge_count() as f64);
                    times[i].push(ms(d));
                    per_kind.push((tree.log().len(), tree.reachable_count()));
                }
                if per_kind.iter().any(|&p| p != per_kind[0]) {
                    return Err(Error::Contract(format!(
                        "traversals from {} at {t_s} disagree on (|E_trv|, |V_R|): {per_kind:?}",
                        g.label(s)
                    )));
                }
                e_trv.push(per_kind[0].0 as f64);
                v_r.push(per_kind[0].1 as f64);
                if let Some(b) = &baseline {
                    paths.push(compare_paths(g, b, s, t_s, cfg.repeat)?);
                }
            }
            report.rows.push(BenchRow {
                source_set: set,
                ts_frac: f,
                t_s,
                sources: sources.len(),
                t_dfs_v1: mean(tree_edges[0].iter().copied()),
                t_dfs_v2: mean(tree_edges[1].iter().copied()),
                t_bfs: mean(tree_edges[2].iter().copied()),
                e_trv: mean(e_trv.into_iter()),
                v_r: mean(v_r.into_iter()),
                v_r_static: mean(static_reach.iter().copied()),
                timing: cfg.timing.then(|| Timing {
                    ms_dfs_v1: mean(times[0].iter().copied()),
                    ms_dfs_v2: mean(times[1].iter().copied()),
                    ms_bfs: mean(times[2].iter().copied()),
                }),
                baseline: (cfg.baseline && cfg.timing).then(|| PathTiming {
                    ms_foremost: mean(paths.iter().map(|p| ms(p.foremost))),
                    ms_foremost_dfs_v1: mean(paths.iter().map(|p| ms(p.foremost_dfs_v1))),
                    ms_foremost_baseline: mean(paths.iter().map(|p| ms(p.foremost_baseline))),
                    ms_fastest: mean(paths.iter().map(|p| ms(p.fastest))),
                    ms_fastest_baseline: mean(paths.iter().map(|p| ms(p.fastest_baseline))),
                }),
            });
        }
    }
    Ok(report)
}

/// Wall-clock of single-source path queries for one source.
#[derive(Clone, Copy, Debug)]
pub struct PathComparison {
    /// BFS engine.
    pub foremost: Duration,
    pub foremost_dfs_v1: Duration,
    pub foremost_baseline: Duration,
    pub fastest: Duration,
    pub fastest_baseline: Duration,
}

/// Times foremost and fastest (window `[t_s, inf)`) for our engines and the
/// baseline, and checks that both produce the same optima.
pub fn compare_paths(g: &Graph, b: &Baseline<Timestamp>, s: VertexId, t_s: Timestamp, repeat: usize) -> Result<PathComparison> {
    let (ours, foremost) = timed(repeat, || Ok(foremost_paths(g, s, t_s, ForemostEngine::Bfs)?.arrivals()))?;
    let (v1, foremost_dfs_v1) = timed(repeat, || Ok(foremost_paths(g, s, t_s, ForemostEngine::DfsV1)?.arrivals()))?;
    let (theirs, foremost_baseline) = timed(repeat, || b.foremost(s, t_s))?;
    if ours != theirs || v1 != theirs {
        return Err(Error::Contract(format!("foremost answers from {} differ from the baseline", g.label(s))));
    }
    let (ours, fastest) = timed(repeat, || {
        let tree = traverse(g, s, t_s, TraversalKind::DfsV2)?;
        let index = build_occurrence_index(&tree)?;
        Ok(fastest_paths(&index, &tree, t_s, Timestamp::MAX)?.durations())
    })?;
    let (theirs, fastest_baseline) = timed(repeat, || b.fastest(s, t_s, Timestamp::MAX))?;
    if ours != theirs {
        return Err(Error::Contract(format!("fastest answers from {} differ from the baseline", g.label(s))));
    }
    Ok(PathComparison {
        foremost,
        foremost_dfs_v1,
        foremost_baseline,
        fastest,
        fastest_baseline,
    })
}

pub fn write_report_tsv<W: Write>(report: &ExperimentReport, mut out: W) -> std::io::Result<()> {
    writeln!(out, "# {BENCH_SCHEMA} n={} m={} snapshots={}", report.n, report.m, report.snapshots)?;
    for (set, list) in &report.source_lists {
        writeln!(out, "# sources {}: {}", set.name(), list.join(" "))?;
    }
    let mut header = String::from("source_set\tts_frac\tt_s\tsources\tT_dfs_v1\tT_dfs_v2\tT_bfs\tE_trv\tV_R\tV_R_static");
    let timing = report.rows.first().is_some_and(|r| r.timing.is_some());
    let baseline = report.rows.first().is_some_and(|r| r.baseline.is_some());
    if timing {
        header.push_str("\tms_dfs_v1\tms_dfs_v2\tms_bfs");
    }
    if baseline {
        header.push_str("\tms_foremost\tms_foremost_dfs_v1\tms_foremost_baseline\tms_fastest\tms_fastest_baseline");
    }
    writeln!(out, "{header}")?;
    for r in &report.rows {
        write!(
            out,
            "{}\t{}\t{}\t{}\t{:.2}\t{:.2}\t{:.2}\t{:.2}\t{:.2}\t{:.2}",
            r.source_set.name(),
            r.ts_frac,
            r.t_s,
            r.sources,
            r.t_dfs_v1,
            r.t_dfs_v2,
            r.t_bfs,
            r.e_trv,
            r.v_r,
            r.v_r_static
        )?;
        if let Some(t) = r.timing {
            write!(out, "\t{:.3}\t{:.3}\t{:.3}", t.ms_dfs_v1, t.ms_dfs_v2, t.ms_bfs)?;
        }
        if let Some(p) = r.baseline {
            write!(
                out,
                "\t{:.3}\t{:.3}\t{:.3}\t{:.3}\t{:.3}",
                p.ms_foremost, p.ms_foremost_dfs_v1, p.ms_foremost_baseline, p.ms_fastest, p.ms_fastest_baseline
            )?;
        }
        writeln!(out)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use tempotrav::fixtures;

    #[test]
    fn fraction_indexing() {
        let ss = [3, 5, 8, 13];
        assert_eq!(start_time_for_fraction(&ss, 0.0).unwrap(), 3);
        assert_eq!(start_time_for_fraction(&ss, 0.25).unwrap(), 3);
        assert_eq!(start_time_for_fraction(&ss, 0.5).unwrap(), 5);
        assert_eq!(start_time_for_fraction(&ss, 0.6).unwrap(), 8);
        assert_eq!(start_time_for_fraction(&ss, 1.0).unwrap(), 13);
        assert_eq!(start_time_for_fraction(&[], 0.5).unwrap(), 0);
        assert!(start_time_for_fraction(&ss, 1.5).is_err());
    }

    #[test]
    fn source_sets() {
        let g = fixtures::g1();
        let top = select_sources(&g, SourceSet::TopDeg, 2, 0);
        assert_eq!(top.iter().map(|&v| g.label(v)).collect::<Vec<_>>(), ["a", "b"]);
        let r1 = select_sources(&g, SourceSet::Random, 3, 9);
        assert_eq!(r1, select_sources(&g, SourceSet::Random, 3, 9));
        assert_eq!(r1.len(), 3);
        assert_eq!(select_sources(&g, SourceSet::Random, 50, 9).len(), 6);
        assert_eq!(parse_source_set("topdeg:5"), Ok((SourceSet::TopDeg, 5)));
        assert!(parse_source_set("random:0").is_err());
        assert!(parse_source_set("best:3").is_err());
    }

    #[test]
    fn report_on_g1() {
        let g = fixtures::g1();
        let cfg = BenchConfig {
            source_sets: vec![(SourceSet::TopDeg, 6)],
            fractions: vec![0.0, 0.5],
            seed: 0,
            repeat: 1,
            timing: false,
            baseline: true,
        };
        let r = run_bench(&g, &cfg).unwrap();
        assert_eq!(r.rows.len(), 2);
        assert!(r.rows[0].e_trv >= r.rows[1].e_trv);
        assert!(r.rows.iter().all(|row| row.v_r_static >= row.v_r));
        let mut buf = Vec::new();
        write_report_tsv(&r, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("# tempotrav.bench/1"));
        assert!(text.contains("\tE_trv\t"));
    }
}
