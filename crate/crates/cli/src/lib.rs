//! Command-line front end for tempotrav.

pub mod bench;

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tempotrav::export::{paths_document, tree_document, write_paths_tsv, write_tree_tsv, PathsInput};
use tempotrav::generate::generate_random;
use tempotrav::io::{load_edge_list, write_edge_list, LoadOptions};
use tempotrav::paths::{
    build_occurrence_index, fastest_paths, foremost_paths, shortest_paths, ForemostEngine, PathAnswer, PathValue,
};
use tempotrav::verify::{self, Mutation, VerifyConfig};
use tempotrav::{traverse, Error, Graph, Timestamp, TraversalKind, VertexId};

use bench::{parse_source_set, run_bench, start_time_for_fraction, write_report_tsv, BenchConfig, SourceSet};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_DOMAIN: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "tempotrav", version, about = "Traversals and temporal paths on temporal graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Size and degree statistics
    Stats(StatsArgs),
    /// Run a DFS or BFS traversal and print its tree and edge labels
    Traverse(TraverseArgs),
    /// Foremost, fastest or shortest paths from one source
    Paths(PathsArgs),
    /// Experiment table over source sets and start-time fractions
    Bench(BenchArgs),
    /// Randomized property suite against the reference oracles
    Verify(VerifyArgs),
    /// Write a seeded random temporal graph
    Generate(GenerateArgs),
    /// Static projection, optionally with reachability from a source
    Project(ProjectArgs),
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Edge-list file
    #[arg(long = "input", value_name = "FILE")]
    pub input_flag: Option<PathBuf>,
    #[arg(value_name = "FILE", conflicts_with = "input_flag")]
    pub input_pos: Option<PathBuf>,
    #[arg(long, conflicts_with = "undirected")]
    pub directed: bool,
    /// Each line adds both directions
    #[arg(long)]
    pub undirected: bool,
    /// Koblenz layout: SRC DST [WEIGHT] T, `%` comments
    #[arg(long)]
    pub koblenz: bool,
    /// Drop repeated (src, dst, t) lines instead of failing
    #[arg(long)]
    pub dedupe: bool,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    #[arg(long, conflicts_with = "tsv")]
    pub json: bool,
    #[arg(long)]
    pub tsv: bool,
    /// Write to FILE instead of standard output
    #[arg(long, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct StartArgs {
    /// Start time
    #[arg(long = "ts", value_name = "T", allow_hyphen_values = true)]
    pub ts: Option<Timestamp>,
    /// Start time as a fraction of the distinct-timestamp list
    #[arg(long = "ts-frac", value_name = "F", conflicts_with = "ts")]
    pub ts_frac: Option<f64>,
}

#[derive(Args, Debug)]
pub struct StatsArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum KindArg {
    DfsV1,
    DfsV2,
    Bfs,
}

impl From<KindArg> for TraversalKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::DfsV1 => TraversalKind::DfsV1,
            KindArg::DfsV2 => TraversalKind::DfsV2,
            KindArg::Bfs => TraversalKind::Bfs,
        }
    }
}

#[derive(Args, Debug)]
pub struct TraverseArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(flatten)]
    pub start: StartArgs,
    #[arg(long, value_enum, default_value = "dfs-v1")]
    pub kind: KindArg,
    /// Source vertex label
    #[arg(long)]
    pub source: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ObjectiveArg {
    Foremost,
    Fastest,
    Shortest,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum EngineArg {
    DfsV1,
    Bfs,
}

#[derive(Args, Debug)]
pub struct PathsArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(flatten)]
    pub start: StartArgs,
    #[arg(long)]
    pub source: String,
    #[arg(long, value_enum, default_value = "foremost")]
    pub objective: ObjectiveArg,
    /// Traversal behind foremost answers
    #[arg(long, value_enum, default_value = "dfs-v1")]
    pub engine: EngineArg,
    /// Earliest departure for fastest paths (default: start time)
    #[arg(long = "t-x", allow_hyphen_values = true)]
    pub t_x: Option<Timestamp>,
    /// Latest arrival for fastest paths (default: unbounded)
    #[arg(long = "t-y", allow_hyphen_values = true)]
    pub t_y: Option<Timestamp>,
    /// Only report these vertices (comma separated)
    #[arg(long, value_delimiter = ',')]
    pub targets: Vec<String>,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    /// Source sets, e.g. random:100,topdeg:100
    #[arg(long, value_delimiter = ',', default_value = "random:100,topdeg:100")]
    pub sources: Vec<String>,
    /// Start-time fractions of the distinct-timestamp list
    #[arg(long = "ts-fracs", value_delimiter = ',', default_value = "0,0.25,0.5,0.75")]
    pub ts_fracs: Vec<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Runs per query; the fastest is reported
    #[arg(long, default_value_t = 1)]
    pub repeat: usize,
    /// Add wall-clock columns (output is then no longer reproducible byte for byte)
    #[arg(long)]
    pub timing: bool,
    /// Check path answers against the baseline solver and time both
    #[arg(long)]
    pub baseline: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MutationArg {
    DfsV1Latest,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 200)]
    pub instances: usize,
    #[arg(long = "max-n", default_value_t = 12)]
    pub max_n: usize,
    #[arg(long = "max-m", default_value_t = 40)]
    pub max_m: usize,
    #[arg(long = "t-max", default_value_t = 30)]
    pub t_max: Timestamp,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Run against a deliberately broken engine
    #[arg(long, value_enum)]
    pub mutation: Option<MutationArg>,
    /// Skip the baseline comparison
    #[arg(long)]
    pub no_baseline: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long = "t-max")]
    pub t_max: Timestamp,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ProjectArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(flatten)]
    pub start: StartArgs,
    /// Compare static and temporal reachability from this vertex
    #[arg(long)]
    pub source: Option<String>,
}

/// Error with its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::Range { .. } | Error::Duplicate { .. } | Error::Io(_) => EXIT_PARSE,
            _ => EXIT_DOMAIN,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: EXIT_PARSE, message: e.to_string() }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure { code: EXIT_DOMAIN, message: e.to_string() }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Parses arguments, runs the command and returns the exit status.
pub fn main_with<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

pub fn run(cli: Cli) -> CliResult<i32> {
    match cli.command {
        Command::Stats(a) => stats(a),
        Command::Traverse(a) => traverse_cmd(a),
        Command::Paths(a) => paths_cmd(a),
        Command::Bench(a) => bench_cmd(a),
        Command::Verify(a) => verify_cmd(a),
        Command::Generate(a) => generate_cmd(a),
        Command::Project(a) => project_cmd(a),
    }
}

fn load(input: &InputArgs) -> CliResult<Graph> {
    let path = input
        .input_flag
        .as_ref()
        .or(input.input_pos.as_ref())
        .ok_or_else(|| Failure::usage("no input file given"))?;
    let file = File::open(path).map_err(|e| Failure { code: EXIT_PARSE, message: format!("{}: {e}", path.display()) })?;
    let options = LoadOptions { directed: !input.undirected, dedupe: input.dedupe, koblenz: input.koblenz };
    let (g, report) = load_edge_list(BufReader::new(file), options)?;
    if report.duplicates_dropped > 0 || report.self_loops_dropped > 0 {
        eprintln!(
            "note: dropped {} duplicate and {} self-loop edges",
            report.duplicates_dropped, report.self_loops_dropped
        );
    }
    Ok(g)
}

fn sink(output: &Option<PathBuf>) -> CliResult<Box<dyn Write>> {
    Ok(match output {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| Failure {
            code: EXIT_USAGE,
            message: format!("{}: {e}", p.display()),
        })?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_json<T: serde::Serialize>(value: &T, out: &mut dyn Write) -> CliResult<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn start_time(g: &Graph, start: &StartArgs) -> CliResult<Timestamp> {
    match (start.ts, start.ts_frac) {
        (Some(t), _) => Ok(t),
        (None, f) => Ok(start_time_for_fraction(&g.snapshots(), f.unwrap_or(0.0))?),
    }
}

fn stats(a: StatsArgs) -> CliResult<i32> {
    let g = load(&a.input)?;
    let s = g.stats();
    let mut out = sink(&a.output.output)?;
    if a.output.tsv {
        writeln!(out, "# tempotrav.stats/1")?;
        writeln!(out, "n\tm\tstatic_edges\td_avg_temporal\td_max_temporal\td_avg_static\td_max_static\td_avg_pair\td_max_pair\tsnapshots")?;
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            s.n, s.m, s.static_edges, s.d_avg_temporal, s.d_max_temporal, s.d_avg_static, s.d_max_static, s.d_avg_pair,
            s.d_max_pair, s.snapshots
        )?;
    } else {
        writeln!(out, "{}", serde_json::to_string(&s)?)?;
    }
    out.flush()?;
    Ok(EXIT_OK)
}

fn traverse_cmd(a: TraverseArgs) -> CliResult<i32> {
    let g = load(&a.input)?;
    let s = g.resolve(&a.source)?;
    let t_s = start_time(&g, &a.start)?;
    let tree = traverse(&g, s, t_s, a.kind.into())?;
    let mut out = sink(&a.output.output)?;
    if a.output.tsv {
        write_tree_tsv(&g, &tree, &mut out)?;
    } else {
        write_json(&tree_document(&g, &tree), &mut out)?;
    }
    out.flush()?;
    Ok(EXIT_OK)
}

fn paths_cmd(a: PathsArgs) -> CliResult<i32> {
    let g = load(&a.input)?;
    let s = g.resolve(&a.source)?;
    let t_s = start_time(&g, &a.start)?;
    let targets: Option<Vec<VertexId>> = if a.targets.is_empty() {
        None
    } else {
        Some(a.targets.iter().map(|t| g.resolve(t)).collect::<Result<_, _>>()?)
    };
    let keep = |v: usize| targets.as_ref().is_none_or(|ts| ts.contains(&VertexId(v as u32)));

    let (objective, window, answers): (&'static str, Option<(Timestamp, Timestamp)>, Vec<_>) = match a.objective {
        ObjectiveArg::Foremost => {
            let engine = match a.engine {
                EngineArg::DfsV1 => ForemostEngine::DfsV1,
                EngineArg::Bfs => ForemostEngine::Bfs,
            };
            let fp = foremost_paths(&g, s, t_s, engine)?;
            let answers = collect(&g, |v| fp.arrival(v).map(PathValue::Arrival).zip(fp.path(v)));
            ("foremost", None, answers)
        }
        ObjectiveArg::Fastest => {
            let t_x = a.t_x.unwrap_or(t_s);
            let t_y = a.t_y.unwrap_or(Timestamp::MAX);
            if t_x < t_s {
                return Err(Failure::usage(format!("--t-x {t_x} precedes the start time {t_s}")));
            }
            let tree = traverse(&g, s, t_s, TraversalKind::DfsV2)?;
            let index = build_occurrence_index(&tree)?;
            let fp = fastest_paths(&index, &tree, t_x, t_y)?;
            let answers = collect(&g, |v| fp.duration(v).map(PathValue::Duration).zip(fp.path(v)));
            ("fastest", Some((t_x, t_y)), answers)
        }
        ObjectiveArg::Shortest => {
            let sp = shortest_paths(&g, s, t_s)?;
            let answers = collect(&g, |v| sp.hops(v).map(PathValue::Hops).zip(sp.path(v)));
            ("shortest", None, answers)
        }
    };
    let answers: Vec<_> = answers.into_iter().enumerate().map(|(v, a)| a.filter(|_| keep(v))).collect();
    let doc = paths_document(&g, PathsInput { objective, source: s, t_s, window, answers: &answers });
    let mut out = sink(&a.output.output)?;
    if a.output.tsv {
        write_paths_tsv(&doc, &mut out)?;
    } else {
        write_json(&doc, &mut out)?;
    }
    out.flush()?;
    Ok(EXIT_OK)
}

fn collect(
    g: &Graph,
    f: impl Fn(VertexId) -> Option<(PathValue<Timestamp>, PathAnswer<Timestamp>)>,
) -> Vec<Option<(PathValue<Timestamp>, PathAnswer<Timestamp>)>> {
    g.vertices().map(f).collect()
}

fn bench_cmd(a: BenchArgs) -> CliResult<i32> {
    let g = load(&a.input)?;
    let source_sets: Vec<(SourceSet, usize)> =
        a.sources.iter().map(|s| parse_source_set(s)).collect::<Result<_, _>>().map_err(Failure::usage)?;
    let cfg = BenchConfig {
        source_sets,
        fractions: a.ts_fracs.clone(),
        seed: a.seed,
        repeat: a.repeat,
        timing: a.timing,
        baseline: a.baseline,
    };
    let report = run_bench(&g, &cfg)?;
    let mut out = sink(&a.output.output)?;
    if a.output.json {
        write_json(&report, &mut out)?;
    } else {
        write_report_tsv(&report, &mut out)?;
    }
    out.flush()?;
    Ok(EXIT_OK)
}

fn verify_cmd(a: VerifyArgs) -> CliResult<i32> {
    if a.max_n < 2 {
        return Err(Failure::usage("--max-n must be at least 2"));
    }
    let cfg = VerifyConfig {
        instances: a.instances,
        max_n: a.max_n,
        max_m: a.max_m,
        t_max: a.t_max,
        seed: a.seed,
        mutation: a.mutation.map(|MutationArg::DfsV1Latest| Mutation::DfsV1Latest),
        baseline: !a.no_baseline,
    };
    let report = verify::run(&cfg)?;
    let mut out = sink(&a.output.output)?;
    if a.output.json {
        write_json(&report, &mut out)?;
    } else {
        writeln!(
            out,
            "{} instances, {} (source, t_s) queries, {} failing",
            report.instances,
            report.queries,
            report.failures.len()
        )?;
        if let Some(f) = report.failures.first() {
            writeln!(out, "first failure: {} ({})", f.property, f.detail)?;
            writeln!(
                out,
                "instance {} (n={}, m={}, t_max={}, seed={})",
                f.instance.index, f.instance.n, f.instance.m, f.instance.t_max, f.instance.seed
            )?;
            writeln!(out, "minimized counterexample, {} vertices:", f.n)?;
            for e in &f.edges {
                writeln!(out, "{} {} {}", e.src, e.dst, e.t)?;
            }
        }
    }
    out.flush()?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_PROPERTY })
}

fn generate_cmd(a: GenerateArgs) -> CliResult<i32> {
    let g: Graph = generate_random(a.n, a.m, a.t_max, a.seed)?;
    let mut out = sink(&a.output)?;
    write_edge_list(&g, &mut out)?;
    out.flush()?;
    Ok(EXIT_OK)
}

#[derive(serde::Serialize)]
struct Projection {
    schema: &'static str,
    n: usize,
    static_edges: usize,
    edges: Vec<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reachability: Option<ReachComparison>,
}

#[derive(serde::Serialize)]
struct ReachComparison {
    source: String,
    t_s: Timestamp,
    temporal: usize,
    r#static: usize,
}

fn project_cmd(a: ProjectArgs) -> CliResult<i32> {
    let g = load(&a.input)?;
    let stat = g.project_static();
    let reachability = match &a.source {
        Some(label) => {
            let s = g.resolve(label)?;
            let t_s = start_time(&g, &a.start)?;
            let temporal = traverse(&g, s, t_s, TraversalKind::Bfs)?.reachable_count();
            Some(ReachComparison { source: label.clone(), t_s, temporal, r#static: stat.reachable_count(s) })
        }
        None => None,
    };
    let edges: Vec<(String, String)> = g
        .vertices()
        .flat_map(|u| stat.neighbors(u).map(move |v| (u, v)))
        .map(|(u, v)| (g.label(u), g.label(v)))
        .collect();
    let mut out = sink(&a.output.output)?;
    if a.output.tsv {
        writeln!(out, "# tempotrav.projection/1 n={} static_edges={}", g.vertex_count(), edges.len())?;
        if let Some(r) = &reachability {
            writeln!(out, "# reach source={} t_s={} temporal={} static={}", r.source, r.t_s, r.temporal, r.r#static)?;
        }
        writeln!(out, "src\tdst")?;
        for (u, v) in &edges {
            writeln!(out, "{u}\t{v}")?;
        }
    } else {
        let doc = Projection {
            schema: "tempotrav.projection/1",
            n: g.vertex_count(),
            static_edges: edges.len(),
            edges,
            reachability,
        };
        write_json(&doc, &mut out)?;
    }
    out.flush()?;
    Ok(EXIT_OK)
}
