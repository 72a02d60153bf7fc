//! Command-line front end: `enumerate`, `compare`, `stats` and `generate`.
//!
//! Exit codes: 0 success, 1 input or argument error, 2 truncated search,
//! 3 I/O failure, 4 stream too large for the oracle, 5 engine/oracle mismatch.

use std::collections::{BTreeSet, HashMap};
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::analytics::{self, SummaryRow};
use crate::clique::DeltaClique;
use crate::engine::{enumerate_maximal, EngineConfig, Order};
use crate::error::{EngineError, OracleError};
use crate::generate;
use crate::oracle;
use crate::stream::{parse_link_stream, LinkStream, NodeId, ParseOptions};
use crate::time::{Duration, TimeInterval, Timestamp};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_TRUNCATED: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_ORACLE_GUARD: i32 = 4;
pub const EXIT_MISMATCH: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "dclique", version, about = "Maximal Δ-cliques of link streams")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate all maximal Δ-cliques of a stream.
    Enumerate(RunArgs),
    /// Check the engine against the brute-force oracle on a small stream.
    Compare(RunArgs),
    /// Summary statistics for one or more Δ values.
    Stats(StatsArgs),
    /// Write a synthetic stream.
    Generate(GenerateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Bfs,
    Dfs,
}

impl From<OrderArg> for Order {
    fn from(o: OrderArg) -> Order {
        match o {
            OrderArg::Bfs => Order::Bfs,
            OrderArg::Dfs => Order::Dfs,
        }
    }
}

/// Options shared by commands that read a stream and run the engine.
#[derive(Debug, Clone, Args)]
pub struct EngineArgs {
    /// Input stream: `time u v [class_u class_v]` per line.
    pub input: PathBuf,
    /// Exploration order.
    #[arg(long, value_enum, default_value = "dfs")]
    pub order: OrderArg,
    /// Explicit span start, in scaled ticks.
    #[arg(long, requires = "tmax", allow_negative_numbers = true)]
    pub tmin: Option<i64>,
    /// Explicit span end, in scaled ticks.
    #[arg(long, requires = "tmin", allow_negative_numbers = true)]
    pub tmax: Option<i64>,
    /// Multiply input times by this factor; results must be integral.
    #[arg(long, default_value_t = 1)]
    pub time_scale: i64,
    /// Scan every link of a clique instead of binary-searching the Δ-window for f and l.
    #[arg(long)]
    pub no_interval_narrowing: bool,
    /// Test every node for extension instead of tracking candidates.
    #[arg(long)]
    pub no_candidate_sets: bool,
    /// Fail once more than this many states have been generated.
    #[arg(long)]
    pub max_states: Option<usize>,
    #[arg(long, hide = true)]
    pub fault_skip_right_extension: bool,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[command(flatten)]
    pub engine: EngineArgs,
    /// Δ in ticks.
    #[arg(long)]
    pub delta: i64,
    /// Clique output (stdout when absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Summary row as JSON.
    #[arg(long)]
    pub stats: Option<PathBuf>,
    /// CCDF of clique sizes |X| as TSV.
    #[arg(long)]
    pub ccdf_sizes: Option<PathBuf>,
    /// CCDF of clique durations e-b as TSV.
    #[arg(long)]
    pub ccdf_durations: Option<PathBuf>,
    /// Discovery curve (iteration, maximal count, largest |X|·(e-b)) as TSV.
    #[arg(long)]
    pub discovery_log: Option<PathBuf>,
    /// Accepted for symmetry with `generate`; the engine is deterministic.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Args)]
pub struct StatsArgs {
    #[command(flatten)]
    pub engine: EngineArgs,
    /// Δ in ticks; repeat for several runs.
    #[arg(long = "delta", required = true)]
    pub deltas: Vec<i64>,
    /// Runs executed concurrently.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// JSON report (stdout when absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct GenerateArgs {
    #[command(subcommand)]
    pub kind: GenerateKind,
    /// Output path (stdout when absent).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum GenerateKind {
    /// Disjoint pairs, each linked at 0, s, 2s, ...
    Chain {
        #[arg(long, default_value_t = 1)]
        pairs: usize,
        #[arg(long)]
        links: usize,
        #[arg(long, default_value_t = 1)]
        spacing: i64,
    },
    /// All pairs of n nodes linked at time 0.
    Burst {
        #[arg(long)]
        nodes: usize,
    },
    /// Uniform random distinct links.
    Random {
        #[arg(long)]
        nodes: usize,
        #[arg(long)]
        links: usize,
        #[arg(long, default_value_t = 20)]
        max_time: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = err.print();
            return code;
        }
    };
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    match &cli.command {
        Command::Enumerate(args) => cmd_enumerate(args, &mut out, &mut err),
        Command::Compare(args) => cmd_compare(args, &mut out, &mut err),
        Command::Stats(args) => cmd_stats(args, &mut out, &mut err),
        Command::Generate(args) => cmd_generate(args, &mut out, &mut err),
    }
}

enum Failure {
    Input(String),
    Io(String),
    Truncated(String),
}

impl Failure {
    fn report(self, err: &mut dyn Write) -> i32 {
        let (code, msg) = match self {
            Failure::Input(m) => (EXIT_INPUT, m),
            Failure::Io(m) => (EXIT_IO, m),
            Failure::Truncated(m) => (EXIT_TRUNCATED, m),
        };
        let _ = writeln!(err, "error: {msg}");
        code
    }
}

fn io_failure(path: &Path, e: io::Error) -> Failure {
    Failure::Io(format!("{}: {e}", path.display()))
}

fn parse_delta(delta: i64) -> Result<Duration, Failure> {
    Duration::new(delta).ok_or_else(|| Failure::Input(format!("delta must be non-negative, got {delta}")))
}

impl EngineArgs {
    fn config(&self) -> EngineConfig {
        EngineConfig {
            order: self.order.into(),
            use_interval_narrowing: !self.no_interval_narrowing,
            use_candidate_sets: !self.no_candidate_sets,
            max_states: self.max_states,
            log_discovery: false,
            check_soundness: false,
            skip_right_extension: self.fault_skip_right_extension,
        }
    }

    fn load(&self) -> Result<LinkStream, Failure> {
        let text = std::fs::read_to_string(&self.input).map_err(|e| io_failure(&self.input, e))?;
        let explicit_span = match (self.tmin, self.tmax) {
            (Some(b), Some(e)) => Some(
                TimeInterval::new(Timestamp(b), Timestamp(e))
                    .ok_or_else(|| Failure::Input(format!("--tmin {b} is after --tmax {e}")))?,
            ),
            _ => None,
        };
        let options = ParseOptions {
            time_scale: self.time_scale,
            explicit_span,
        };
        parse_link_stream(&text, &options).map_err(|e| Failure::Input(format!("{}: {e}", self.input.display())))
    }
}

fn create(path: &Path) -> Result<BufWriter<File>, Failure> {
    File::create(path).map(BufWriter::new).map_err(|e| io_failure(path, e))
}

fn write_to(path: &Path, f: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> Result<(), Failure> {
    let mut w = create(path)?;
    f(&mut w).and_then(|_| w.flush()).map_err(|e| io_failure(path, e))
}

/// Clique lines `b<TAB>e<TAB>labels`, labels sorted, lines sorted by `(b, e, labels)`.
pub fn format_cliques(stream: &LinkStream, cliques: &[DeltaClique]) -> String {
    let mut rows: Vec<(Timestamp, Timestamp, Vec<&str>)> = cliques
        .iter()
        .map(|c| {
            let mut labels: Vec<&str> = c.nodes().iter().map(|&v| stream.label(v)).collect();
            labels.sort_unstable();
            (c.start(), c.end(), labels)
        })
        .collect();
    rows.sort();
    let mut text = String::new();
    for (b, e, labels) in rows {
        text.push_str(&format!("{b}\t{e}\t{}\n", labels.join(" ")));
    }
    text
}

fn check_distinct_paths(paths: &[Option<&PathBuf>]) -> Result<(), Failure> {
    let mut seen = BTreeSet::new();
    for p in paths.iter().flatten() {
        if !seen.insert(p.as_path()) {
            return Err(Failure::Input(format!("output path {} given twice", p.display())));
        }
    }
    Ok(())
}

pub fn cmd_enumerate(args: &RunArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match enumerate_inner(args, out, err) {
        Ok(()) => EXIT_OK,
        Err(f) => f.report(err),
    }
}

fn enumerate_inner(args: &RunArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    check_distinct_paths(&[
        args.out.as_ref(),
        args.stats.as_ref(),
        args.ccdf_sizes.as_ref(),
        args.ccdf_durations.as_ref(),
        args.discovery_log.as_ref(),
    ])?;
    let delta = parse_delta(args.delta)?;
    let stream = args.engine.load()?;
    if stream.collapsed_duplicates() > 0 {
        let _ = writeln!(err, "note: collapsed {} duplicate links", stream.collapsed_duplicates());
    }
    let mut config = args.engine.config();
    config.log_discovery = args.discovery_log.is_some();
    let result = enumerate_maximal(&stream, delta, &config).map_err(truncated)?;
    if result.telemetry.clamped_extensions > 0 {
        let _ = writeln!(
            err,
            "note: {} interval extensions were clamped to the explicit span",
            result.telemetry.clamped_extensions
        );
    }

    let text = format_cliques(&stream, &result.cliques);
    match &args.out {
        Some(path) => write_to(path, |w| w.write_all(text.as_bytes()))?,
        None => out.write_all(text.as_bytes()).map_err(|e| Failure::Io(e.to_string()))?,
    }
    if let Some(path) = &args.stats {
        let row = analytics::summarize(delta, &result.cliques, &result.telemetry);
        write_to(path, |w| {
            serde_json::to_writer_pretty(&mut *w, &row)?;
            writeln!(w)
        })?;
    }
    if let Some(path) = &args.ccdf_sizes {
        let series = analytics::ccdf(&analytics::sizes(&result.cliques)).expect("non-empty result");
        write_to(path, |w| series.write_tsv(w))?;
    }
    if let Some(path) = &args.ccdf_durations {
        let series = analytics::ccdf(&analytics::durations(&result.cliques)).expect("non-empty result");
        write_to(path, |w| series.write_tsv(w))?;
    }
    if let Some(path) = &args.discovery_log {
        let points = analytics::discovery_curve(&result.telemetry).expect("logging enabled");
        write_to(path, |w| analytics::write_discovery_tsv(points, w))?;
    }
    Ok(())
}

fn truncated(e: EngineError) -> Failure {
    Failure::Truncated(e.to_string())
}

pub fn cmd_compare(args: &RunArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut inner = || -> Result<i32, Failure> {
        let delta = parse_delta(args.delta)?;
        let stream = args.engine.load()?;
        let expected = match oracle::brute_force_maximal(&stream, delta) {
            Ok(set) => set,
            Err(e @ OracleError::TooLarge { .. }) => {
                let _ = writeln!(err, "error: {e}");
                return Ok(EXIT_ORACLE_GUARD);
            }
        };
        let actual = enumerate_maximal(&stream, delta, &args.engine.config())
            .map_err(truncated)?
            .cliques;
        let actual_set: BTreeSet<&DeltaClique> = actual.iter().collect();
        let expected_set: BTreeSet<&DeltaClique> = expected.iter().collect();
        let engine_only: Vec<_> = actual_set.difference(&expected_set).collect();
        let oracle_only: Vec<_> = expected_set.difference(&actual_set).collect();
        let io = |e: io::Error| Failure::Io(e.to_string());
        if engine_only.is_empty() && oracle_only.is_empty() {
            writeln!(out, "ok: {} maximal cliques agree (delta {})", actual.len(), delta).map_err(io)?;
            return Ok(EXIT_OK);
        }
        writeln!(
            out,
            "mismatch: {} only from engine, {} only from oracle",
            engine_only.len(),
            oracle_only.len()
        )
        .map_err(io)?;
        for c in engine_only {
            writeln!(out, "engine-only\t{}", c.display(&stream)).map_err(io)?;
        }
        for c in oracle_only {
            writeln!(out, "oracle-only\t{}", c.display(&stream)).map_err(io)?;
        }
        Ok(EXIT_MISMATCH)
    };
    match inner() {
        Ok(code) => code,
        Err(f) => f.report(err),
    }
}

#[derive(Debug, Serialize)]
struct StreamReport {
    nodes: usize,
    links: usize,
    pairs: usize,
    collapsed_duplicates: usize,
    first_time: i64,
    last_time: i64,
}

#[derive(Debug, Serialize)]
struct GraphReport {
    edges: usize,
    maximal_cliques: usize,
    largest_clique: usize,
    class_homogeneous_fraction: Option<f64>,
}

#[derive(Debug, Serialize)]
struct StatsReport {
    stream: StreamReport,
    induced_graph: GraphReport,
    runs: Vec<SummaryRow>,
}

fn class_map(stream: &LinkStream) -> HashMap<NodeId, String> {
    stream
        .nodes()
        .filter_map(|v| stream.class(v).map(|c| (v, c.to_owned())))
        .collect()
}

pub fn cmd_stats(args: &StatsArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut inner = || -> Result<(), Failure> {
        let deltas = args.deltas.iter().map(|&d| parse_delta(d)).collect::<Result<Vec<_>, _>>()?;
        if args.jobs == 0 {
            return Err(Failure::Input("--jobs must be at least 1".into()));
        }
        let stream = args.engine.load()?;
        let config = args.engine.config();

        let graph = stream.induced_graph();
        let static_cliques = oracle::static_maximal_cliques(&graph);
        let class_homogeneous_fraction = if stream.has_classes() {
            match analytics::class_homogeneity(static_cliques.iter().map(Vec::as_slice), &class_map(&stream)) {
                Ok(f) => Some(f),
                Err(e) => {
                    let _ = writeln!(err, "note: class homogeneity unavailable: {e}");
                    None
                }
            }
        } else {
            None
        };

        let next = AtomicUsize::new(0);
        let rows: Mutex<Vec<Option<Result<SummaryRow, String>>>> = Mutex::new(vec![None; deltas.len()]);
        std::thread::scope(|scope| {
            for _ in 0..args.jobs.min(deltas.len()) {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    let Some(&delta) = deltas.get(i) else { break };
                    let row = enumerate_maximal(&stream, delta, &config)
                        .map(|r| analytics::summarize(delta, &r.cliques, &r.telemetry))
                        .map_err(|e| e.to_string());
                    rows.lock().expect("no poisoned workers")[i] = Some(row);
                });
            }
        });
        let runs = rows
            .into_inner()
            .expect("no poisoned workers")
            .into_iter()
            .map(|r| r.expect("every delta processed").map_err(Failure::Truncated))
            .collect::<Result<Vec<_>, _>>()?;

        let report = StatsReport {
            stream: StreamReport {
                nodes: stream.node_count(),
                links: stream.link_count(),
                pairs: stream.pair_count(),
                collapsed_duplicates: stream.collapsed_duplicates(),
                first_time: stream.earliest().0,
                last_time: stream.latest().0,
            },
            induced_graph: GraphReport {
                edges: graph.edge_count(),
                maximal_cliques: static_cliques.len(),
                largest_clique: static_cliques.iter().map(Vec::len).max().unwrap_or(0),
                class_homogeneous_fraction,
            },
            runs,
        };
        let json = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
        match &args.out {
            Some(path) => write_to(path, |w| w.write_all(json.as_bytes())),
            None => out.write_all(json.as_bytes()).map_err(|e| Failure::Io(e.to_string())),
        }
    };
    match inner() {
        Ok(()) => EXIT_OK,
        Err(f) => f.report(err),
    }
}

pub fn cmd_generate(args: &GenerateArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let stream = match &args.kind {
        GenerateKind::Chain { pairs, links, spacing } => generate::chain(*pairs, *links, *spacing),
        GenerateKind::Burst { nodes } => generate::burst(*nodes),
        GenerateKind::Random {
            nodes,
            links,
            max_time,
            seed,
        } => generate::random(*nodes, *links, *max_time, *seed),
    };
    let stream = match stream {
        Ok(s) => s,
        Err(e) => return Failure::Input(e.to_string()).report(err),
    };
    let result = match &args.out {
        Some(path) => write_to(path, |w| generate::write_stream(&stream, w)),
        None => generate::write_stream(&stream, &mut *out).map_err(|e| Failure::Io(e.to_string())),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => f.report(err),
    }
}
