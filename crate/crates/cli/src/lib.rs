//! Command-line front end. [`run`] parses arguments, executes one command
//! and returns the process exit code:
//! 0 success, 2 invalid sequence or run, 3 parse error, 4 node budget
//! exhausted, 5 precondition violated.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use graph_burning::approx::{burn_3approx, ApproxError, TraceStep};
use graph_burning::burn::{simulate, verify, BurnOutcome};
use graph_burning::contact::{
    bootstrap_percolate, firefight_bruteforce, firefight_pk_free, verify_firefighter, ContactError,
    FIREFIGHT_BRUTEFORCE_CAP,
};
use graph_burning::exact::{
    burning_number_bruteforce, burning_number_exact, lower_bound, upper_bound_radius, ExactConfig, ExactError,
    BRUTEFORCE_CAP, DEFAULT_NODE_BUDGET,
};
use graph_burning::gadgets::{
    gen_dk_gadget, gen_ig_gadget, gen_pg_gadget, gen_spider, gen_spider_forest, solve_d3p_bruteforce, D3PInstance,
    GadgetCertificate, GadgetError, Triple, D3P_BRUTEFORCE_CAP,
};
use graph_burning::generators;
use graph_burning::graph::{disk_graph, interval_graph, permutation_graph, Graph, GraphError};
use graph_burning::io::{self, ParseError};
use graph_burning::poly::{
    burn_cograph, burn_cycle, burn_interval_approx, burn_path, burn_split, cycle_order, path_order, split_partition,
    PolyError, SplitOptions, SplitPartition,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;
pub const EXIT_PRECONDITION: i32 = 5;

/// Environment variable holding the default node budget of the exact search.
pub const NODE_BUDGET_ENV: &str = "GBURN_NODE_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "gburn", version, about = "Graph burning, firefighting and bootstrap percolation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute a burning sequence.
    Burn(BurnArgs),
    /// Check a burning sequence or a gadget certificate.
    Verify(VerifyArgs),
    /// Generate a graph family or gadget.
    Gen(GenArgs),
    /// Simulate or optimize firefighter placements.
    Firefight(FirefightArgs),
    /// Run r-neighbor bootstrap percolation.
    Percolate(PercolateArgs),
    /// Compare the exact solver and the approximation on random graphs.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    /// `n m` header then `u v` lines.
    Edges,
    /// One `start end` interval per line.
    Intervals,
    /// A permutation of 1..k.
    Permutation,
    /// One `x y radius` disk per line.
    Disks,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
    Dot,
}

#[derive(Debug, Args)]
struct GraphInput {
    /// Input file, `-` for stdin.
    graph: PathBuf,
    #[arg(long, value_enum, default_value_t = InputFormat::Edges)]
    input_format: InputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Exact,
    Bruteforce,
    Approx3,
    Path,
    Cycle,
    Split,
    Cograph,
    IntervalApprox,
}

#[derive(Debug, Args)]
struct SearchArgs {
    /// Node budget of the exact search.
    #[arg(long, env = NODE_BUDGET_ENV, default_value_t = DEFAULT_NODE_BUDGET)]
    node_budget: u64,
    /// Worker threads for the exact search.
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(Debug, Args)]
struct BurnArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long, value_enum, default_value_t = Engine::Exact)]
    engine: Engine,
    #[command(flatten)]
    search: SearchArgs,
    /// Order cap for the brute-force engine.
    #[arg(long, default_value_t = BRUTEFORCE_CAP)]
    cap: usize,
    /// First source for approx3.
    #[arg(long)]
    x1: Option<usize>,
    /// Clique part for the split engine; recognized from degrees when omitted.
    #[arg(long, value_delimiter = ',')]
    clique: Option<Vec<usize>>,
    /// Split engine without its source preferences.
    #[arg(long)]
    no_preferences: bool,
    /// Include per-step choices of approx3.
    #[arg(long)]
    trace: bool,
    /// Include wall-clock timings; output is then not reproducible.
    #[arg(long)]
    timings: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Sources, comma or space separated.
    #[arg(long, conflicts_with = "certificate", required_unless_present = "certificate")]
    sequence: Option<String>,
    /// Certificate JSON whose canonical sequence is checked.
    #[arg(long)]
    certificate: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenKind {
    Spider,
    SpiderForest,
    Path,
    Cycle,
    Random,
    Intervals,
    Permutation,
    Ig,
    Pg,
    Dk,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(value_enum)]
    kind: GenKind,
    /// Order for path, cycle, random, intervals and permutation.
    #[arg(long)]
    n: Option<usize>,
    /// Edge probability for random.
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    /// Force random graphs to be connected.
    #[arg(long)]
    connected: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Arms of a spider.
    #[arg(long)]
    s: Option<usize>,
    /// Arm length of a spider.
    #[arg(long)]
    r: Option<usize>,
    /// Head degrees of a spider forest.
    #[arg(long, value_delimiter = ',')]
    degrees: Option<Vec<usize>>,
    /// Distinct 3-partition instance for ig, pg and dk.
    #[arg(long, value_delimiter = ',')]
    x: Option<Vec<u64>>,
    /// Number of arms of the disk gadget.
    #[arg(long)]
    q: Option<usize>,
    /// Skip solving the instance, leaving no canonical sequence.
    #[arg(long)]
    no_solve: bool,
    /// Write `<prefix>.edges`, `<prefix>.json` and any geometric model.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FireEngine {
    Bruteforce,
    PkFree,
}

#[derive(Debug, Args)]
struct FirefightArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Vertex where the fire starts.
    #[arg(long)]
    origin: usize,
    /// Placements to check instead of optimizing.
    #[arg(long)]
    placements: Option<String>,
    #[arg(long, value_enum, default_value_t = FireEngine::Bruteforce)]
    engine: FireEngine,
    /// The graph has no induced path on k vertices (pk-free engine).
    #[arg(long, default_value_t = 5)]
    k: usize,
    #[arg(long, default_value_t = FIREFIGHT_BRUTEFORCE_CAP)]
    cap: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct PercolateArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Initially active vertices.
    #[arg(long, value_delimiter = ',', required = true)]
    seed_set: Vec<usize>,
    #[arg(long)]
    threshold: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 20)]
    count: usize,
    #[arg(long, default_value_t = 12)]
    n: usize,
    #[arg(long, default_value_t = 0.2)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    search: SearchArgs,
    #[arg(long)]
    timings: bool,
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn new(code: i32, message: impl ToString) -> Self {
        CliError { code, message: message.to_string() }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::new(EXIT_PARSE, e)
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::new(EXIT_PARSE, e)
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        CliError::new(EXIT_PRECONDITION, e)
    }
}

impl From<ApproxError> for CliError {
    fn from(e: ApproxError) -> Self {
        CliError::new(EXIT_PRECONDITION, e)
    }
}

impl From<GadgetError> for CliError {
    fn from(e: GadgetError) -> Self {
        CliError::new(EXIT_PRECONDITION, e)
    }
}

impl From<ExactError> for CliError {
    fn from(e: ExactError) -> Self {
        let code = match e {
            ExactError::BudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_PRECONDITION,
        };
        CliError::new(code, e)
    }
}

impl From<ContactError> for CliError {
    fn from(e: ContactError) -> Self {
        let code = match e {
            ContactError::InvalidPlacement { .. } => EXIT_INVALID,
            _ => EXIT_PRECONDITION,
        };
        CliError::new(code, e)
    }
}

/// Output of a successful command.
struct Report {
    stdout: String,
    code: i32,
}

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let _ = if code == EXIT_OK { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::Burn(a) => cmd_burn(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Gen(a) => cmd_gen(a),
        Command::Firefight(a) => cmd_firefight(a),
        Command::Percolate(a) => cmd_percolate(a),
        Command::Bench(a) => cmd_bench(a),
    };
    match result {
        Ok(report) => {
            let _ = out.write_all(report.stdout.as_bytes());
            report.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::new(EXIT_PARSE, e))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::new(EXIT_PARSE, format!("{}: {e}", path.display())))
    }
}

fn load_graph(input: &GraphInput) -> Result<Graph, CliError> {
    let text = read_text(&input.graph)?;
    Ok(match input.input_format {
        InputFormat::Edges => io::parse_edge_list(&text)?,
        InputFormat::Intervals => interval_graph(&io::parse_intervals(&text)?)?,
        InputFormat::Permutation => permutation_graph(&io::parse_permutation(&text)?)?,
        InputFormat::Disks => disk_graph(&io::parse_disks(&text)?)?,
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn join(seq: &[usize]) -> String {
    seq.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
struct BurnReport {
    engine: String,
    order: usize,
    size: usize,
    k: usize,
    sequence: Vec<usize>,
    verified: bool,
    lower_bound: usize,
    upper_bound: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    nodes_explored: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    implied_lower: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<Vec<TraceStep>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<f64>,
}

fn exact_config(s: &SearchArgs) -> ExactConfig {
    ExactConfig { node_budget: s.node_budget, threads: s.threads.max(1) }
}

fn cmd_burn(a: BurnArgs) -> Result<Report, CliError> {
    let g = load_graph(&a.input)?;
    let start = Instant::now();
    let mut nodes = None;
    let mut implied_lower = None;
    let mut trace = None;
    let sequence = match a.engine {
        Engine::Exact => {
            let r = burning_number_exact(&g, &exact_config(&a.search))?;
            nodes = Some(r.nodes_explored);
            r.witness
        }
        Engine::Bruteforce => {
            let r = burning_number_bruteforce(&g, a.cap)?;
            nodes = Some(r.nodes_explored);
            r.witness
        }
        Engine::Approx3 => {
            let r = burn_3approx(&g, a.x1)?;
            implied_lower = Some(r.implied_lower);
            if a.trace {
                trace = Some(r.trace);
            }
            r.sequence
        }
        Engine::Path => burn_path(&path_order(&g)?)?,
        Engine::Cycle => burn_cycle(&cycle_order(&g)?)?,
        Engine::Split => {
            let sp = match &a.clique {
                Some(c) => {
                    let independent = (0..g.order()).filter(|v| !c.contains(v)).collect();
                    SplitPartition { clique: c.clone(), independent }
                }
                None => {
                    split_partition(&g).ok_or_else(|| CliError::new(EXIT_PRECONDITION, "graph is not a split graph"))?
                }
            };
            burn_split(&g, &sp, SplitOptions { preferences: !a.no_preferences })?
        }
        Engine::Cograph => burn_cograph(&g)?,
        Engine::IntervalApprox => burn_interval_approx(&g)?,
    };
    let elapsed = start.elapsed();
    let verified = verify(&g, &sequence);
    let report = BurnReport {
        engine: engine_name(a.engine),
        order: g.order(),
        size: g.size(),
        k: sequence.len(),
        verified,
        lower_bound: lower_bound(&g),
        upper_bound: upper_bound_radius(&g),
        nodes_explored: nodes,
        implied_lower,
        trace,
        elapsed_ms: a.timings.then_some(elapsed.as_secs_f64() * 1e3),
        sequence,
    };
    let stdout = match a.format {
        OutputFormat::Json => to_json(&report),
        OutputFormat::Text => {
            format!("k = {}\nsequence = {}\nverified = {}\n", report.k, join(&report.sequence), verified)
        }
        OutputFormat::Dot => io::burn_dot(&g, &simulate(&g, &report.sequence).schedule),
    };
    Ok(Report { stdout, code: if verified { EXIT_OK } else { EXIT_INVALID } })
}

fn engine_name(e: Engine) -> String {
    e.to_possible_value().expect("no skipped variants").get_name().to_string()
}

#[derive(Serialize)]
struct VerifyReport {
    burning_sequence: bool,
    #[serde(flatten)]
    outcome: BurnOutcome,
    labels: Vec<Option<String>>,
}

/// Subset of a certificate needed to check it.
#[derive(Deserialize)]
struct CertificateSequence {
    claimed_k: usize,
    canonical_sequence: Option<Vec<usize>>,
}

fn cmd_verify(a: VerifyArgs) -> Result<Report, CliError> {
    let g = load_graph(&a.input)?;
    let sequence = match (&a.sequence, &a.certificate) {
        (Some(s), _) => io::parse_sequence(s)?,
        (None, Some(path)) => {
            let cert: CertificateSequence = serde_json::from_str(&read_text(path)?)
                .map_err(|e| CliError::new(EXIT_PARSE, format!("{}: {e}", path.display())))?;
            let seq = cert
                .canonical_sequence
                .ok_or_else(|| CliError::new(EXIT_PRECONDITION, "certificate has no canonical sequence"))?;
            if seq.len() != cert.claimed_k {
                return Ok(Report {
                    stdout: "canonical sequence length differs from claimed_k\n".into(),
                    code: EXIT_INVALID,
                });
            }
            seq
        }
        (None, None) => unreachable!("clap requires one of them"),
    };
    let outcome = simulate(&g, &sequence);
    let ok = verify(&g, &sequence);
    debug_assert_eq!(ok, outcome.is_burning_sequence());
    let stdout = match a.format {
        OutputFormat::Json => {
            let labels = (0..g.order()).map(|v| outcome.schedule.label(v)).collect();
            to_json(&VerifyReport { burning_sequence: ok, outcome, labels })
        }
        OutputFormat::Text => {
            let mut s = format!("burning sequence: {ok}\n");
            if let Some(v) = outcome.first_violation {
                s += &format!("first violation: step {} vertex {} ({:?})\n", v.step, v.vertex, v.reason);
            }
            if !outcome.complete {
                s += "incomplete: some vertices never burn\n";
            }
            s
        }
        OutputFormat::Dot => io::burn_dot(&g, &outcome.schedule),
    };
    Ok(Report { stdout, code: if ok { EXIT_OK } else { EXIT_INVALID } })
}

#[derive(Serialize)]
struct GenReport {
    kind: String,
    order: usize,
    size: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<GadgetCertificate>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    files: Vec<String>,
}

fn need<T: Copy>(v: Option<T>, name: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::new(EXIT_PRECONDITION, format!("--{name} is required for this kind")))
}

fn instance(a: &GenArgs) -> Result<(D3PInstance, Option<Vec<Triple>>), CliError> {
    let xs = a.x.as_ref().ok_or_else(|| CliError::new(EXIT_PRECONDITION, "--x is required for this kind"))?;
    let inst = D3PInstance::new(xs)?;
    let sol = if a.no_solve || inst.elements.len() > D3P_BRUTEFORCE_CAP {
        None
    } else {
        solve_d3p_bruteforce(&inst, D3P_BRUTEFORCE_CAP)?
    };
    Ok((inst, sol))
}

fn cmd_gen(a: GenArgs) -> Result<Report, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    // (extension, contents) of a geometric or permutation model
    let mut model: Option<(&str, String)> = None;
    let mut certificate = None;
    let g = match a.kind {
        GenKind::Spider => gen_spider(need(a.s, "s")?, need(a.r, "r")?),
        GenKind::SpiderForest => gen_spider_forest(
            a.degrees.as_deref().ok_or_else(|| CliError::new(EXIT_PRECONDITION, "--degrees is required"))?,
        )?,
        GenKind::Path => Graph::path(need(a.n, "n")?),
        GenKind::Cycle => Graph::cycle(need(a.n, "n")?).map_err(|e| CliError::new(EXIT_PRECONDITION, e))?,
        GenKind::Random => {
            if !(0.0..=1.0).contains(&a.p) {
                return Err(CliError::new(EXIT_PRECONDITION, "--p must lie in [0, 1]"));
            }
            let n = need(a.n, "n")?;
            if a.connected {
                generators::random_connected(&mut rng, n, a.p)
            } else {
                generators::gnp(&mut rng, n, a.p)
            }
        }
        GenKind::Intervals => {
            let ivs = generators::random_intervals(&mut rng, need(a.n, "n")?);
            model = Some(("intervals", io::write_intervals(&ivs)));
            interval_graph(&ivs)?
        }
        GenKind::Permutation => {
            let p = generators::random_permutation(&mut rng, need(a.n, "n")?);
            model = Some(("perm", io::write_permutation(&p)));
            permutation_graph(&p)?
        }
        GenKind::Ig => {
            let (inst, sol) = instance(&a)?;
            let gadget = gen_ig_gadget(&inst, sol.as_deref())?;
            model = Some(("intervals", io::write_intervals(&gadget.intervals)));
            certificate = Some(gadget.certificate);
            certificate.as_ref().unwrap().graph.clone()
        }
        GenKind::Pg => {
            let (inst, sol) = instance(&a)?;
            let gadget = gen_pg_gadget(&inst, sol.as_deref())?;
            model = Some(("perm", io::write_permutation(&gadget.permutation)));
            certificate = Some(gadget.certificate);
            certificate.as_ref().unwrap().graph.clone()
        }
        GenKind::Dk => {
            let (inst, sol) = instance(&a)?;
            let q = need(a.q, "q")?;
            let gadget = gen_dk_gadget(&inst, q, sol.as_deref())?;
            model = Some(("disks", io::write_disks(&gadget.disks)));
            certificate = Some(gadget.certificate);
            certificate.as_ref().unwrap().graph.clone()
        }
    };
    let kind = a.kind.to_possible_value().unwrap().get_name().to_string();
    let mut files = Vec::new();
    if let Some(prefix) = &a.out {
        let write = |ext: &str, contents: &str, files: &mut Vec<String>| -> Result<(), CliError> {
            let path = prefix.with_extension(ext);
            fs::write(&path, contents)
                .map_err(|e| CliError::new(EXIT_PRECONDITION, format!("{}: {e}", path.display())))?;
            files.push(path.display().to_string());
            Ok(())
        };
        write("edges", &io::write_edge_list(&g), &mut files)?;
        if let Some(c) = &certificate {
            write("json", &to_json(c), &mut files)?;
        }
        if let Some((ext, text)) = &model {
            write(ext, text, &mut files)?;
        }
    }
    let report = GenReport { kind, order: g.order(), size: g.size(), edges: g.edges(), certificate, files };
    Ok(Report { stdout: to_json(&report), code: EXIT_OK })
}

fn cmd_firefight(a: FirefightArgs) -> Result<Report, CliError> {
    let g = load_graph(&a.input)?;
    let run = match &a.placements {
        Some(p) => verify_firefighter(&g, a.origin, &io::parse_sequence(p)?)?,
        None => match a.engine {
            FireEngine::Bruteforce => firefight_bruteforce(&g, a.origin, a.cap)?,
            FireEngine::PkFree => firefight_pk_free(&g, a.origin, a.k)?,
        },
    };
    let stdout = match a.format {
        OutputFormat::Json => to_json(&run),
        OutputFormat::Text => format!("saved = {}\nplacements = {}\n", run.saved, join(&run.placements)),
        OutputFormat::Dot => io::firefight_dot(&g, &run),
    };
    Ok(Report { stdout, code: EXIT_OK })
}

fn cmd_percolate(a: PercolateArgs) -> Result<Report, CliError> {
    let g = load_graph(&a.input)?;
    let run = bootstrap_percolate(&g, &a.seed_set, a.threshold)?;
    let stdout = match a.format {
        OutputFormat::Json | OutputFormat::Dot => to_json(&run),
        OutputFormat::Text => {
            format!(
                "percolates = {}\nstabilized_at = {}\nfinal = {}\n",
                run.percolates,
                run.stabilized_at,
                join(run.timeline.last().unwrap())
            )
        }
    };
    Ok(Report { stdout, code: EXIT_OK })
}

#[derive(Serialize)]
struct BenchRow {
    seed: u64,
    order: usize,
    size: usize,
    exact_k: usize,
    approx_k: usize,
    implied_lower: usize,
    nodes_explored: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact_ms: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    approx_ms: Option<f64>,
}

#[derive(Serialize)]
struct BenchReport {
    rows: Vec<BenchRow>,
    worst_ratio: f64,
    approx_optimal: usize,
}

fn cmd_bench(a: BenchArgs) -> Result<Report, CliError> {
    let cfg = exact_config(&a.search);
    let mut rows = Vec::new();
    for i in 0..a.count {
        let seed = a.seed.wrapping_add(i as u64);
        let g = generators::random_connected(&mut ChaCha8Rng::seed_from_u64(seed), a.n, a.p);
        let t0 = Instant::now();
        let exact = burning_number_exact(&g, &cfg)?;
        let t1 = Instant::now();
        let approx = burn_3approx(&g, None)?;
        let t2 = Instant::now();
        rows.push(BenchRow {
            seed,
            order: g.order(),
            size: g.size(),
            exact_k: exact.k,
            approx_k: approx.k,
            implied_lower: approx.implied_lower,
            nodes_explored: exact.nodes_explored,
            exact_ms: a.timings.then(|| (t1 - t0).as_secs_f64() * 1e3),
            approx_ms: a.timings.then(|| (t2 - t1).as_secs_f64() * 1e3),
        });
    }
    let worst_ratio = rows.iter().map(|r| r.approx_k as f64 / r.exact_k as f64).fold(0.0, f64::max);
    let approx_optimal = rows.iter().filter(|r| r.approx_k == r.exact_k).count();
    Ok(Report { stdout: to_json(&BenchReport { rows, worst_ratio, approx_optimal }), code: EXIT_OK })
}
