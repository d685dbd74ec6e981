//! Command-line front end: `orient`, `verify`, `oracle`, `gen` and `bench`.
//!
//! Exit codes are shared by every command: 0 when the result checks out, 1
//! when a produced or supplied orientation fails a check, 2 for unusable
//! input (parse errors, preconditions, bad flags).

pub mod sweep;

use std::fmt::Write as _;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use strong_orient::generators::FamilySpec;
use strong_orient::io::{parse_arc_list, parse_edge_list, write_arc_list, write_edge_list};
use strong_orient::oracle::{bound_report, brute_force_oriented_diameter, BoundInputs, OrientationCertificate, ValidationFailure};
use strong_orient::pipeline::{orient, orient_fallback, Oriented, PipelineConfig};
use strong_orient::{Epsilon, Error, Graph};
use thiserror::Error as ThisError;

use sweep::{parse_sweep, SweepError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] Error),
    #[error("sweep: {0}")]
    Sweep(#[from] SweepError),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => core_exit_code(e),
            _ => EXIT_INPUT,
        }
    }
}

/// Precondition and parse errors are input errors; anything raised inside
/// the construction is a failed check.
fn core_exit_code(e: &Error) -> i32 {
    match e {
        Error::IndexOutOfRange { .. }
        | Error::SelfLoop(_)
        | Error::EmptyGraph
        | Error::NotBridgeless { .. }
        | Error::MinDegreeTooSmall { .. }
        | Error::Disconnected
        | Error::InvalidEpsilon(_)
        | Error::TooManyEdges { .. }
        | Error::NoStrongOrientation
        | Error::EmptyList
        | Error::DeltaTooSmall { .. }
        | Error::KTooSmall(_)
        | Error::TooFewVertices { .. }
        | Error::ConstructionFailed(_)
        | Error::Parse { .. } => EXIT_INPUT,
        _ => EXIT_CHECK,
    }
}

fn parse_epsilon(s: &str) -> Result<Epsilon, String> {
    s.parse::<Epsilon>().map_err(|e| e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "strong-orient", version, about = "Strongly connected orientations with small diameter")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Orient a bridgeless graph and certify the diameter bound.
    Orient(OrientArgs),
    /// Check an arc list against a graph.
    Verify(VerifyArgs),
    /// Exact oriented diameter of a small graph by exhaustive search.
    Oracle(OracleArgs),
    /// Write a generated graph as an edge list.
    Gen(GenArgs),
    /// Orient a sweep of generated graphs and write one CSV row per graph.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct EpsilonArg {
    /// Accuracy parameter: an integer, decimal or fraction such as `1/3`.
    #[arg(long, default_value = "1", value_parser = parse_epsilon, allow_hyphen_values = true)]
    pub epsilon: Epsilon,
}

#[derive(Debug, Args)]
pub struct InstrumentArg {
    /// Run the per-round checks (default: on up to 2000 vertices).
    #[arg(long, overrides_with = "no_instrument")]
    pub instrument: bool,
    #[arg(long, overrides_with = "instrument")]
    pub no_instrument: bool,
}

impl InstrumentArg {
    fn choice(&self) -> Option<bool> {
        match (self.instrument, self.no_instrument) {
            (true, _) => Some(true),
            (_, true) => Some(false),
            _ => None,
        }
    }
}

#[derive(Debug, Args)]
pub struct OrientArgs {
    /// Edge-list file, `-` for stdin.
    #[arg(long)]
    pub input: PathBuf,
    /// Arc-list output; stdout when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Certificate JSON output.
    #[arg(long)]
    pub stats: Option<PathBuf>,
    #[command(flatten)]
    pub epsilon: EpsilonArg,
    /// First core vertex.
    #[arg(long)]
    pub start: Option<usize>,
    #[command(flatten)]
    pub instrument: InstrumentArg,
    /// Per-round and per-ear JSON lines.
    #[arg(long)]
    pub trace: Option<PathBuf>,
    /// Exit 1 when any round check fails, not only the guarantee.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Edge-list file of the graph.
    #[arg(long)]
    pub input: PathBuf,
    /// Arc-list file to check.
    #[arg(long)]
    pub arcs: PathBuf,
    #[command(flatten)]
    pub epsilon: EpsilonArg,
    /// Report JSON output; stdout when absent.
    #[arg(long)]
    pub stats: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Refuse graphs with more edges than this.
    #[arg(long, default_value_t = strong_orient::oracle::DEFAULT_MAX_EDGES)]
    pub oracle_max_edges: usize,
    /// Witness arc-list output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Gdk,
    Random,
    Cycle,
    Complete,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long)]
    pub delta: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Edge-list output; stdout when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Sweep such as `4,5` or `1..3`.
    #[arg(long)]
    pub delta: Option<String>,
    #[arg(long)]
    pub k: Option<String>,
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long, default_value = "0")]
    pub seed: String,
    #[command(flatten)]
    pub epsilon: EpsilonArg,
    #[command(flatten)]
    pub instrument: InstrumentArg,
    /// CSV output; stdout when absent.
    #[arg(long)]
    pub stats: Option<PathBuf>,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return e.exit_code();
        }
    };
    let result = match &cli.command {
        Command::Orient(a) => cmd_orient(a, stdout, stderr),
        Command::Verify(a) => cmd_verify(a, stdout),
        Command::Oracle(a) => cmd_oracle(a, stdout),
        Command::Gen(a) => cmd_gen(a, stdout),
        Command::Bench(a) => cmd_bench(a, stdout),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    let io = |source| CliError::Io { path: path.to_path_buf(), source };
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io)
    }
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = read_input(path)?;
    parse_edge_list(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn emit(path: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io { path: p.to_path_buf(), source }),
        None => stdout.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

fn trace_text(o: &Oriented) -> String {
    let mut out = String::new();
    for r in &o.core.rounds {
        let _ = writeln!(out, "{}", r.trace_line());
    }
    for ear in &o.extension.ears {
        let line = serde_json::json!({
            "kind": "ear",
            "length": ear.path.len(),
            "layer": ear.layer,
            "from": ear.path.first(),
            "to": ear.path.last(),
        });
        let _ = writeln!(out, "{line}");
    }
    out
}

fn cmd_orient(a: &OrientArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, CliError> {
    let g = read_graph(&a.input)?;
    let config = PipelineConfig { epsilon: a.epsilon.epsilon, start: a.start, instrument: a.instrument.choice() };
    let (cert, trace) = match orient(&g, &config) {
        Ok(o) => {
            let trace = trace_text(&o);
            (o.certificate, trace)
        }
        Err(Error::MinDegreeTooSmall { found: 2, .. }) => {
            let _ = writeln!(stderr, "fallback: minimum degree 2, plain ear orientation with no diameter guarantee");
            let (ext, cert) = orient_fallback(&g, a.epsilon.epsilon)?;
            let trace = ext
                .ears
                .iter()
                .map(|e| format!("{}\n", serde_json::json!({"kind": "ear", "length": e.path.len(), "layer": e.layer})))
                .collect();
            (cert, trace)
        }
        Err(e) => return Err(e.into()),
    };

    let measured = cert.measured_diameter.map_or("unreachable".to_string(), |d| d.to_string());
    let comments = [format!("orientation epsilon={} measured_diameter={measured}", cert.epsilon_exact)];
    emit(a.output.as_deref(), &write_arc_list(g.vertex_count(), &cert.arcs, &comments), stdout)?;
    if let Some(p) = &a.stats {
        emit(Some(p), &to_json(&cert), stdout)?;
    }
    if let Some(p) = &a.trace {
        emit(Some(p), &trace, stdout)?;
    }
    report(&cert, stderr);

    let failed = cert.failed_checks();
    if !failed.is_empty() {
        let _ = writeln!(stderr, "warning: failed checks: {}", failed.join(", "));
    }
    Ok(if !cert.guarantee_holds() || (a.strict && !cert.passed()) { EXIT_CHECK } else { EXIT_OK })
}

fn report(cert: &OrientationCertificate, stderr: &mut dyn Write) {
    let bound = cert.bound_value.map_or("none".to_string(), |b| format!("{b:.2}"));
    let _ = writeln!(
        stderr,
        "n={} m={} delta={} rounds={} |S|={} diameter={} undirected={} bound={} guarantee={}",
        cert.n,
        cert.m,
        cert.min_degree,
        cert.rounds,
        cert.witness_size,
        cert.measured_diameter.map_or("unreachable".into(), |d| d.to_string()),
        cert.undirected_diameter.map_or("unreachable".into(), |d| d.to_string()),
        bound,
        if cert.guarantee_holds() { "ok" } else { "FAILED" },
    );
}

/// Outcome of `verify`.
#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub epsilon: String,
    pub cap_l: usize,
    pub additive_constant: usize,
    pub valid: bool,
    pub validation_failures: Vec<ValidationFailure>,
    pub measured_diameter: Option<usize>,
    pub undirected_diameter: Option<usize>,
    /// `(3 + epsilon) n / (delta - 2) + 2 L (L + 1)`; absent when `delta <= 2`.
    pub bound_value: Option<f64>,
    pub within_bound: bool,
}

fn cmd_verify(a: &VerifyArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let g = read_graph(&a.input)?;
    let text = read_input(&a.arcs)?;
    let list = parse_arc_list(&text).map_err(|e| CliError::Input(format!("{}: {e}", a.arcs.display())))?;
    if list.n != g.vertex_count() {
        return Err(CliError::Input(format!("arc list has {} vertices, graph has {}", list.n, g.vertex_count())));
    }
    let eps = a.epsilon.epsilon;
    let cert = bound_report(
        &g,
        BoundInputs {
            arcs: &list.arcs,
            epsilon: eps,
            cap: eps.cap_l(),
            witness_size: 0,
            witness_coverage: 0,
            core_vertices: 0,
            core_diameter: None,
            rounds: 0,
            checks: Default::default(),
            fallback: false,
        },
    );
    let has_bound = cert.bound_value.is_some();
    let rep = VerifyReport {
        n: cert.n,
        m: cert.m,
        min_degree: cert.min_degree,
        epsilon: cert.epsilon_exact.clone(),
        cap_l: cert.cap_l,
        additive_constant: cert.additive_constant,
        valid: cert.valid,
        validation_failures: cert.validation_failures,
        measured_diameter: cert.measured_diameter,
        undirected_diameter: cert.undirected_diameter,
        bound_value: cert.bound_value,
        within_bound: has_bound && cert.within_bound,
    };
    emit(a.stats.as_deref(), &to_json(&rep), stdout)?;
    Ok(if rep.valid && (!has_bound || rep.within_bound) { EXIT_OK } else { EXIT_CHECK })
}

fn cmd_oracle(a: &OracleArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let g = read_graph(&a.input)?;
    let r = brute_force_oriented_diameter(&g, a.oracle_max_edges)?;
    let _ = writeln!(stdout, "{}", r.value);
    if let Some(p) = &a.output {
        let comments = [format!("oracle oriented_diameter={}", r.value)];
        emit(Some(p), &write_arc_list(g.vertex_count(), &r.arcs, &comments), stdout)?;
    }
    Ok(EXIT_OK)
}

fn need(v: Option<usize>, flag: &str, family: Family) -> Result<usize, CliError> {
    v.ok_or_else(|| CliError::Input(format!("--{flag} is required for family {family:?}").to_lowercase()))
}

fn family_spec(family: Family, delta: Option<usize>, k: Option<usize>, n: Option<usize>, seed: u64) -> Result<FamilySpec, CliError> {
    Ok(match family {
        Family::Gdk => FamilySpec::Gdk { delta: need(delta, "delta", family)?, k: need(k, "k", family)? },
        Family::Random => FamilySpec::Random { n: need(n, "n", family)?, delta: need(delta, "delta", family)?, seed },
        Family::Cycle => FamilySpec::Cycle { n: need(n, "n", family)? },
        Family::Complete => FamilySpec::Complete { n: need(n, "n", family)? },
    })
}

fn cmd_gen(a: &GenArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let spec = family_spec(a.family, a.delta, a.k, a.n, a.seed)?;
    let g = spec.generate()?;
    emit(a.output.as_deref(), &write_edge_list(&g, &[spec.describe()]), stdout)?;
    Ok(EXIT_OK)
}

/// One `bench` CSV row.
#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub family: Family,
    pub delta: Option<usize>,
    pub k: Option<usize>,
    pub n_param: Option<usize>,
    pub seed: Option<u64>,
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub diam_g: Option<usize>,
    pub measured_diameter: Option<usize>,
    pub bound_value: Option<f64>,
    pub witness_bound: f64,
    pub within_bound: bool,
    pub rounds: usize,
    pub fallback: bool,
    pub guarantee: bool,
    pub runtime_ms: u128,
}

fn axis(spec: Option<&str>, used: bool) -> Result<Vec<Option<usize>>, CliError> {
    match (spec, used) {
        (Some(s), true) => Ok(parse_sweep(s)?.into_iter().map(|v| Some(v as usize)).collect()),
        _ => Ok(vec![None]),
    }
}

fn bench_cell(family: Family, delta: Option<usize>, k: Option<usize>, n: Option<usize>, seed: u64, eps: Epsilon, instrument: Option<bool>) -> Result<BenchRow, CliError> {
    let spec = family_spec(family, delta, k, n, seed)?;
    let g = spec.generate()?;
    let started = Instant::now();
    let config = PipelineConfig { epsilon: eps, start: None, instrument };
    let cert = match orient(&g, &config) {
        Ok(o) => o.certificate,
        Err(Error::MinDegreeTooSmall { found: 2, .. }) => orient_fallback(&g, eps)?.1,
        Err(e) => return Err(e.into()),
    };
    let runtime_ms = started.elapsed().as_millis();
    Ok(BenchRow {
        family,
        delta,
        k,
        n_param: n,
        seed: (family == Family::Random).then_some(seed),
        n: cert.n,
        m: cert.m,
        min_degree: cert.min_degree,
        diam_g: cert.undirected_diameter,
        measured_diameter: cert.measured_diameter,
        bound_value: cert.bound_value,
        witness_bound: cert.witness_bound,
        within_bound: cert.within_bound,
        rounds: cert.rounds,
        fallback: cert.fallback,
        guarantee: cert.guarantee_holds(),
        runtime_ms,
    })
}

/// `(delta, k, n, seed)` of one bench cell.
pub type Cell = (Option<usize>, Option<usize>, Option<usize>, u64);

/// Every cell of the sweep, in output order.
pub fn bench_cells(a: &BenchArgs) -> Result<Vec<Cell>, CliError> {
    let (uses_delta, uses_k, uses_n, uses_seed) = match a.family {
        Family::Gdk => (true, true, false, false),
        Family::Random => (true, false, true, true),
        Family::Cycle | Family::Complete => (false, false, true, false),
    };
    for (used, given, flag) in [(uses_delta, &a.delta, "delta"), (uses_k, &a.k, "k"), (uses_n, &a.n, "n")] {
        if used && given.is_none() {
            return Err(CliError::Input(format!("--{flag} is required for this family")));
        }
    }
    let deltas = axis(a.delta.as_deref(), uses_delta)?;
    let ks = axis(a.k.as_deref(), uses_k)?;
    let ns = axis(a.n.as_deref(), uses_n)?;
    let seeds = if uses_seed { parse_sweep(&a.seed)? } else { vec![0] };
    let mut cells = Vec::new();
    for &n in &ns {
        for &d in &deltas {
            for &k in &ks {
                for &s in &seeds {
                    cells.push((d, k, n, s));
                }
            }
        }
    }
    Ok(cells)
}

fn cmd_bench(a: &BenchArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let cells = bench_cells(a)?;
    let eps = a.epsilon.epsilon;
    let instrument = a.instrument.choice();
    let rows: Vec<BenchRow> = cells
        .par_iter()
        .map(|&(d, k, n, s)| bench_cell(a.family, d, k, n, s, eps, instrument))
        .collect::<Result<_, _>>()?;
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in &rows {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Input(e.to_string()))?;
    emit(a.stats.as_deref(), &String::from_utf8(bytes).expect("csv is utf-8"), stdout)?;
    Ok(if rows.iter().all(|r| r.guarantee) { EXIT_OK } else { EXIT_CHECK })
}
