//! `qext`: command-line access to the toolkit.
//!
//! Every subcommand prints one JSON [`Report`](report::Report) on success,
//! except `verify`, which prints one maximizer record per line. Failures
//! print an error object and exit with 2 (library precondition or i/o),
//! 64 (unknown or missing subcommand) or 65 (unparsable arguments or graph
//! input).

pub mod report;
pub mod store;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use qext_core::extremal::{self, EdgeVerdict};
use qext_core::graph::{graph6, neighbor_degree_sum};
use qext_core::par::Execution;
use qext_core::rewire::{self, RewireMove, SpectralMode};
use qext_core::spectral::{self, qindex_exact, qindex_float, DEFAULT_TOL};
use qext_core::subgraph::{has_cycle_of_length, has_path, PathQuery};
use qext_core::{construct, Error as CoreError, FamilySpec, Graph, VertexSet};

use report::{ErrorReport, Report};
use store::{store_append, Appended, StoreError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_PARSE: i32 = 65;

/// Environment variable capping worker threads.
pub const THREADS_ENV: &str = "QEXT_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "qext",
    version,
    about = "Signless Laplacian spectral extremal toolkit"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// A graph given as graph6 text, a file, a named family or a family JSON.
#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    /// graph6 string
    #[arg(long)]
    pub g6: Option<String>,
    /// File whose first non-empty line is a graph6 string
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// complete, empty, path, cycle, star, snk, snk+, ltk
    #[arg(long)]
    pub family: Option<String>,
    /// Family as JSON, e.g. {"family":"join","left":...,"right":...}
    #[arg(long)]
    pub spec: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    /// Threshold parameter of the analysis; also the family's `k` unless
    /// `--family-k` is given
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub family_k: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum EgVariant {
    Path,
    Cycle,
    Ore,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Q,
    Mu,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a graph and print its graph6 form and degrees
    Construct(GraphArgs),
    /// Certified Q-index, optionally isolated exactly
    Qindex {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long)]
        exact: bool,
        /// Target width of the exact interval, decimal or p/q
        #[arg(long, default_value = "1e-9")]
        width: String,
    },
    /// Adjacency spectral radius
    Mu {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Merris and Das bounds against the certified Q-index
    Bounds(GraphArgs),
    /// Bracket for q(S_{n,k}^+) and the matching edge bound
    Sandwich {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Search for a cycle (or, with --path, a path) on exactly --len vertices
    Free {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        len: usize,
        #[arg(long)]
        path: bool,
        /// Path endpoints must lie in this comma-separated set
        #[arg(long)]
        ends: Option<String>,
    },
    /// Stability classification for graphs without P_{2k+3}
    Classify(GraphArgs),
    /// Minimum-degree peeling below k-1
    Peel(GraphArgs),
    /// Split off small components around a dominating vertex
    Decompose(GraphArgs),
    /// Partition lemma check for the vertex set --a
    NlCheck {
        #[command(flatten)]
        graph: GraphArgs,
        /// Comma-separated vertex list
        #[arg(long)]
        a: String,
    },
    /// Erdős–Gallai path or cycle edge bound, or the Ore bound
    EgCheck {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value = "path")]
        variant: EgVariant,
    },
    /// Apply a rewiring move (JSON) and compare q before and after
    Rewire {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long = "move")]
        mv: String,
    },
    /// Hill climbing for a C_{2k+2}-free maximizer
    Climb {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
        #[arg(long)]
        store: Option<PathBuf>,
    },
    /// Exhaustive maximizers over a graph6 stream (JSON lines out)
    Verify {
        #[arg(long)]
        k: usize,
        /// graph6 file, or - for standard input
        #[arg(long)]
        stream: PathBuf,
        #[arg(long, value_enum, default_value = "q")]
        mode: ModeArg,
        #[arg(long)]
        store: Option<PathBuf>,
        /// Run on the calling thread only
        #[arg(long)]
        sequential: bool,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Construct(_) => "construct",
            Command::Qindex { .. } => "qindex",
            Command::Mu { .. } => "mu",
            Command::Bounds(_) => "bounds",
            Command::Sandwich { .. } => "sandwich",
            Command::Free { .. } => "free",
            Command::Classify(_) => "classify",
            Command::Peel(_) => "peel",
            Command::Decompose(_) => "decompose",
            Command::NlCheck { .. } => "nl-check",
            Command::EgCheck { .. } => "eg-check",
            Command::Rewire { .. } => "rewire",
            Command::Climb { .. } => "climb",
            Command::Verify { .. } => "verify",
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Store(#[from] StoreError),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Parse(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.kind(),
            CliError::Store(e) => e.kind(),
            CliError::Io(_) => "io-error",
            CliError::Parse(_) => "parse-error",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_)
            | CliError::Core(CoreError::MalformedGraph6 { .. } | CoreError::StreamParse { .. }) => {
                EXIT_PARSE
            }
            _ => EXIT_PRECONDITION,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn parse_err(msg: impl Into<String>) -> CliError {
    CliError::Parse(msg.into())
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

fn family_spec(a: &GraphArgs) -> CliResult<FamilySpec> {
    let name = a.family.as_deref().expect("caller checked");
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| parse_err(format!("--family {name} needs --{flag}")))
    };
    let n = || need(a.n, "n");
    let k = || need(a.family_k.or(a.k), "k");
    Ok(match name {
        "complete" => FamilySpec::Complete { n: n()? },
        "empty" => FamilySpec::Empty { n: n()? },
        "path" => FamilySpec::Path { n: n()? },
        "cycle" => FamilySpec::Cycle { n: n()? },
        "star" => FamilySpec::Star { n: n()? },
        "snk" => FamilySpec::Snk { n: n()?, k: k()? },
        "snk+" | "snk_plus" => FamilySpec::SnkPlus { n: n()?, k: k()? },
        "ltk" => FamilySpec::Ltk {
            t: need(a.t, "t")?,
            k: k()?,
        },
        other => return Err(parse_err(format!("unknown family {other:?}"))),
    })
}

/// The graph named by `a` plus an echo of how it was given.
pub fn load_graph(a: &GraphArgs) -> CliResult<(Graph, Value)> {
    let given = [
        a.g6.is_some(),
        a.file.is_some(),
        a.family.is_some(),
        a.spec.is_some(),
    ];
    if given.iter().filter(|&&b| b).count() != 1 {
        return Err(parse_err(
            "give exactly one of --g6, --file, --family, --spec",
        ));
    }
    if let Some(s) = &a.g6 {
        return Ok((graph6::decode(s)?, json!({ "g6": s })));
    }
    if let Some(p) = &a.file {
        let text = std::fs::read_to_string(p)?;
        let line = text
            .lines()
            .find(|l| !l.trim().is_empty())
            .ok_or_else(|| parse_err(format!("{} has no graph", p.display())))?;
        return Ok((
            graph6::decode(line)?,
            json!({ "file": p.display().to_string() }),
        ));
    }
    let spec = match &a.spec {
        Some(s) => serde_json::from_str(s).map_err(|e| parse_err(format!("--spec: {e}")))?,
        None => family_spec(a)?,
    };
    Ok((construct(&spec)?, json!({ "spec": to_value(&spec) })))
}

fn analysis_k(a: &GraphArgs, cmd: &str) -> CliResult<usize> {
    a.k.ok_or_else(|| parse_err(format!("{cmd} needs --k")))
}

fn parse_vertices(s: &str) -> CliResult<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| parse_err(format!("bad vertex {t:?}")))
        })
        .collect()
}

fn parse_width(s: &str) -> CliResult<BigRational> {
    if s.contains('/') {
        return BigRational::from_str(s).map_err(|e| parse_err(format!("--width: {e}")));
    }
    let x: f64 = s
        .parse()
        .map_err(|_| parse_err(format!("--width: cannot parse {s:?}")))?;
    BigRational::from_float(x).ok_or_else(|| parse_err("--width must be finite"))
}

fn with_graph(mut inputs: Value, g: &Graph, extra: Value) -> Value {
    let obj = inputs.as_object_mut().expect("object");
    obj.insert("graph6".into(), json!(graph6::encode(g)));
    if let Value::Object(more) = extra {
        obj.extend(more);
    }
    inputs
}

/// Output of one command: a report, or raw lines for `verify`.
enum Output {
    Report { inputs: Value, results: Value },
    Lines(Vec<String>),
}

fn execute(cmd: &Command, stdin: &mut dyn Read) -> CliResult<Output> {
    let report = |inputs, results| Ok(Output::Report { inputs, results });
    match cmd {
        Command::Construct(a) => {
            let (g, inp) = load_graph(a)?;
            let results = json!({
                "graph6": graph6::encode(&g),
                "n": g.n(),
                "m": g.m(),
                "degrees": g.degrees(),
                "neighbor_degree_sums": (0..g.n()).map(|u| neighbor_degree_sum(&g, u)).collect::<Vec<_>>(),
                "connected": g.is_connected(),
            });
            report(inp, results)
        }
        Command::Qindex {
            graph,
            tol,
            exact,
            width,
        } => {
            if tol.is_nan() || *tol <= 0.0 {
                return Err(parse_err("--tol must be positive"));
            }
            let (g, inp) = load_graph(graph)?;
            let cert = qindex_float(&g, *tol);
            let mut results = json!({ "certificate": to_value(&cert) });
            if *exact {
                let w = parse_width(width)?;
                let r = qindex_exact(&g, &w)?;
                let (flo, fhi) = r.to_f64_bounds();
                results["exact"] = json!({
                    "interval": to_value(&spectral::Interval::from_root(&r)),
                    "width": r.width.to_string(),
                    "f64_bounds": [flo, fhi],
                    "source": to_value(&r.source),
                    "coefficients": r.coefficients.iter().map(ToString::to_string).collect::<Vec<_>>(),
                });
            }
            report(
                with_graph(
                    inp,
                    &g,
                    json!({ "tol": tol, "exact": exact, "width": width }),
                ),
                results,
            )
        }
        Command::Mu { graph, tol } => {
            if tol.is_nan() || *tol <= 0.0 {
                return Err(parse_err("--tol must be positive"));
            }
            let (g, inp) = load_graph(graph)?;
            report(
                with_graph(inp, &g, json!({ "tol": tol })),
                json!({ "certificate": to_value(&spectral::mu_float(&g, *tol)) }),
            )
        }
        Command::Bounds(a) => {
            let (g, inp) = load_graph(a)?;
            let b = extremal::bound_report(&g)?;
            let mut results = to_value(&b);
            results["holds"] = json!(b.holds());
            report(with_graph(inp, &g, json!({})), results)
        }
        Command::Sandwich { n, k } => {
            let (lo, hi) = extremal::snk_plus_sandwich(*n, *k)?;
            let (elo, ehi) = extremal::snk_plus_sandwich_exact(*n, *k)?;
            let results = json!({
                "lower": lo,
                "upper": hi,
                "exact": [elo.to_string(), ehi.to_string()],
                "edge_bound": to_value(&extremal::edge_lower_bound(*n, *k)?),
            });
            report(json!({ "n": n, "k": k }), results)
        }
        Command::Free {
            graph,
            len,
            path,
            ends,
        } => {
            let (g, inp) = load_graph(graph)?;
            let witness = if *path {
                let q = match ends {
                    Some(e) => PathQuery::with_endpoints(
                        *len,
                        VertexSet::from_vertices(g.n(), parse_vertices(e)?)?,
                    ),
                    None => PathQuery::new(*len),
                };
                has_path(&g, &q)
            } else {
                if ends.is_some() {
                    return Err(parse_err("--ends only applies with --path"));
                }
                has_cycle_of_length(&g, *len)
            };
            let kind = if *path { "path" } else { "cycle" };
            let results =
                json!({ "kind": kind, "len": len, "free": witness.is_none(), "witness": witness });
            report(
                with_graph(inp, &g, json!({ "len": len, "path": path, "ends": ends })),
                results,
            )
        }
        Command::Classify(a) => {
            let (g, inp) = load_graph(a)?;
            let k = analysis_k(a, "classify")?;
            let v = extremal::as_classify(&g, k)?;
            let mut results = to_value(&v);
            results["valid"] = json!(v.validate(&g));
            report(with_graph(inp, &g, json!({ "k": k })), results)
        }
        Command::Peel(a) => {
            let (g, inp) = load_graph(a)?;
            let k = analysis_k(a, "peel")?;
            let t = extremal::peel(&g, k)?;
            let mut results = to_value(&t);
            results["contract_holds"] = json!(t.check(&g));
            report(with_graph(inp, &g, json!({ "k": k })), results)
        }
        Command::Decompose(a) => {
            let (g, inp) = load_graph(a)?;
            let k = analysis_k(a, "decompose")?;
            report(
                with_graph(inp, &g, json!({ "k": k })),
                to_value(&extremal::decompose_dominated(&g, k)?),
            )
        }
        Command::NlCheck { graph, a } => {
            let (g, inp) = load_graph(graph)?;
            let k = analysis_k(graph, "nl-check")?;
            let set = VertexSet::from_vertices(g.n(), parse_vertices(a)?)?;
            let c = extremal::nikiforov_partition_check(&g, &set, k)?;
            let mut results = to_value(&c);
            results["holds"] = json!(c.holds());
            report(
                with_graph(inp, &g, json!({ "k": k, "a": set.to_vec() })),
                results,
            )
        }
        Command::EgCheck { graph, variant } => {
            let (g, inp) = load_graph(graph)?;
            let (name, results, k) = match variant {
                EgVariant::Ore => ("ore", to_value(&extremal::ore_bound_check(&g)?), None),
                EgVariant::Path | EgVariant::Cycle => {
                    let k = analysis_k(graph, "eg-check")?;
                    let v: EdgeVerdict = match variant {
                        EgVariant::Path => extremal::erdos_gallai_path_check(&g, k)?,
                        _ => extremal::erdos_gallai_cycle_check(&g, k)?,
                    };
                    let name = if matches!(variant, EgVariant::Path) {
                        "path"
                    } else {
                        "cycle"
                    };
                    (name, to_value(&v), Some(k))
                }
            };
            report(
                with_graph(inp, &g, json!({ "variant": name, "k": k })),
                results,
            )
        }
        Command::Rewire { graph, mv } => {
            let (g, inp) = load_graph(graph)?;
            let m: RewireMove =
                serde_json::from_str(mv).map_err(|e| parse_err(format!("--move: {e}")))?;
            let v = rewire::move_increases_q(&g, &m)?;
            report(
                with_graph(inp, &g, json!({ "move": to_value(&m) })),
                to_value(&v),
            )
        }
        Command::Climb {
            n,
            k,
            seed,
            budget,
            store,
        } => {
            let r = rewire::hill_climb(*n, *k, *seed, *budget)?;
            let mut results = json!({ "record": to_value(&r) });
            if let Some(p) = store {
                results["store"] = json!(appended_name(store_append(&r, p)?));
            }
            report(
                json!({ "n": n, "k": k, "seed": seed, "budget": budget }),
                results,
            )
        }
        Command::Verify {
            k,
            stream,
            mode,
            store,
            sequential,
        } => {
            let mut bytes = Vec::new();
            if stream.as_os_str() == "-" {
                stdin.read_to_end(&mut bytes)?;
            } else {
                bytes = std::fs::read(stream)?;
            }
            let mode = match mode {
                ModeArg::Q => SpectralMode::Q,
                ModeArg::Mu => SpectralMode::Mu,
            };
            let exec = if *sequential {
                Execution::Sequential
            } else {
                Execution::Parallel
            };
            let records = rewire::exhaustive_verify_with(exec, *k, &bytes, mode)?;
            if let Some(p) = store {
                for r in &records {
                    store_append(r, p)?;
                }
            }
            Ok(Output::Lines(
                records
                    .iter()
                    .map(|r| serde_json::to_string(r).expect("records serialize"))
                    .collect(),
            ))
        }
    }
}

fn appended_name(a: Appended) -> &'static str {
    match a {
        Appended::New => "appended",
        Appended::AlreadyPresent => "already_present",
    }
}

/// Apply `QEXT_THREADS` if set to a positive integer.
pub fn configure_threads_from_env() {
    if let Some(n) = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        qext_core::par::configure_threads(n);
    }
}

/// Run the CLI on `args` (including the program name). Returns the exit
/// code; all JSON goes to `out`, clap diagnostics to `err`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::error::ErrorKind;
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return EXIT_OK;
                }
                ErrorKind::InvalidSubcommand
                | ErrorKind::MissingSubcommand
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => EXIT_USAGE,
                _ => EXIT_PARSE,
            };
            let _ = write!(err, "{e}");
            let kind = if code == EXIT_USAGE {
                "unknown-subcommand"
            } else {
                "parse-error"
            };
            let _ = writeln!(
                out,
                "{}",
                ErrorReport::new("", kind, e.kind().to_string()).to_json()
            );
            return code;
        }
    };
    let name = cli.command.name();
    let start = Instant::now();
    match execute(&cli.command, stdin) {
        Ok(Output::Report { inputs, results }) => {
            let ms = start.elapsed().as_millis() as u64;
            let _ = writeln!(out, "{}", Report::new(name, inputs, results, ms).to_json());
            EXIT_OK
        }
        Ok(Output::Lines(lines)) => {
            for l in lines {
                let _ = writeln!(out, "{l}");
            }
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(
                out,
                "{}",
                ErrorReport::new(name, e.kind(), e.to_string()).to_json()
            );
            e.exit_code()
        }
    }
}
