//! The `nplab` command line.
//!
//! Labelings are written as comma-separated integers indexed by vertex id:
//! `3,1,4,2` gives vertex 0 the label 3, vertex 1 the label 1, and so on.
//!
//! Exit codes: 0 success, 1 usage error, 2 budget-limited unknown result,
//! 3 I/O or parse error.

use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use nplab::construct::{
    certify_sufficient, label_cycle_standard, label_gp, label_grid, label_grid3,
    label_lobster_surplus, label_reduced_lobster, label_union_of_stars, Labeled,
};
use nplab::graph::generators::{self, Attachment};
use nplab::graph::{export_dot, Graph6Error, LobsterSpec};
use nplab::labeling::{even_set_obstruction, DEFAULT_OBSTRUCTION_CAP};
use nplab::randomgraphs::{experiment_npl_rate, Family};
use nplab::search::{
    scan_file_resumable, scan_graph6_stream, search_npl_with, NplSearchOptions, ScanConfig,
    ScanError, ScanMode,
};
use nplab::{
    is_neighborhood_prime, is_prime_labeling, parse_graph6, write_graph6, Certificate, Graph,
    Labeling, Reason, SearchBudget, Verdict,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Environment variable holding the default worker count.
pub const THREADS_ENV: &str = "NPLAB_THREADS";

#[derive(Debug, Clone, PartialEq, Parser)]
#[command(
    name = "nplab",
    version,
    about = "Neighborhood-prime labelings: verify, construct, search and scan",
    after_help = "Labelings are comma-separated labels indexed by vertex id, e.g. 3,1,4,2.\n\
                  Exit codes: 0 ok, 1 usage, 2 budget-limited unknown, 3 I/O or parse error.\n\
                  NPLAB_THREADS sets the worker count for scan and random."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, PartialEq, Subcommand)]
pub enum Command {
    /// Check a labeling against a graph.
    Verify {
        #[command(flatten)]
        graph: GraphInput,
        /// Comma-separated labels indexed by vertex id.
        #[arg(long, allow_hyphen_values = true)]
        labels: String,
        /// Check for a prime labeling instead.
        #[arg(long)]
        prime: bool,
    },
    /// Certify a graph with the constructive routes, searching as a last resort.
    Label {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Exhaustive search for a neighborhood-prime labeling.
    Search {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Only try one vertex from each class of twins.
        #[arg(long)]
        twin_symmetry: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Classify every graph6 line of a file (or stdin) as JSON lines.
    Scan {
        /// Input file; stdin when omitted or `-`.
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Worker threads; defaults to NPLAB_THREADS, then to all cores.
        #[arg(long)]
        threads: Option<usize>,
        /// Record wall time per graph.
        #[arg(long)]
        timing: bool,
        /// Allow exact scans of order 9 and above.
        #[arg(long)]
        long_running: bool,
        /// Checkpoint file for resuming; requires an input file.
        #[arg(long, requires = "input")]
        checkpoint: Option<PathBuf>,
    },
    /// Build and label a member of a named family.
    Family {
        #[command(subcommand)]
        family: FamilyCommand,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a seeded random-graph experiment.
    Random {
        /// Random graph model.
        #[arg(value_enum)]
        model: Model,
        /// Number of vertices.
        n: usize,
        /// Edge probability for gnp, degree for gnd.
        param: String,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        threads: Option<usize>,
        /// Emit the per-trial table as CSV instead of the JSON report.
        #[arg(long)]
        csv: bool,
        #[arg(long)]
        timing: bool,
    },
    /// Write a graph, optionally labeled, as DOT.
    Export {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, allow_hyphen_values = true)]
        labels: Option<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Subcommand)]
pub enum FamilyCommand {
    /// Generalized Petersen graph GP(n, k).
    Gp {
        n: usize,
        k: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Grid P_m x P_n.
    Grid { m: usize, n: usize },
    /// Grid P_l x P_m x P_n.
    Grid3 {
        l: usize,
        m: usize,
        n: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Lobster, either reduced by interior spine degrees or by full spine.
    Lobster {
        /// Interior spine degrees of a reduced lobster, e.g. 17,9,6,5.
        #[arg(long, conflicts_with = "spine", required_unless_present = "spine")]
        reduced: Option<String>,
        /// Spine vertices separated by `/`, each a comma list of `p`
        /// (pendant) or `mK` (middle vertex with K leaves), e.g. `/m1,p/m2/`.
        #[arg(long, allow_hyphen_values = true)]
        spine: Option<String>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Disjoint union of stars with these leaf counts (prime labeling).
    Stars { sizes: String },
    /// Cycle C_n with the standard labeling.
    Cycle { n: usize },
    /// Disjoint union of cycles with these lengths.
    Union {
        lengths: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    /// G(n, p).
    Gnp,
    /// Random d-regular graph on n vertices.
    Gnd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    FastCertify,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Args)]
pub struct GraphInput {
    /// Graph in graph6.
    #[arg(long, group = "graph_source", allow_hyphen_values = true)]
    pub g6: Option<String>,
    /// Edge list such as `0-1,1-2,2-0`.
    #[arg(long, group = "graph_source")]
    pub edges: Option<String>,
    /// Order for --edges; defaults to one more than the largest vertex.
    #[arg(long, requires = "edges")]
    pub order: Option<usize>,
    /// File holding one graph6 line.
    #[arg(long, group = "graph_source")]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Args)]
pub struct BudgetArgs {
    /// Node limit for searches.
    #[arg(long)]
    pub nodes: Option<u64>,
    /// Wall-clock limit for searches, in milliseconds.
    #[arg(long)]
    pub time_ms: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Args)]
pub struct OutputArgs {
    /// Print the certificate as JSON.
    #[arg(long, global = true, conflicts_with = "dot")]
    pub json: bool,
    /// Print the labeled graph as DOT.
    #[arg(long, global = true)]
    pub dot: bool,
}

impl BudgetArgs {
    pub fn budget(&self) -> SearchBudget {
        let mut b = match self.nodes {
            Some(n) => SearchBudget::nodes(n),
            None => SearchBudget::unlimited(),
        };
        if let Some(ms) = self.time_ms {
            b = b.with_time_limit(Duration::from_millis(ms));
        }
        b
    }

    fn push_args(&self, out: &mut Vec<String>) {
        if let Some(n) = self.nodes {
            out.extend(["--nodes".into(), n.to_string()]);
        }
        if let Some(t) = self.time_ms {
            out.extend(["--time-ms".into(), t.to_string()]);
        }
    }
}

impl OutputArgs {
    fn push_args(&self, out: &mut Vec<String>) {
        if self.json {
            out.push("--json".into());
        }
        if self.dot {
            out.push("--dot".into());
        }
    }
}

impl GraphInput {
    fn push_args(&self, out: &mut Vec<String>) {
        if let Some(g) = &self.g6 {
            out.extend(["--g6".into(), g.clone()]);
        }
        if let Some(e) = &self.edges {
            out.extend(["--edges".into(), e.clone()]);
        }
        if let Some(o) = self.order {
            out.extend(["--order".into(), o.to_string()]);
        }
        if let Some(f) = &self.file {
            out.extend(["--file".into(), f.display().to_string()]);
        }
    }
}

impl Cli {
    /// Canonical argument vector (without the program name); parsing it
    /// yields an equal value.
    pub fn to_args(&self) -> Vec<String> {
        let mut a: Vec<String> = Vec::new();
        let flag = |a: &mut Vec<String>, on: bool, name: &str| {
            if on {
                a.push(name.into());
            }
        };
        match &self.command {
            Command::Verify {
                graph,
                labels,
                prime,
            } => {
                a.push("verify".into());
                graph.push_args(&mut a);
                a.extend(["--labels".into(), labels.clone()]);
                flag(&mut a, *prime, "--prime");
            }
            Command::Label {
                graph,
                budget,
                output,
            } => {
                a.push("label".into());
                graph.push_args(&mut a);
                budget.push_args(&mut a);
                output.push_args(&mut a);
            }
            Command::Search {
                graph,
                budget,
                twin_symmetry,
                output,
            } => {
                a.push("search".into());
                graph.push_args(&mut a);
                budget.push_args(&mut a);
                flag(&mut a, *twin_symmetry, "--twin-symmetry");
                output.push_args(&mut a);
            }
            Command::Scan {
                input,
                mode,
                budget,
                threads,
                timing,
                long_running,
                checkpoint,
            } => {
                a.push("scan".into());
                if let Some(p) = input {
                    a.push(p.display().to_string());
                }
                a.extend([
                    "--mode".into(),
                    mode.to_possible_value().unwrap().get_name().into(),
                ]);
                budget.push_args(&mut a);
                if let Some(t) = threads {
                    a.extend(["--threads".into(), t.to_string()]);
                }
                flag(&mut a, *timing, "--timing");
                flag(&mut a, *long_running, "--long-running");
                if let Some(c) = checkpoint {
                    a.extend(["--checkpoint".into(), c.display().to_string()]);
                }
            }
            Command::Family { family, output } => {
                a.push("family".into());
                match family {
                    FamilyCommand::Gp { n, k, budget } => {
                        a.extend(["gp".into(), n.to_string(), k.to_string()]);
                        budget.push_args(&mut a);
                    }
                    FamilyCommand::Grid { m, n } => {
                        a.extend(["grid".into(), m.to_string(), n.to_string()]);
                    }
                    FamilyCommand::Grid3 { l, m, n, budget } => {
                        a.extend(["grid3".into(), l.to_string(), m.to_string(), n.to_string()]);
                        budget.push_args(&mut a);
                    }
                    FamilyCommand::Lobster {
                        reduced,
                        spine,
                        budget,
                    } => {
                        a.push("lobster".into());
                        if let Some(r) = reduced {
                            a.extend(["--reduced".into(), r.clone()]);
                        }
                        if let Some(s) = spine {
                            a.extend(["--spine".into(), s.clone()]);
                        }
                        budget.push_args(&mut a);
                    }
                    FamilyCommand::Stars { sizes } => a.extend(["stars".into(), sizes.clone()]),
                    FamilyCommand::Cycle { n } => a.extend(["cycle".into(), n.to_string()]),
                    FamilyCommand::Union { lengths, budget } => {
                        a.extend(["union".into(), lengths.clone()]);
                        budget.push_args(&mut a);
                    }
                }
                output.push_args(&mut a);
            }
            Command::Random {
                model,
                n,
                param,
                trials,
                seed,
                budget,
                threads,
                csv,
                timing,
            } => {
                a.push("random".into());
                a.push(model.to_possible_value().unwrap().get_name().into());
                a.extend([n.to_string(), param.clone()]);
                a.extend([
                    "--trials".into(),
                    trials.to_string(),
                    "--seed".into(),
                    seed.to_string(),
                ]);
                budget.push_args(&mut a);
                if let Some(t) = threads {
                    a.extend(["--threads".into(), t.to_string()]);
                }
                flag(&mut a, *csv, "--csv");
                flag(&mut a, *timing, "--timing");
            }
            Command::Export { graph, labels } => {
                a.push("export".into());
                graph.push_args(&mut a);
                if let Some(l) = labels {
                    a.extend(["--labels".into(), l.clone()]);
                }
            }
        }
        a
    }
}

/// A failure that maps to a non-zero exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_IO,
            message: message.into(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::input(format!("I/O error: {e}"))
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `argv` (program name first) and runs the command. Normal output
/// goes to `out`, diagnostics to `err`; the return value is the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "nplab: {}", f.message);
            f.code
        }
    }
}

pub fn execute(command: &Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Verify {
            graph,
            labels,
            prime,
        } => verify(graph, labels, *prime, out),
        Command::Label {
            graph,
            budget,
            output,
        } => {
            let g = graph.load()?;
            let cert = certify_sufficient(&g, &budget.budget());
            report(&g, &cert, output, out)
        }
        Command::Search {
            graph,
            budget,
            twin_symmetry,
            output,
        } => {
            let g = graph.load()?;
            let options = NplSearchOptions {
                twin_symmetry: *twin_symmetry,
                ..Default::default()
            };
            let cert = search_npl_with(&g, &budget.budget(), &options);
            report(&g, &cert, output, out)
        }
        Command::Scan {
            input,
            mode,
            budget,
            threads,
            timing,
            long_running,
            checkpoint,
        } => {
            let config = ScanConfig {
                mode: match mode {
                    Mode::Exact => ScanMode::Exact,
                    Mode::FastCertify => ScanMode::FastCertify,
                },
                budget: budget.budget(),
                threads: thread_count(*threads)?,
                timing: *timing,
                long_running: *long_running,
                ..ScanConfig::default()
            };
            scan(input.as_ref(), checkpoint.as_ref(), &config, out)
        }
        Command::Family {
            family: FamilyCommand::Stars { sizes },
            output,
        } => stars(sizes, output, out),
        Command::Family { family, output } => {
            let labeled = build_family(family)?;
            report(&labeled.graph, &labeled.certificate, output, out)
        }
        Command::Random {
            model,
            n,
            param,
            trials,
            seed,
            budget,
            threads,
            csv,
            timing,
        } => {
            let bad = || Failure::usage(format!("random: bad parameter {param:?}"));
            let family = match model {
                Model::Gnp => Family::Gnp {
                    n: *n,
                    p: param.parse().map_err(|_| bad())?,
                },
                Model::Gnd => Family::Gnd {
                    n: *n,
                    d: param.parse().map_err(|_| bad())?,
                },
            };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(thread_count(*threads)?)
                .build()
                .map_err(|e| Failure::input(e.to_string()))?;
            let report = pool
                .install(|| experiment_npl_rate(family, *trials, *seed, &budget.budget(), *timing))
                .map_err(|e| Failure::usage(e.to_string()))?;
            if *csv {
                out.write_all(report.to_csv().as_bytes())?;
            } else {
                writeln!(out, "{}", report.to_json())?;
            }
            Ok(if report.unknown > 0 {
                EXIT_UNKNOWN
            } else {
                EXIT_OK
            })
        }
        Command::Export { graph, labels } => {
            let g = graph.load()?;
            let f = labels.as_deref().map(parse_labels).transpose()?;
            let dot = export_dot(&g, f.as_ref()).map_err(|e| Failure::input(e.to_string()))?;
            out.write_all(dot.as_bytes())?;
            Ok(EXIT_OK)
        }
    }
}

fn thread_count(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(t) = flag {
        return Ok(t);
    }
    match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("{THREADS_ENV}={v:?} is not a thread count"))),
        Err(_) => Ok(0),
    }
}

impl GraphInput {
    pub fn load(&self) -> Result<Graph, Failure> {
        if let Some(text) = &self.g6 {
            return parse_g6(text, "--g6");
        }
        if let Some(text) = &self.edges {
            return parse_edges(text, self.order);
        }
        if let Some(path) = &self.file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            let (line_no, line) = text
                .lines()
                .enumerate()
                .find(|(_, l)| !l.trim().is_empty())
                .ok_or_else(|| Failure::input(format!("{}: no graph found", path.display())))?;
            return parse_g6(line, &format!("{}:{}", path.display(), line_no + 1));
        }
        Err(Failure::usage("one of --g6, --edges or --file is required"))
    }
}

fn parse_g6(text: &str, origin: &str) -> Result<Graph, Failure> {
    parse_graph6(text).map_err(|e: Graph6Error| match e.offset() {
        Some(o) => Failure::input(format!("{origin}: byte {o}: {e}")),
        None => Failure::input(format!("{origin}: {e}")),
    })
}

/// Parses `u-v` pairs separated by commas or whitespace.
pub fn parse_edges(text: &str, order: Option<usize>) -> Result<Graph, Failure> {
    let mut edges = Vec::new();
    let mut pos = 0;
    for token in text.split(|c: char| c == ',' || c.is_whitespace()) {
        let at = pos;
        pos += token.len() + 1;
        if token.is_empty() {
            continue;
        }
        let bad = || Failure::input(format!("--edges: byte {at}: expected u-v, found {token:?}"));
        let (u, v) = token.split_once('-').ok_or_else(bad)?;
        let u: usize = u.trim().parse().map_err(|_| bad())?;
        let v: usize = v.trim().parse().map_err(|_| bad())?;
        edges.push((u, v));
    }
    let n = order.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::from_edges(n, edges).map_err(|e| Failure::input(format!("--edges: {e}")))
}

/// Parses a comma-separated labeling.
pub fn parse_labels(text: &str) -> Result<Labeling, Failure> {
    text.parse()
        .map_err(|e| Failure::input(format!("--labels: {e}")))
}

fn parse_list(text: &str, what: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| Failure::usage(format!("{what}: {s:?} is not a non-negative integer")))
        })
        .collect()
}

/// Parses the `--spine` syntax, e.g. `/m1,p/m2/`.
pub fn parse_spine(text: &str) -> Result<LobsterSpec, Failure> {
    let spine = text
        .split('/')
        .map(|vertex| {
            vertex
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| match t.trim() {
                    "p" => Ok(Attachment::Pendant),
                    m => m
                        .strip_prefix('m')
                        .and_then(|k| k.parse().ok())
                        .map(|leaves| Attachment::Middle { leaves })
                        .ok_or_else(|| Failure::usage(format!("--spine: bad attachment {m:?}"))),
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    LobsterSpec::new(spine).map_err(|e| Failure::usage(e.to_string()))
}

fn verify(graph: &GraphInput, labels: &str, prime: bool, out: &mut dyn Write) -> Outcome {
    let g = graph.load()?;
    let f = parse_labels(labels)?;
    let wrong_size = |e: nplab::labeling::LabelingError| Failure::input(format!("--labels: {e}"));
    if prime {
        match is_prime_labeling(&g, &f).map_err(wrong_size)?.failure() {
            None => writeln!(out, "prime: yes")?,
            Some(w) => writeln!(
                out,
                "prime: no\nedge {}-{} has labels with gcd {}",
                w.edge.0, w.edge.1, w.gcd
            )?,
        }
    } else {
        match is_neighborhood_prime(&g, &f).map_err(wrong_size)?.failure() {
            None => writeln!(out, "NPL: yes")?,
            Some(w) => writeln!(
                out,
                "NPL: no\nvertex {} has neighborhood gcd {}",
                w.vertex, w.gcd
            )?,
        }
    }
    Ok(EXIT_OK)
}

fn report(g: &Graph, cert: &Certificate, output: &OutputArgs, out: &mut dyn Write) -> Outcome {
    if output.json {
        let doc = serde_json::json!({ "g6": write_graph6(g), "certificate": cert });
        writeln!(out, "{doc}")?;
    } else if output.dot {
        let dot = export_dot(g, cert.labeling()).map_err(|e| Failure::input(e.to_string()))?;
        out.write_all(dot.as_bytes())?;
    } else {
        writeln!(out, "graph: {}", write_graph6(g))?;
        let verdict = match cert.verdict() {
            Verdict::Npl => "neighborhood-prime",
            Verdict::NotNpl => "not neighborhood-prime",
            Verdict::Unknown => "unknown",
        };
        writeln!(out, "verdict: {verdict}")?;
        writeln!(out, "certificate: {}", cert.reason().tag())?;
        if let Some(f) = cert.labeling() {
            writeln!(out, "labels: {f}")?;
        }
    }
    Ok(if cert.is_conclusive() {
        EXIT_OK
    } else {
        EXIT_UNKNOWN
    })
}

fn scan(
    input: Option<&PathBuf>,
    checkpoint: Option<&PathBuf>,
    config: &ScanConfig,
    out: &mut dyn Write,
) -> Outcome {
    let mut sink = io::BufWriter::new(out);
    let result = match (input.filter(|p| p.as_os_str() != "-"), checkpoint) {
        (Some(path), Some(cp)) => scan_file_resumable(path, &mut sink, config, cp),
        (Some(path), None) => {
            let file =
                File::open(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            scan_graph6_stream(BufReader::new(file), &mut sink, config)
        }
        (None, _) => scan_graph6_stream(io::stdin().lock(), &mut sink, config),
    };
    sink.flush()?;
    let summary = result.map_err(|e| match e {
        ScanError::LongRunningRequired { .. } => Failure::usage(e.to_string()),
        other => Failure::input(other.to_string()),
    })?;
    Ok(if summary.errors > 0 {
        EXIT_IO
    } else if summary.unknown > 0 {
        EXIT_UNKNOWN
    } else {
        EXIT_OK
    })
}

fn build_family(family: &FamilyCommand) -> Result<Labeled, Failure> {
    let usage = |e: &dyn std::fmt::Display| Failure::usage(e.to_string());
    match family {
        FamilyCommand::Gp { n, k, budget } => {
            label_gp(*n, *k, &budget.budget()).map_err(|e| usage(&e))
        }
        FamilyCommand::Grid { m, n } => label_grid(*m, *n).map_err(|e| usage(&e)),
        FamilyCommand::Grid3 { l, m, n, budget } => {
            label_grid3(*l, *m, *n, &budget.budget()).map_err(|e| usage(&e))
        }
        FamilyCommand::Lobster {
            reduced,
            spine,
            budget,
        } => match (reduced, spine) {
            (Some(r), _) => {
                let spec =
                    LobsterSpec::reduced(&parse_list(r, "--reduced")?).map_err(|e| usage(&e))?;
                label_reduced_lobster(&spec).map_err(|e| usage(&e))
            }
            (None, Some(s)) => {
                label_lobster_surplus(&parse_spine(s)?, &budget.budget()).map_err(|e| usage(&e))
            }
            (None, None) => Err(Failure::usage("one of --reduced or --spine is required")),
        },
        FamilyCommand::Stars { .. } => unreachable!("handled by stars"),
        FamilyCommand::Cycle { n } => {
            let g = generators::cycle(*n).map_err(|e| usage(&e))?;
            let f = label_cycle_standard(*n).map_err(|e| usage(&e))?;
            let certificate = match Certificate::npl(
                &g,
                f,
                Reason::HamiltonianEq1 {
                    cycle: (0..*n).collect(),
                },
            ) {
                Ok(c) => c,
                Err(_) => even_set_obstruction(&g, DEFAULT_OBSTRUCTION_CAP)
                    .map_err(|e| usage(&e))?
                    .unwrap_or_else(|| Certificate::unknown(Reason::Inconclusive)),
            };
            Ok(Labeled {
                graph: g,
                certificate,
            })
        }
        FamilyCommand::Union { lengths, budget } => {
            let parts = parse_list(lengths, "lengths")?
                .into_iter()
                .map(generators::cycle)
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| usage(&e))?;
            let graph = generators::union(&parts).map_err(|e| usage(&e))?;
            let certificate = certify_sufficient(&graph, &budget.budget());
            Ok(Labeled { graph, certificate })
        }
    }
}

fn stars(sizes: &str, output: &OutputArgs, out: &mut dyn Write) -> Outcome {
    let s = label_union_of_stars(&parse_list(sizes, "sizes")?)
        .map_err(|e| Failure::usage(e.to_string()))?;
    if output.json {
        let doc = serde_json::json!({
            "g6": write_graph6(&s.graph),
            "prime_labeling": s.labeling,
            "centers": s.centers,
        });
        writeln!(out, "{doc}")?;
    } else if output.dot {
        let dot =
            export_dot(&s.graph, Some(&s.labeling)).map_err(|e| Failure::input(e.to_string()))?;
        out.write_all(dot.as_bytes())?;
    } else {
        writeln!(out, "graph: {}", write_graph6(&s.graph))?;
        writeln!(out, "prime: yes")?;
        writeln!(out, "labels: {}", s.labeling)?;
    }
    Ok(EXIT_OK)
}
