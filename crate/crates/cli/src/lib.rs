//! `qext` command line: argument grammar, report types and their JSON/CSV
//! writers.
//!
//! Exit codes: `0` every check holds, `1` something was violated, `2`
//! something was indeterminate (and nothing violated), `3` usage or runtime
//! error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use qext_core::bounds::{das_bound, edge_degree_bound, merris_bound, BoundError, BoundValue};
use qext_core::constructions::{parse_construction_text, ConstructionError, ConstructionSpec, Family};
use qext_core::enumeration::{parse_graph6, parse_graph6_corpus, write_graph6, CorpusError, Graph6Error};
use qext_core::search::{maximize_q_forbidden_cycles, SearchConfig, SearchError, SearchResult};
use qext_core::spectral::{q_index, Method, SpectralError};
use qext_core::verify::{
    prop1_check, run_suite, theorem1_construction_probe, CheckError, CheckOutcome, Prop1Report, Statement,
    Status, SuiteConfig, SuiteReport,
};
use qext_core::Graph;

pub const ARTIFACT_VERSION: &str = concat!("qext ", env!("CARGO_PKG_VERSION"));

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_INDETERMINATE: i32 = 2;
pub const EXIT_ERROR: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),
    #[error("graph6 corpus: {0}")]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

#[derive(Debug, Parser)]
#[command(name = "qext", version, about = "Q-index extremal graph workbench")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON run report here.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Write a flat CSV table (one row per outcome) here.
    #[arg(long, global = true)]
    pub csv: Option<PathBuf>,
    /// Worker threads for `suite` and `search`; 0 picks the core count.
    #[arg(long, global = true, env = "QEXT_JOBS", default_value_t = 0)]
    pub jobs: usize,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, clap::Args)]
pub struct GraphInput {
    /// A graph6 string.
    #[arg(long)]
    pub graph6: Vec<String>,
    /// A graph6 file, one graph per line; `-` reads stdin.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Q-index of graph6 input (strings, a file, or stdin).
    Qindex {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 1e-11)]
        tol: f64,
    },
    /// Emit a named construction as graph6, e.g. `s_nk:n=10,k=2`.
    Construct { spec: Vec<String> },
    /// Merris, Das and edge-degree bounds next to q.
    Bounds {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Sandwich bounds around q(S_{n,k}) and q(S+_{n,k}).
    Prop1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Probe of the cycle theorem on its extremal candidates and K_n.
    Theorem1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Run statements over all graphs up to `--nmax` vertices or a corpus.
    Suite {
        #[arg(long, value_delimiter = ',', required = true)]
        statements: Vec<Statement>,
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
        k: Vec<usize>,
        /// graph6 corpus used instead of enumeration.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Hill climb on q over graphs avoiding the given cycle lengths.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        forbid: Vec<usize>,
        #[arg(long, default_value_t = 2000)]
        budget: u64,
        #[arg(long, default_value_t = 8)]
        restarts: usize,
        /// Starting graph for restart 0, e.g. `s_nk:2` (n taken from --n).
        #[arg(long)]
        seed_construction: Option<String>,
    },
}

/// A record in the report, tagged by kind.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Spectral(SpectralRecord),
    Construction(ConstructionRecord),
    Bound(BoundRecord),
    Check(CheckOutcome),
    Prop1(Prop1Report),
    Suite(SuiteReport),
    Search(SearchResult),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectralRecord {
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    pub q: f64,
    pub residual: f64,
    pub interval: (f64, f64),
    pub method: Method,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstructionRecord {
    pub spec: ConstructionSpec,
    pub label: String,
    pub order: usize,
    pub size: usize,
    /// Absent above order 62.
    pub graph6: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundRecord {
    pub graph6: String,
    pub q: f64,
    pub residual: f64,
    pub bound: BoundValue,
    /// `bound − q`.
    pub slack: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub outcomes: Vec<Outcome>,
    pub artifact_version: String,
    /// Wall-clock seconds.
    pub elapsed: f64,
}

impl RunReport {
    pub fn to_json(&self) -> Result<String, CliError> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Parses a report, rejecting unknown fields.
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Exit status implied by the outcomes.
    pub fn exit_code(&self) -> i32 {
        let statuses: Vec<Status> = self.outcomes.iter().flat_map(outcome_statuses).collect();
        if statuses.contains(&Status::Violated) {
            EXIT_VIOLATED
        } else if statuses.contains(&Status::Indeterminate) {
            EXIT_INDETERMINATE
        } else {
            EXIT_OK
        }
    }

    /// One CSV row per outcome: `kind,label,status,value,reference,note`.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<(), CliError> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["kind", "label", "status", "value", "reference", "note"])?;
        for o in &self.outcomes {
            out.write_record(csv_row(o))?;
        }
        out.flush().map_err(|source| CliError::Io {
            path: "csv".into(),
            source,
        })?;
        Ok(())
    }
}

fn status_tag(s: Status) -> &'static str {
    match s {
        Status::Holds => "holds",
        Status::EqualityCase => "equality_case",
        Status::Violated => "violated",
        Status::PreconditionUnmet => "precondition_unmet",
        Status::Indeterminate => "indeterminate",
    }
}

fn outcome_statuses(o: &Outcome) -> Vec<Status> {
    match o {
        Outcome::Check(c) => vec![c.status],
        Outcome::Prop1(p) => vec![p.status],
        Outcome::Suite(s) => {
            let mut v = Vec::new();
            if s.totals.violated > 0 {
                v.push(Status::Violated);
            }
            if s.totals.indeterminate > 0 {
                v.push(Status::Indeterminate);
            }
            v
        }
        Outcome::Search(r) if !r.feasible => vec![Status::Violated],
        Outcome::Bound(b) if b.slack < -1e-9 => vec![Status::Violated],
        _ => Vec::new(),
    }
}

fn csv_row(o: &Outcome) -> [String; 6] {
    match o {
        Outcome::Spectral(s) => [
            "spectral".into(),
            s.graph6.clone(),
            String::new(),
            s.q.to_string(),
            s.residual.to_string(),
            String::new(),
        ],
        Outcome::Construction(c) => [
            "construction".into(),
            c.label.clone(),
            String::new(),
            c.order.to_string(),
            c.size.to_string(),
            c.graph6.clone().unwrap_or_default(),
        ],
        Outcome::Bound(b) => [
            "bound".into(),
            format!("{}:{}", b.bound.name, b.graph6),
            String::new(),
            b.q.to_string(),
            b.bound.value.to_string(),
            String::new(),
        ],
        Outcome::Check(c) => [
            "check".into(),
            c.statement.to_string(),
            status_tag(c.status).into(),
            c.lhs.to_string(),
            c.rhs.to_string(),
            c.note.clone(),
        ],
        Outcome::Prop1(p) => [
            "prop1".into(),
            format!("n={},k={}", p.n, p.k),
            status_tag(p.status).into(),
            p.q_snk.to_string(),
            p.q_snk_plus.to_string(),
            p.note.clone(),
        ],
        Outcome::Suite(s) => [
            "suite".into(),
            s.statements.iter().map(Statement::to_string).collect::<Vec<_>>().join(","),
            if s.totals.violated > 0 { "violated" } else { "holds" }.into(),
            s.totals.instances.to_string(),
            s.totals.violated.to_string(),
            format!("{} graphs", s.graphs),
        ],
        Outcome::Search(r) => [
            "search".into(),
            format!("n={},forbid={:?}", r.n, r.forbidden),
            if r.feasible { "feasible" } else { "infeasible" }.into(),
            r.q.to_string(),
            r.q_interval.1.to_string(),
            r.matched_family.clone().unwrap_or_default(),
        ],
    }
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.display().to_string(),
        source,
    }
}

fn graph6_string(g: &Graph) -> Result<String, CliError> {
    Ok(String::from_utf8(write_graph6(g)?).expect("graph6 is ASCII"))
}

fn read_graphs(input: &GraphInput) -> Result<Vec<(String, Graph)>, CliError> {
    let mut out = Vec::new();
    for s in &input.graph6 {
        out.push((s.clone(), parse_graph6(s.as_bytes())?));
    }
    if let Some(path) = &input.file {
        let bytes = if path.as_os_str() == "-" {
            let mut buf = Vec::new();
            io::stdin().read_to_end(&mut buf).map_err(io_err(path))?;
            buf
        } else {
            fs::read(path).map_err(io_err(path))?
        };
        for g in parse_graph6_corpus(&bytes)? {
            out.push((graph6_string(&g)?, g));
        }
    }
    if out.is_empty() {
        return Err(CliError::Usage("no input graphs: pass --graph6 or --file".into()));
    }
    Ok(out)
}

fn parse_spec(text: &str, default_n: Option<usize>) -> Result<ConstructionSpec, CliError> {
    let (family, mut params) = parse_construction_text(text)?;
    if let Some(n) = default_n {
        if family.parameters().contains(&"n") {
            params.entry("n".into()).or_insert(n);
        }
    }
    let spec = ConstructionSpec::from_params(family, &params)?;
    spec.validate()?;
    Ok(spec)
}

struct Run {
    command: &'static str,
    parameters: BTreeMap<String, String>,
    outcomes: Vec<Outcome>,
    lines: Vec<String>,
}

impl Run {
    fn new(command: &'static str) -> Self {
        Self {
            command,
            parameters: BTreeMap::new(),
            outcomes: Vec::new(),
            lines: Vec::new(),
        }
    }

    fn param(&mut self, key: &str, value: impl ToString) {
        self.parameters.insert(key.to_owned(), value.to_string());
    }
}

fn execute(cli: &Cli) -> Result<Run, CliError> {
    let mut run;
    match &cli.command {
        Command::Qindex { input, tol } => {
            run = Run::new("qindex");
            run.param("tol", tol);
            for (label, g) in read_graphs(input)? {
                let r = q_index(&g, *tol)?;
                run.lines.push(format!("{label}\tq = {:.12}\tresidual = {:.3e}", r.q, r.residual));
                run.outcomes.push(Outcome::Spectral(SpectralRecord {
                    graph6: label,
                    order: g.order(),
                    size: g.size(),
                    q: r.q,
                    residual: r.residual,
                    interval: r.interval(),
                    method: r.method,
                }));
            }
        }
        Command::Construct { spec } => {
            run = Run::new("construct");
            if spec.is_empty() {
                let families: Vec<&str> = Family::ALL.iter().map(|f| f.tag()).collect();
                return Err(CliError::Usage(format!("construct needs a spec; families: {}", families.join(", "))));
            }
            run.param("spec", spec.join(" "));
            for text in spec {
                let spec = parse_spec(text, None)?;
                let g = spec.build()?;
                let graph6 = if g.order() <= qext_core::enumeration::MAX_GRAPH6_ORDER {
                    Some(graph6_string(&g)?)
                } else {
                    None
                };
                run.lines.push(match &graph6 {
                    Some(s) => s.clone(),
                    None => format!("{spec}: order {} exceeds graph6 range; see the JSON report", g.order()),
                });
                run.outcomes.push(Outcome::Construction(ConstructionRecord {
                    label: spec.to_string(),
                    spec,
                    order: g.order(),
                    size: g.size(),
                    graph6,
                }));
            }
        }
        Command::Bounds { input } => {
            run = Run::new("bounds");
            for (label, g) in read_graphs(input)? {
                let r = q_index(&g, 1e-11)?;
                run.lines.push(format!("{label}\tq = {:.12}", r.q));
                for b in [merris_bound(&g)?, das_bound(&g)?, edge_degree_bound(&g)?] {
                    run.lines.push(format!("  {:<12} {:.12}\tslack {:.3e}", b.name.to_string(), b.value, b.value - r.q));
                    run.outcomes.push(Outcome::Bound(BoundRecord {
                        graph6: label.clone(),
                        q: r.q,
                        residual: r.residual,
                        slack: b.value - r.q,
                        bound: b,
                    }));
                }
            }
        }
        Command::Prop1 { n, k } => {
            run = Run::new("prop1");
            run.param("n", n);
            run.param("k", k);
            let r = prop1_check(*n, *k)?;
            run.lines.push(format!(
                "{}: {:.9} < q(S) = {:.9} < q(S+) = {:.9} < {:.9} {}",
                status_tag(r.status),
                r.lower,
                r.q_snk,
                r.q_snk_plus,
                r.upper,
                r.note
            ));
            run.outcomes.push(Outcome::Prop1(r));
        }
        Command::Theorem1 { n, k } => {
            run = Run::new("theorem1");
            run.param("n", n);
            run.param("k", k);
            let out = theorem1_construction_probe(*n, *k)?;
            run.lines.push(format!("{}: {} vs {} {}", status_tag(out.status), out.lhs, out.rhs, out.note));
            run.outcomes.push(Outcome::Check(out));
        }
        Command::Suite {
            statements,
            nmax,
            k,
            corpus,
        } => {
            run = Run::new("suite");
            let mut cfg = SuiteConfig::new(statements.clone(), *nmax, k.clone());
            cfg.seed = cli.seed;
            cfg.jobs = cli.jobs;
            run.param("statements", statements.iter().map(Statement::to_string).collect::<Vec<_>>().join(","));
            run.param("k", k.iter().map(usize::to_string).collect::<Vec<_>>().join(","));
            run.param("seed", cli.seed);
            if let Some(path) = corpus {
                cfg.corpus = Some(parse_graph6_corpus(&fs::read(path).map_err(io_err(path))?)?);
                run.param("corpus", path.display());
            } else {
                run.param("nmax", nmax);
            }
            let report = run_suite(&cfg)?;
            for (st, t) in &report.per_statement {
                run.lines.push(format!(
                    "{st:<18} instances {:>8}  holds {:>8}  equality {:>6}  violated {:>4}  unmet {:>8}  indeterminate {:>4}",
                    t.instances, t.holds, t.equality_case, t.violated, t.precondition_unmet, t.indeterminate
                ));
            }
            run.lines.push(format!("{} graphs, violated = {}", report.graphs, report.totals.violated));
            run.outcomes.push(Outcome::Suite(report));
        }
        Command::Search {
            n,
            forbid,
            budget,
            restarts,
            seed_construction,
        } => {
            run = Run::new("search");
            let mut cfg = SearchConfig::new(*n, forbid.iter().copied());
            cfg.budget = *budget;
            cfg.restarts = *restarts;
            cfg.seed = cli.seed;
            cfg.jobs = cli.jobs;
            run.param("n", n);
            run.param("forbid", forbid.iter().map(usize::to_string).collect::<Vec<_>>().join(","));
            run.param("budget", budget);
            run.param("restarts", restarts);
            run.param("seed", cli.seed);
            if let Some(text) = seed_construction {
                let spec = parse_spec(text, Some(*n))?;
                run.param("seed_construction", spec);
                cfg.seed_graph = Some(spec.build()?);
            }
            let r = maximize_q_forbidden_cycles(&cfg)?;
            let g6 = if r.best.order() <= qext_core::enumeration::MAX_GRAPH6_ORDER {
                graph6_string(&r.best)?
            } else {
                String::from("-")
            };
            run.lines.push(format!(
                "{g6}\tq = {:.12}\tfeasible = {}\tmatched = {}\tties = {}",
                r.q,
                r.feasible,
                r.matched_family.as_deref().unwrap_or("-"),
                r.ties.len()
            ));
            run.outcomes.push(Outcome::Search(r));
        }
    }
    Ok(run)
}

/// Runs one command line (including the program name) and returns the exit
/// code. Output goes to `stdout`, diagnostics to `stderr`.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_ERROR
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };
    match run_cli(&cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_ERROR
        }
    }
}

/// Same as [`run_with`] on the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut io::stdout().lock(), &mut io::stderr().lock())
}

fn run_cli(cli: &Cli, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let start = Instant::now();
    let run = execute(cli)?;
    let report = RunReport {
        command: run.command.into(),
        parameters: run.parameters,
        outcomes: run.outcomes,
        artifact_version: ARTIFACT_VERSION.into(),
        elapsed: start.elapsed().as_secs_f64(),
    };
    let console = Path::new("stdout");
    for line in &run.lines {
        writeln!(stdout, "{line}").map_err(io_err(console))?;
    }
    if let Some(path) = &cli.out {
        let mut json = report.to_json()?;
        json.push('\n');
        fs::write(path, json).map_err(io_err(path))?;
    }
    if let Some(path) = &cli.csv {
        let file = fs::File::create(path).map_err(io_err(path))?;
        report.write_csv(file)?;
    }
    Ok(report.exit_code())
}
