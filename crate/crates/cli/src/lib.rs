//! The `unicyclic-ga` command line: argument parsing, dispatch and rendering.
//!
//! Exit codes: 0 success, 1 usage error, 2 input error, 3 verification failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use unicyclic_ga::enumerate::{verify_bounds, BoundReport, MAX_ORDER, MIN_ORDER};
use unicyclic_ga::structure::find_cycle;
use unicyclic_ga::tables::{ComparisonTable, TableKind};
use unicyclic_ga::transform::SmallOrderCase;
use unicyclic_ga::{
    ag_index, edge_contributions, ga_index, is_unicyclic, make_family, parse_edge_list,
    reduction_pipeline, EdgeContribution, FamilySpec, Graph, TransformError,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "unicyclic-ga",
    version,
    about = "GA index of unicyclic graphs: compute, build extremal families, reduce, verify bounds"
)]
pub struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Tolerance for bound checks
    #[arg(long, default_value_t = 1e-9, global = true)]
    pub tol: f64,
    /// Print edge lists with every reduction step
    #[arg(long, global = true)]
    pub trace: bool,
    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// GA, AG and per-edge contributions of an edge-list file
    Compute { path: PathBuf },
    /// Build a member of an extremal family
    Family {
        #[command(subcommand)]
        family: FamilyArg,
    },
    /// Comparison tables: 1 for A/B, 2 for C/D
    Tables {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        /// Row range, e.g. 2..7 (inclusive)
        #[arg(long)]
        rows: Option<String>,
        /// Column range, e.g. 2..4 (inclusive)
        #[arg(long)]
        cols: Option<String>,
    },
    /// Reduce a unicyclic graph to an extremal family member
    Reduce { path: PathBuf },
    /// Check the GA bounds over all unicyclic graphs of order n (or a..b)
    Verify { orders: String },
}

#[derive(Debug, Clone, Copy, Subcommand)]
pub enum FamilyArg {
    /// The cycle C_n
    Cycle { n: usize },
    /// S_{n;3}: n-3 pendants on one triangle vertex
    Sn3 { n: usize },
    /// S_{p,q;4}: p and q pendants on opposite vertices of a 4-cycle
    Spq4 { p: usize, q: usize },
    /// S_{r,k;3}: r and k pendants on two triangle vertices
    Srk3 { r: usize, k: usize },
}

impl From<FamilyArg> for FamilySpec {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Cycle { n } => FamilySpec::Cycle { n },
            FamilyArg::Sn3 { n } => FamilySpec::Sn3 { n },
            FamilyArg::Spq4 { p, q } => FamilySpec::Spq4 { p, q },
            FamilyArg::Srk3 { r, k } => FamilySpec::Srk3 { r, k },
        }
    }
}

/// A failed command and the exit code it maps to.
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
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

/// What a command produced: the rendered body, warnings for stderr, and
/// whether a verification failed.
struct Output {
    body: String,
    warnings: Vec<String>,
    verified: bool,
}

impl Output {
    fn plain(body: String) -> Self {
        Output {
            body,
            warnings: Vec::new(),
            verified: true,
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(&cli) {
        Ok(out) => {
            for w in &out.warnings {
                let _ = writeln!(stderr, "warning: {w}");
            }
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &out.body)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => stdout.write_all(out.body.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_INPUT;
            }
            if out.verified {
                EXIT_OK
            } else {
                let _ = writeln!(stderr, "verification failed");
                EXIT_VERIFY
            }
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Compute { path } => compute(path, cli.format),
        Command::Family { family } => family_cmd((*family).into(), cli.format),
        Command::Tables { which, rows, cols } => {
            tables(*which, rows.as_deref(), cols.as_deref(), cli.format)
        }
        Command::Reduce { path } => reduce(path, cli.format, cli.trace),
        Command::Verify { orders } => verify(orders, cli.tol, cli.format),
    }
}

pub fn round9(x: f64) -> f64 {
    (x * 1e9).round() / 1e9
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    parse_edge_list(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

/// The `compute` report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComputeReport {
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    pub unicyclic: bool,
    pub girth: Option<usize>,
    pub ga: f64,
    pub ag: f64,
    /// Sorted by degree ratio, then by edge.
    pub edges: Vec<EdgeContribution>,
}

fn compute(path: &Path, format: Format) -> Result<Output, Failure> {
    let g = read_graph(path)?;
    let ga = ga_index(&g).map_err(|e| Failure::input(e.to_string()))?;
    let ag = ag_index(&g).map_err(|e| Failure::input(e.to_string()))?;
    let unicyclic = is_unicyclic(&g);
    let mut edges = edge_contributions(&g);
    edges.sort_by(|a, b| a.rd.total_cmp(&b.rd).then(a.edge.cmp(&b.edge)));
    for e in &mut edges {
        e.rd = round9(e.rd);
        e.ga = round9(e.ga);
    }
    let report = ComputeReport {
        n: g.order(),
        m: g.size(),
        connected: g.is_connected(),
        unicyclic,
        girth: unicyclic.then(|| find_cycle(&g).expect("unicyclic").girth()),
        ga: round9(ga),
        ag: round9(ag),
        edges,
    };
    let body = match format {
        Format::Json => to_json(&report),
        Format::Csv => {
            let mut s = String::from("u,v,du,dv,rd,ga\n");
            for e in &report.edges {
                writeln!(s, "{},{},{},{},{:.9},{:.9}", e.edge.0, e.edge.1, e.du, e.dv, e.rd, e.ga)
                    .unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "n = {}, m = {}", report.n, report.m).unwrap();
            match report.girth {
                Some(g) => writeln!(s, "unicyclic, girth {g}").unwrap(),
                None => writeln!(s, "not unicyclic").unwrap(),
            }
            writeln!(s, "GA = {:.9}", report.ga).unwrap();
            writeln!(s, "AG = {:.9}", report.ag).unwrap();
            writeln!(s, "{:>4} {:>4} {:>3} {:>3} {:>12} {:>12}", "u", "v", "du", "dv", "rd", "ga")
                .unwrap();
            for e in &report.edges {
                writeln!(
                    s,
                    "{:>4} {:>4} {:>3} {:>3} {:>12.9} {:>12.9}",
                    e.edge.0, e.edge.1, e.du, e.dv, e.rd, e.ga
                )
                .unwrap();
            }
            s
        }
    };
    let mut out = Output::plain(body);
    if !report.connected {
        out.warnings.push("input graph is disconnected".into());
    }
    Ok(out)
}

/// The `family` report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub spec: FamilySpec,
    pub name: String,
    pub n: usize,
    pub ga_closed_form: f64,
    pub ga_summed: f64,
    pub graph: Graph,
}

fn family_cmd(spec: FamilySpec, format: Format) -> Result<Output, Failure> {
    let g = make_family(spec).map_err(|e| Failure::usage(e.to_string()))?;
    let closed = spec.closed_form_ga().map_err(|e| Failure::usage(e.to_string()))?;
    let report = FamilyReport {
        spec,
        name: spec.to_string(),
        n: g.order(),
        ga_closed_form: round9(closed),
        ga_summed: round9(ga_index(&g).expect("families have edges")),
        graph: g,
    };
    let body = match format {
        Format::Json => to_json(&report),
        Format::Csv => return Err(Failure::usage("family has no csv rendering; use text or json")),
        Format::Text => {
            let edges: Vec<String> = report
                .graph
                .edges()
                .iter()
                .map(|(u, v)| format!("{u}-{v}"))
                .collect();
            format!(
                "{} (n = {})\nGA (closed form) = {:.9}\nGA (summed)      = {:.9}\nedges: {}\n",
                report.name,
                report.n,
                report.ga_closed_form,
                report.ga_summed,
                edges.join(" ")
            )
        }
    };
    Ok(Output::plain(body))
}

/// Parses `a..b` or `a..=b` (both inclusive) or a single number.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("'{t}' is not a non-negative integer"))
    };
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Ok(num(a)?..=num(b)?)
        }
        None => {
            let n = num(s)?;
            Ok(n..=n)
        }
    }
}

/// Table JSON: cells rounded to four decimals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableReport {
    pub table: u8,
    pub header: Vec<String>,
    pub rows: Vec<TableRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub index: usize,
    /// Pairs per column; `null` where the functions are undefined.
    pub values: Vec<Option<(f64, f64)>>,
}

fn round4(x: f64) -> f64 {
    (x * 1e4).round() / 1e4
}

fn tables(which: u8, rows: Option<&str>, cols: Option<&str>, format: Format) -> Result<Output, Failure> {
    let kind = if which == 1 { TableKind::AB } else { TableKind::CD };
    let rows = rows.map(parse_range).transpose().map_err(Failure::usage)?;
    let cols = cols.map(parse_range).transpose().map_err(Failure::usage)?;
    let table = ComparisonTable::build(
        kind,
        rows.unwrap_or_else(|| kind.default_rows()),
        cols.unwrap_or_else(|| kind.default_cols()),
    )
    .map_err(|e| Failure::usage(e.to_string()))?;
    let body = match format {
        Format::Csv => table.to_csv(),
        Format::Text => table.to_text(),
        Format::Json => to_json(&TableReport {
            table: which,
            header: table.header(),
            rows: table
                .rows
                .iter()
                .zip(&table.cells)
                .map(|(&index, cells)| TableRow {
                    index,
                    values: cells.iter().map(|c| c.map(|(a, b)| (round4(a), round4(b)))).collect(),
                })
                .collect(),
        }),
    };
    Ok(Output::plain(body))
}

/// Rendering of orders 3 and 4, which are settled by inspection.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SmallOrderReport {
    pub n: usize,
    pub case: SmallOrderCase,
    pub description: String,
    pub ga: f64,
}

fn reduce(path: &Path, format: Format, verbose: bool) -> Result<Output, Failure> {
    let g = read_graph(path)?;
    if format == Format::Csv {
        return Err(Failure::usage("reduce has no csv rendering; use text or json"));
    }
    match reduction_pipeline(&g) {
        Ok(trace) => Ok(Output::plain(match format {
            Format::Json => to_json(&trace),
            _ => trace.to_text(verbose),
        })),
        Err(TransformError::SmallOrder(case)) => {
            let report = SmallOrderReport {
                n: g.order(),
                case,
                description: case.description().to_string(),
                ga: round9(ga_index(&g).expect("unicyclic graphs have edges")),
            };
            Ok(Output::plain(match format {
                Format::Json => to_json(&report),
                _ => format!(
                    "n = {}: no reduction needed\n{}\nGA = {:.9}\n",
                    report.n, report.description, report.ga
                ),
            }))
        }
        Err(e) => Err(Failure::input(e.to_string())),
    }
}

fn verify(orders: &str, tol: f64, format: Format) -> Result<Output, Failure> {
    let range = parse_range(orders).map_err(Failure::usage)?;
    let (lo, hi) = (*range.start(), *range.end());
    if lo > hi {
        return Err(Failure::usage(format!("empty range {orders}")));
    }
    if lo < MIN_ORDER {
        return Err(Failure::usage(format!("orders start at {MIN_ORDER}, got {lo}")));
    }
    if hi > MAX_ORDER {
        return Err(Failure::usage(format!(
            "range too large: orders above {MAX_ORDER} are not enumerated, got {hi}"
        )));
    }
    if !(tol >= 0.0 && tol.is_finite()) {
        return Err(Failure::usage(format!("tolerance must be finite and non-negative, got {tol}")));
    }
    let reports: Vec<BoundReport> = range
        .map(|n| verify_bounds(n, tol).expect("order checked above"))
        .map(|mut r| {
            r.lower_bound = round9(r.lower_bound);
            r.min_ga = round9(r.min_ga);
            r.max_ga = round9(r.max_ga);
            for v in &mut r.violations {
                v.ga = round9(v.ga);
            }
            r
        })
        .collect();
    let verified = reports.iter().all(BoundReport::passed);
    let body = match format {
        Format::Json => to_json(&reports),
        Format::Text => BoundReport::to_table(&reports),
        Format::Csv => {
            let mut s = String::from(
                "n,count,lower_bound,min_ga,max_ga,upper_bound,min_witnesses,min_unique,violations\n",
            );
            for r in &reports {
                writeln!(
                    s,
                    "{},{},{:.9},{:.9},{:.9},{:.9},{},{},{}",
                    r.n,
                    r.count,
                    r.lower_bound,
                    r.min_ga,
                    r.max_ga,
                    r.upper_bound,
                    r.min_witnesses.len(),
                    r.min_unique,
                    r.violations.len()
                )
                .unwrap();
            }
            s
        }
    };
    Ok(Output {
        body,
        warnings: Vec::new(),
        verified,
    })
}
