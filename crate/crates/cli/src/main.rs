//! `lpa`: analyze Leavitt path algebras of finite graphs from the command line.

use std::fmt::Display;
use std::fs;
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::sync::Arc;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use lpa_core::expr::evaluate;
use lpa_core::random::{random_element, rng};
use lpa_core::report::AnalysisReport;
use lpa_core::structure::{edge_matrix, is_simple, quotient_graph, HSubset, QuotientMap};
use lpa_core::{ExprError, Field, Graph, GraphError, LeavittAlgebra, StructureError};

/// Random products checked against the quotient map when `analyze` finds a
/// nontrivial hereditary saturated subset.
const QUOTIENT_CHECKS: usize = 25;

#[derive(Parser, Debug)]
#[command(name = "lpa", version, about = "Exact computations in Leavitt path algebras")]
struct Cli {
    /// Coefficient field: `q` for the rationals or `gf:p` for a prime p.
    #[arg(long, global = true, default_value = "q", value_parser = parse_field)]
    field: Field,
    /// Longest closed simple path listed by the text report.
    #[arg(long, global = true, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
    csp_bound: u32,
    /// Output format; `eval` defaults to text, everything else to json.
    #[arg(long, global = true)]
    format: Option<Format>,
    /// Seed for the randomized self-checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide simplicity and report the structure of a graph.
    Analyze { graph: PathBuf },
    /// Evaluate an expression to canonical form.
    Eval { graph: PathBuf, expr: String },
    /// Emit the quotient graph by a hereditary saturated vertex set.
    Quotient {
        graph: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        subset: Vec<String>,
    },
    /// Analyze every `.json` graph in a directory.
    Batch { dir: PathBuf },
    /// Print the edge matrix.
    Matrix { graph: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn parse_field(s: &str) -> Result<Field, String> {
    if s.eq_ignore_ascii_case("q") {
        return Ok(Field::Rationals);
    }
    let p = s
        .strip_prefix("gf:")
        .ok_or_else(|| format!("expected `q` or `gf:p`, got {s:?}"))?;
    let p = u64::from_str(p).map_err(|e| format!("bad prime {p:?}: {e}"))?;
    Field::prime(p).map_err(|e| e.to_string())
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Parse(String),
    Semantic(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Semantic(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Parse(m) | Failure::Semantic(m) => m,
        }
    }

    fn semantic(e: impl Display) -> Failure {
        Failure::Semantic(e.to_string())
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Failure {
        if e.is_parse() {
            Failure::Parse(e.to_string())
        } else {
            Failure::Semantic(e.to_string())
        }
    }
}

impl From<ExprError> for Failure {
    fn from(e: ExprError) -> Failure {
        if e.is_parse() {
            Failure::Parse(e.to_string())
        } else {
            Failure::Semantic(e.to_string())
        }
    }
}

impl From<StructureError> for Failure {
    fn from(e: StructureError) -> Failure {
        Failure::semantic(e)
    }
}

fn load_graph(path: &FsPath) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(Graph::from_json(&text)?)
}

fn graph_name(path: &FsPath) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

struct Config {
    field: Field,
    csp_bound: usize,
    format: Option<Format>,
    seed: u64,
}

impl Config {
    fn format_or(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }
}

/// Builds the report and, when a nontrivial hereditary saturated subset was
/// found, checks the quotient map on random products.
fn analyze(cfg: &Config, path: &FsPath) -> Result<(AnalysisReport, Option<usize>), Failure> {
    let g = load_graph(path)?;
    let alg = LeavittAlgebra::new(g, cfg.field);
    let verdict = is_simple(&alg);
    let report = AnalysisReport::from_verdict(&graph_name(path), &alg, &verdict, cfg.csp_bound);
    let checked = match &verdict.condition_i.witness {
        Some(h) => Some(check_quotient_map(cfg, &alg, h)?),
        None => None,
    };
    Ok((report, checked))
}

fn check_quotient_map(cfg: &Config, alg: &Arc<LeavittAlgebra>, h: &HSubset) -> Result<usize, Failure> {
    let map = QuotientMap::new(alg, h)?;
    let mut r = rng(cfg.seed);
    for _ in 0..QUOTIENT_CHECKS {
        let a = random_element(&mut r, alg, 3, 3);
        let b = random_element(&mut r, alg, 3, 3);
        let lhs = map.apply(&(&a * &b))?;
        let rhs = &map.apply(&a)? * &map.apply(&b)?;
        if lhs != rhs {
            return Err(Failure::Semantic(format!(
                "quotient map is not multiplicative on ({a}) . ({b})"
            )));
        }
    }
    Ok(QUOTIENT_CHECKS)
}

fn run_analyze(cfg: &Config, path: &FsPath) -> Result<String, Failure> {
    let (report, checked) = analyze(cfg, path)?;
    Ok(match cfg.format_or(Format::Json) {
        Format::Json => report.to_json(),
        Format::Text => {
            let mut out = report.to_string();
            if let Some(n) = checked {
                out.push_str(&format!("\nquotient map: multiplicative on {n} random products"));
            }
            out
        }
    })
}

fn run_eval(cfg: &Config, path: &FsPath, src: &str) -> Result<String, Failure> {
    let alg = LeavittAlgebra::new(load_graph(path)?, cfg.field);
    let a = evaluate(src, &alg)?;
    Ok(match cfg.format_or(Format::Text) {
        Format::Text => a.to_string(),
        Format::Json => serde_json::to_string_pretty(&json!({
            "graph": graph_name(path),
            "field": cfg.field.to_string(),
            "expression": src,
            "element": a.to_string(),
        }))
        .expect("serializes"),
    })
}

fn run_quotient(path: &FsPath, subset: &[String]) -> Result<String, Failure> {
    let g = load_graph(path)?;
    let names: Vec<&str> = subset.iter().map(String::as_str).collect();
    let h = HSubset::from_names(&g, &names)?;
    Ok(quotient_graph(&g, &h)?.to_json())
}

fn run_matrix(cfg: &Config, path: &FsPath) -> Result<String, Failure> {
    let g = load_graph(path)?;
    let m = edge_matrix(&g)?;
    let edges: Vec<&str> = g.edges().map(|e| g.edge_name(e)).collect();
    Ok(match cfg.format_or(Format::Json) {
        Format::Json => serde_json::to_string_pretty(&json!({ "edges": edges, "matrix": m.rows() })).expect("serializes"),
        Format::Text => {
            let width = edges.iter().map(|e| e.len()).max().unwrap_or(0);
            let mut lines = vec![format!("{:width$} {}", "", edges.join(" "))];
            for (e, row) in edges.iter().zip(m.rows()) {
                let cells: Vec<String> = row
                    .iter()
                    .zip(&edges)
                    .map(|(x, f)| format!("{x:>w$}", w = f.len()))
                    .collect();
                lines.push(format!("{e:width$} {}", cells.join(" ")));
            }
            lines.join("\n")
        }
    })
}

fn run_batch(cfg: &Config, dir: &FsPath) -> Result<(String, u8), Failure> {
    let entries = fs::read_dir(dir).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();

    let mut worst = 0u8;
    let mut reports = Vec::new();
    let mut summary = Vec::new();
    for file in &files {
        let name = file.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        match analyze(cfg, file) {
            Ok((report, _)) => {
                summary.push(json!({
                    "file": name,
                    "simple": report.simple,
                    "condition_L": report.condition_l.holds,
                    "condition_i": report.condition_i.holds,
                    "error": null,
                }));
                reports.push(report);
            }
            Err(f) => {
                worst = worst.max(f.code());
                summary.push(json!({
                    "file": name,
                    "simple": null,
                    "condition_L": null,
                    "condition_i": null,
                    "error": f.message(),
                }));
            }
        }
    }

    let out = match cfg.format_or(Format::Json) {
        Format::Json => serde_json::to_string_pretty(&json!({ "reports": reports, "summary": summary })).expect("serializes"),
        Format::Text => {
            let mut out = String::new();
            for r in &reports {
                out.push_str(&r.to_string());
                out.push_str("\n\n");
            }
            let width = summary.iter().map(|s| s["file"].as_str().unwrap_or("").len()).max().unwrap_or(4).max(4);
            out.push_str(&format!("{:width$}  simple  (L)    (i)", "file"));
            for s in &summary {
                let cell = |k: &str| match &s[k] {
                    serde_json::Value::Bool(b) => b.to_string(),
                    _ => "-".to_string(),
                };
                let mut line = format!(
                    "{:width$}  {:6}  {:5}  {:5}",
                    s["file"].as_str().unwrap_or(""),
                    cell("simple"),
                    cell("condition_L"),
                    cell("condition_i"),
                );
                if let Some(e) = s["error"].as_str() {
                    line.push_str(&format!("  error: {e}"));
                }
                out.push('\n');
                out.push_str(line.trim_end());
            }
            out
        }
    };
    Ok((out, worst))
}

fn run(cli: Cli) -> Result<(String, u8), Failure> {
    let cfg = Config {
        field: cli.field,
        csp_bound: cli.csp_bound as usize,
        format: cli.format,
        seed: cli.seed,
    };
    let out = match &cli.command {
        Command::Analyze { graph } => run_analyze(&cfg, graph)?,
        Command::Eval { graph, expr } => run_eval(&cfg, graph, expr)?,
        Command::Quotient { graph, subset } => run_quotient(graph, subset)?,
        Command::Matrix { graph } => run_matrix(&cfg, graph)?,
        Command::Batch { dir } => return run_batch(&cfg, dir),
    };
    Ok((out, 0))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => e.exit(),
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok((out, code)) => {
            println!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
