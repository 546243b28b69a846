//! The `iasi` command-line tool.
//!
//! Exit codes: 0 on success (a weak labeling for `verify`, no refuted rows
//! for `check`), 1 when `verify` finds a non-weak labeling or `check` has a
//! REFUTED row, 2 on usage, input or limit errors.

pub mod expr;

use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;
use weak_iasi::catalog::{sweep, CatalogError, ConventionChoice, TheoremId};
use weak_iasi::io::{read_graph, write_graph};
use weak_iasi::label::{is_iasi, is_weak_iasi, mono_indexed_edges, LabelError};
use weak_iasi::sparing::{mono_count_spectrum, sparing_exact, SparingError, ORACLE_LIMIT};
use weak_iasi::{Graph, Labeling};

use crate::expr::{eval_expr, parse_expr, EvalError, ParseError};

#[derive(Parser, Debug)]
#[command(
    name = "iasi",
    version,
    about = "Weak IASI labelings and sparing numbers"
)]
pub struct Cli {
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Output format: json|text for solve, csv|md for check.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
    Md,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a graph expression and print it in graph text format.
    Gen { expr: String },
    /// Compute the sparing number with a certificate labeling.
    Solve {
        expr: String,
        /// Also write the certificate labeling to this file.
        #[arg(long)]
        labeling: Option<PathBuf>,
    },
    /// Check a labeling file against a graph file.
    Verify { graph: PathBuf, labeling: PathBuf },
    /// List every achievable mono-indexed edge count.
    Spectrum { expr: String },
    /// Sweep a catalog claim over parameter ranges.
    Check {
        theorem: String,
        /// `name=a..b` or `name=a`; repeat for each parameter.
        #[arg(long = "param", value_name = "NAME=RANGE")]
        params: Vec<String>,
        #[arg(long, default_value = "vertices")]
        convention: String,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Solver(#[from] SparingError),
    #[error(transparent)]
    Label(#[from] LabelError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.display().to_string(),
            source,
        }
    }
}

/// Text to emit plus the exit code it implies.
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn graph_from(expr: &str, notes: &mut Vec<String>) -> Result<Graph, CliError> {
    Ok(eval_expr(&parse_expr(expr)?, notes)?)
}

fn format_for(cmd: &str, format: Option<Format>, allowed: &[Format]) -> Result<Format, CliError> {
    match format {
        None => Ok(allowed[0]),
        Some(f) if allowed.contains(&f) => Ok(f),
        Some(f) => Err(CliError::Usage(format!(
            "{cmd} does not support --format {}",
            f.to_possible_value()
                .expect("no skipped variants")
                .get_name()
        ))),
    }
}

/// Parses `name=a..b` (inclusive) or `name=a`.
pub fn parse_param(spec: &str) -> Result<(String, RangeInclusive<u32>), CliError> {
    let bad = || {
        CliError::Usage(format!(
            "bad --param {spec:?}; expected name=a..b or name=a"
        ))
    };
    let (name, range) = spec.split_once('=').ok_or_else(bad)?;
    let num = |s: &str| s.trim().parse::<u32>().map_err(|_| bad());
    let (lo, hi) = match range.split_once("..") {
        Some((a, b)) => (num(a)?, num(b)?),
        None => {
            let x = num(range)?;
            (x, x)
        }
    };
    if name.is_empty() || lo > hi {
        return Err(bad());
    }
    Ok((name.trim().to_string(), lo..=hi))
}

fn execute(cli: &Cli, notes: &mut Vec<String>) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Gen { expr } => {
            format_for("gen", cli.format, &[Format::Text])?;
            Ok(Outcome::ok(write_graph(&graph_from(expr, notes)?)))
        }
        Command::Solve { expr, labeling } => {
            let format = format_for("solve", cli.format, &[Format::Json, Format::Text])?;
            let g = graph_from(expr, notes)?;
            let cert = sparing_exact(&g)?;
            if let Some(path) = labeling {
                std::fs::write(path, cert.labeling.to_json() + "\n")
                    .map_err(|e| CliError::io(path, e))?;
            }
            let text = match format {
                Format::Json => cert.to_json() + "\n",
                _ => {
                    let mono: Vec<String> =
                        cert.mono_edges.iter().map(ToString::to_string).collect();
                    let mut out = format!(
                        "sparing number: {}\nexpanded: {}\nmono-indexed edges: {}\nlabeling:\n",
                        cert.value,
                        cert.pattern,
                        mono.join(" ")
                    );
                    for (v, set) in cert.labeling.iter() {
                        out.push_str(&format!("  {v} {set}\n"));
                    }
                    out
                }
            };
            Ok(Outcome::ok(text))
        }
        Command::Verify { graph, labeling } => {
            format_for("verify", cli.format, &[Format::Text])?;
            let g = read_graph(&read_file(graph)?).map_err(|source| EvalError::Format {
                path: graph.display().to_string(),
                source,
            })?;
            let f = Labeling::from_json(&read_file(labeling)?)?;
            let iasi = is_iasi(&g, &f)?;
            let weak = is_weak_iasi(&g, &f)?;
            let mono: Vec<String> = mono_indexed_edges(&g, &f)?
                .iter()
                .map(ToString::to_string)
                .collect();
            let mut text = format!(
                "iasi: {}\nweak: {}\nmono-indexed edges ({}): {}\n",
                iasi.verdict(),
                weak.verdict(),
                mono.len(),
                mono.join(" ")
            );
            for v in &weak.violations {
                text.push_str(&format!("violation: {v}\n"));
            }
            let code = if weak.verdict() { 0 } else { 1 };
            Ok(Outcome { text, code })
        }
        Command::Spectrum { expr } => {
            format_for("spectrum", cli.format, &[Format::Text])?;
            let g = graph_from(expr, notes)?;
            if g.vertex_count() > ORACLE_LIMIT {
                return Err(SparingError::TooLarge {
                    size: g.vertex_count(),
                    limit: ORACLE_LIMIT,
                }
                .into());
            }
            let counts: Vec<String> = mono_count_spectrum(&g)?
                .iter()
                .map(ToString::to_string)
                .collect();
            Ok(Outcome::ok(counts.join(" ") + "\n"))
        }
        Command::Check {
            theorem,
            params,
            convention,
        } => {
            let format = format_for("check", cli.format, &[Format::Csv, Format::Md])?;
            let id: TheoremId = theorem.parse()?;
            let convention: ConventionChoice = convention.parse()?;
            let ranges = params
                .iter()
                .map(|p| parse_param(p))
                .collect::<Result<Vec<_>, _>>()?;
            let borrowed: Vec<(&str, RangeInclusive<u32>)> = ranges
                .iter()
                .map(|(k, r)| (k.as_str(), r.clone()))
                .collect();
            let table = sweep(id, &borrowed, convention)?;
            let summary = table.summary();
            let text = match format {
                Format::Md => table.to_markdown(),
                _ => table.to_csv(),
            };
            let code = if summary.failed > 0 {
                2
            } else if summary.refuted > 0 {
                1
            } else {
                0
            };
            Ok(Outcome { text, code })
        }
    }
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(rendered.as_bytes())
            } else {
                stderr.write_all(rendered.as_bytes())
            };
            return if code == 0 { 0 } else { 2 };
        }
    };

    let mut notes = Vec::new();
    let result = execute(&cli, &mut notes);
    for note in &notes {
        let _ = writeln!(stderr, "{note}");
    }
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
    };

    let written = match &cli.output {
        Some(path) => std::fs::write(path, &outcome.text).map_err(|e| CliError::io(path, e)),
        None => stdout
            .write_all(outcome.text.as_bytes())
            .map_err(|e| CliError::io(Path::new("<stdout>"), e)),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return 2;
    }
    outcome.code
}
