//! Command-line front end: JSON documents, SVG output and the `bar1vis` tool.

pub mod format;
pub mod svg;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use bar1vis::{draw, draw_maximal_outer, edge_bound_report, generate, validate, Family};

pub use format::{
    parse_drawing, parse_graph, serialize_drawing, serialize_graph, DrawingDocument, FormatError,
    GraphDocument, SCHEMA_VERSION,
};
pub use svg::{render_svg, SvgOptions};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format {
        path: PathBuf,
        #[source]
        source: FormatError,
    },
    #[error(transparent)]
    Core(#[from] bar1vis::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Parser)]
#[command(
    name = "bar1vis",
    version,
    about = "Bar 1-visibility drawings of 1-planar graph families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyName {
    DiagonalGrid,
    RecursiveQuadrangle,
    PdwEven,
    PdwOdd,
    QuadrangleChain,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Algorithm {
    /// Pick by the graph's family, or maximal outer when only an outer order is given.
    Auto,
    MaximalOuter,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a family graph as JSON.
    Generate {
        #[arg(long, value_enum)]
        family: FamilyName,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        optimal: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute a bar 1-visibility drawing for a graph file.
    Draw {
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "auto")]
        algorithm: Algorithm,
    },
    /// Check a drawing against a graph; exits 2 when the drawing is not valid.
    Validate {
        graph: PathBuf,
        drawing: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Render a drawing as SVG.
    Render {
        drawing: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, default_value_t = 20)]
        unit: u32,
        #[arg(long)]
        highlight_crossings: bool,
    },
    /// Print edge-count bounds for a graph.
    Report { graph: PathBuf },
}

fn need(value: Option<usize>, flag: &str) -> Result<usize, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("--{flag} is required for this family")))
}

fn family_of(
    name: FamilyName,
    p: Option<usize>,
    q: Option<usize>,
    i: Option<usize>,
    n: Option<usize>,
    k: Option<usize>,
    optimal: bool,
) -> Result<Family, CliError> {
    Ok(match name {
        FamilyName::DiagonalGrid => Family::DiagonalGrid {
            p: need(p, "p")?,
            q: need(q, "q")?,
        },
        FamilyName::RecursiveQuadrangle => Family::RecursiveQuadrangle {
            i: need(i, "i")?,
            optimal,
        },
        FamilyName::PdwEven => Family::PdwEven { n: need(n, "n")? },
        FamilyName::PdwOdd => Family::PdwOdd { n: need(n, "n")? },
        FamilyName::QuadrangleChain => Family::QuadrangleChain { k: need(k, "k")? },
    })
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.into(),
        source,
    })
}

fn read_with<T>(path: &Path, parse: fn(&str) -> Result<T, FormatError>) -> Result<T, CliError> {
    parse(&read(path)?).map_err(|source| CliError::Format {
        path: path.into(),
        source,
    })
}

fn emit(text: &str, output: Option<&Path>, out: &mut dyn Write) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.into(),
            source,
        }),
        None => out.write_all(text.as_bytes()).map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        }),
    }
}

fn json(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Generate {
            family,
            p,
            q,
            i,
            n,
            k,
            optimal,
            output,
        } => {
            let g = generate(family_of(family, p, q, i, n, k, optimal)?)?;
            emit(&serialize_graph(&g), output.as_deref(), out)?;
        }
        Command::Draw {
            graph,
            output,
            algorithm,
        } => {
            let g = read_with(&graph, parse_graph)?;
            let d = match algorithm {
                Algorithm::Auto => draw(&g)?,
                Algorithm::MaximalOuter => draw_maximal_outer(&g)?,
            };
            emit(&serialize_drawing(&d), output.as_deref(), out)?;
        }
        Command::Validate { graph, drawing, k } => {
            let g = read_with(&graph, parse_graph)?;
            let d = read_with(&drawing, parse_drawing)?;
            let report = validate(&g, &d, k);
            emit(&json(&report), None, out)?;
            return Ok(if report.pass { 0 } else { 2 });
        }
        Command::Render {
            drawing,
            output,
            unit,
            highlight_crossings,
        } => {
            let d = read_with(&drawing, parse_drawing)?;
            let opts = SvgOptions {
                unit,
                highlight_crossings,
            };
            emit(&render_svg(&d, &opts), Some(&output), out)?;
        }
        Command::Report { graph } => {
            let g = read_with(&graph, parse_graph)?;
            emit(&json(&edge_bound_report(&g)), None, out)?;
        }
    }
    Ok(0)
}

/// Runs the tool on `args` (including the program name) and returns the
/// process exit code: 0 on success, 2 for a failed validation, 1 otherwise.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
