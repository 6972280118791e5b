use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ehrhart::{BigInt, Error, Polytope};
use serde::Serialize;
use serde_json::{json, Value};

mod commands;
mod verify;

/// Exact Ehrhart-theoretic invariants of lattice polytopes.
///
/// Polytopes are read as `{"vertices": [[...], ...]}` from `--in`, from
/// `--vertices`, or from stdin. Polynomials are printed as ascending
/// coefficient arrays.
#[derive(Parser, Debug)]
#[command(name = "ehrhart", version)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Serialize)]
struct GlobalArgs {
    /// Input file (vertex JSON, or a JSONL log for scan-q1).
    #[arg(long = "in", global = true, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Inline vertex list, e.g. '[[0,0],[1,0],[0,1]]'.
    #[arg(long, global = true, value_name = "JSON")]
    vertices: Option<String>,
    /// Output file; stdout when absent. For enumerate, the JSONL log.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Coordinate bound of the lattice width direction search.
    #[arg(long, global = true, default_value_t = 3, value_name = "B")]
    width_bound: usize,
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case", tag = "name")]
enum Command {
    /// Every invariant and self-audit in one report.
    Invariants,
    /// h*-polynomial, degree, codegree and volume.
    Hstar,
    /// Local h*-polynomial with its self-audit.
    Lstar,
    /// Toric f-, g- and h-polynomials of the proper-face poset.
    Gpoly,
    /// Gorenstein data, or `gorenstein: false`.
    Gorenstein,
    /// Vertices of the dual Gorenstein polytope.
    Dual,
    /// Thinness classification of a 3-polytope.
    Classify3d,
    /// Lattice width and a minimizing direction.
    Width,
    /// Enumerate simplices by volume into a JSONL log.
    Enumerate {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        max_vol: u64,
        /// Keep one record per unimodular equivalence class and volume.
        #[arg(long)]
        dedup_iso: bool,
        /// Keep complete volume buckets already in the log.
        #[arg(long)]
        resume: bool,
    },
    /// Sort thin records of a log by the explanation they admit.
    #[command(name = "scan-q1")]
    ScanQ1,
    /// Recompute the pinned worked examples and compare with golden values.
    VerifyPaper {
        /// Golden file to compare against instead of the built-in one.
        #[arg(long, value_name = "FILE")]
        golden: Option<PathBuf>,
    },
}

/// Error carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Falsification(_) => 1,
            Error::InternalConsistency(_) => 3,
            _ => 2,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn read_input(g: &GlobalArgs) -> Result<String, Failure> {
    match (&g.input, &g.vertices) {
        (Some(_), Some(_)) => Err(Failure::input("give either --in or --vertices, not both")),
        (Some(path), None) => std::fs::read_to_string(path)
            .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display()))),
        (None, Some(v)) => Ok(format!("{{\"vertices\": {v}}}")),
        (None, None) => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::input(format!("cannot read stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn read_polytope(g: &GlobalArgs) -> Result<Polytope, Failure> {
    let text = read_input(g)?;
    let pts = ehrhart::io::parse_vertex_document::<BigInt>(&text)?;
    Ok(Polytope::new(pts)?)
}

fn config(cli: &Cli) -> Value {
    let g = &cli.global;
    json!({
        "command": cli.command,
        "input": g.input.as_ref().map(|p| p.display().to_string()),
        "inline_vertices": g.vertices,
        "out": g.out.as_ref().map(|p| p.display().to_string()),
        "width_bound": g.width_bound,
        "jobs": g.jobs,
        "verbosity": g.verbose,
        "version": env!("CARGO_PKG_VERSION"),
    })
}

fn emit(g: &GlobalArgs, text: &str) -> Result<(), Failure> {
    match &g.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| Failure {
                code: 3,
                message: e.to_string(),
            })
        }
    }
}

fn emit_json(cli: &Cli, result: Value) -> Result<(), Failure> {
    let doc = json!({ "config": config(cli), "result": result });
    let mut text = serde_json::to_string_pretty(&doc).expect("json values serialize");
    text.push('\n');
    emit(&cli.global, &text)
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    if let Some(n) = cli.global.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::input(format!("--jobs: {e}")))?;
    }
    let g = &cli.global;
    let result = match &cli.command {
        Command::Invariants => commands::invariants(&read_polytope(g)?, g.width_bound)?,
        Command::Hstar => commands::hstar(&read_polytope(g)?),
        Command::Lstar => commands::lstar(&read_polytope(g)?)?,
        Command::Gpoly => commands::gpoly(&read_polytope(g)?),
        Command::Gorenstein => commands::gorenstein(&read_polytope(g)?)?,
        Command::Dual => commands::dual(&read_polytope(g)?)?,
        Command::Classify3d => commands::classify3d(&read_polytope(g)?)?,
        Command::Width => commands::width(&read_polytope(g)?, g.width_bound),
        Command::Enumerate {
            dim,
            max_vol,
            dedup_iso,
            resume,
        } => {
            let out = g
                .out
                .as_ref()
                .ok_or_else(|| Failure::input("enumerate needs --out FILE"))?;
            let summary = commands::enumerate(out, *dim, *max_vol, *dedup_iso, *resume)?;
            let doc = json!({ "config": config(cli), "result": summary });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("json values serialize")
            );
            return Ok(0);
        }
        Command::ScanQ1 => commands::scan_q1(&read_input(g)?)?,
        Command::VerifyPaper { golden } => {
            let golden_text = match golden {
                Some(p) => std::fs::read_to_string(p)
                    .map_err(|e| Failure::input(format!("cannot read {}: {e}", p.display())))?,
                None => verify::GOLDEN.to_string(),
            };
            let (table, ok) = verify::run(&golden_text)?;
            emit(g, &table)?;
            return Ok(if ok { 0 } else { 1 });
        }
    };
    emit_json(cli, result)?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
