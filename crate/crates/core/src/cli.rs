//! Command-line front end. Every subcommand prints JSON (or SVG) on the
//! output stream and diagnostics on the error stream.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::classify::classify_general;
use crate::corpus::{check_fixture, comparison_table, corpus, table_mismatches, FixtureReport};
use crate::enumerate::{enumerate, NumericOptions, SphereVerdict};
use crate::error::{Error, Result};
use crate::framework::{validate_sphere, Framework, ToleranceConfig};
use crate::generic::{
    generically_globally_rigid_2d, generically_globally_rigid_with, generically_rigid_with, hendrickson_necessary_with,
    maxwell_deficit, pebble_game_2d, RankOptions,
};
use crate::graph::Graph;
use crate::render::render_svg;

/// Environment variable overriding the default seed of 0.
pub const SEED_VAR: &str = "PENNYRIG_SEED";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "pennyrig", version, about = "Rigidity of penny and marble graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Combinatorial sphere-rigidity classification.
    Classify {
        #[arg(short, long)]
        graph: PathBuf,
        /// Dimension; defaults to the realization's, else 2.
        #[arg(short, long)]
        d: Option<usize>,
        /// A realization used as sphere-graph witness.
        #[arg(short, long)]
        realization: Option<PathBuf>,
        /// Enumerate realizations and record the outcome in the report.
        #[arg(long)]
        certify: bool,
        #[arg(long, default_value_t = 200)]
        restarts: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Checks a realization against the sphere conditions.
    Validate {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        realization: PathBuf,
        #[arg(short, long)]
        d: Option<usize>,
    },
    /// Enumerates realizations modulo isometry.
    Enumerate {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value_t = 200)]
        restarts: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Generic rigidity verdicts.
    Generic {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value_t = 8)]
        trials: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Draws a planar realization as SVG.
    Render {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        realization: PathBuf,
        /// Output file; standard output when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The built-in fixture corpus.
    Corpus {
        #[command(subcommand)]
        command: CorpusCommand,
    },
}

#[derive(Debug, Subcommand)]
enum CorpusCommand {
    /// Checks every fixture's expected claims.
    Run {
        /// Glob over fixture ids.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value_t = 200)]
        restarts: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Writes every fixture's files into a directory.
    Export {
        #[arg(short, long)]
        output: PathBuf,
    },
}

/// Why a command did not finish normally.
enum Failure {
    Input(Error),
    Claims(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(Failure::Input(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
        Err(Failure::Claims(msg)) => {
            let _ = writeln!(err, "{msg}");
            EXIT_FAILED
        }
    }
}

fn default_seed() -> Result<u64> {
    match std::env::var(SEED_VAR) {
        Ok(s) => s.trim().parse().map_err(|_| Error::Format(format!("{SEED_VAR} is not an integer: {s:?}"))),
        Err(_) => Ok(0),
    }
}

fn seed_or_default(seed: Option<u64>) -> Result<u64> {
    seed.map_or_else(default_seed, Ok)
}

fn load(graph: &Path, realization: Option<&Path>) -> Result<(Graph, Option<Framework>)> {
    let g = Graph::load(graph).map_err(|e| with_path(e, graph))?;
    let f = realization.map(|p| Framework::load(g.clone(), p).map_err(|e| with_path(e, p))).transpose()?;
    Ok((g, f))
}

fn with_path(e: Error, path: &Path) -> Error {
    Error::Format(format!("{}: {e}", path.display()))
}

fn emit(out: &mut dyn Write, value: &Value) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn check_dim(d: usize) -> Result<()> {
    if d == 2 || d == 3 { Ok(()) } else { Err(Error::DimensionUnsupported(d)) }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> std::result::Result<(), Failure> {
    let tol = ToleranceConfig::default();
    match command {
        Command::Classify { graph, d, realization, certify, restarts, seed } => {
            let (g, witness) = load(&graph, realization.as_deref())?;
            let d = d.or(witness.as_ref().map(Framework::dim)).unwrap_or(2);
            check_dim(d)?;
            let mut report = classify_general(&g, d, witness.as_ref(), &tol)?;
            if certify {
                let opts = NumericOptions { restarts, seed: seed_or_default(seed)? };
                report.certify(&enumerate(&g, d, &opts, &tol)?);
            }
            emit(out, &serde_json::to_value(&report).map_err(Error::from)?)?;
        }
        Command::Validate { graph, realization, d } => {
            let (_, f) = load(&graph, Some(&realization))?;
            let f = f.expect("realization loaded");
            if let Some(d) = d.filter(|&d| d != f.dim()) {
                return Err(Error::Format(format!("realization has dimension {}, not {d}", f.dim())).into());
            }
            emit(out, &serde_json::to_value(validate_sphere(&f, &tol)).map_err(Error::from)?)?;
        }
        Command::Enumerate { graph, d, restarts, seed } => {
            check_dim(d)?;
            let (g, _) = load(&graph, None)?;
            let opts = NumericOptions { restarts, seed: seed_or_default(seed)? };
            let set = enumerate(&g, d, &opts, &tol)?;
            let mut value = serde_json::to_value(&set).map_err(Error::from)?;
            value["verdict"] = serde_json::to_value(SphereVerdict::from_classes(&set)).map_err(Error::from)?;
            emit(out, &value)?;
        }
        Command::Generic { graph, d, trials, seed } => {
            check_dim(d)?;
            let (g, _) = load(&graph, None)?;
            let opts = RankOptions { trials, seed: seed_or_default(seed)? };
            let mut value = json!({
                "d": d,
                "rigid": generically_rigid_with(&g, d, &opts)?,
                "globally_rigid": generically_globally_rigid_with(&g, d, &opts)?,
                "hendrickson": hendrickson_necessary_with(&g, d, &opts)?,
                "maxwell_deficit": maxwell_deficit(&g, d),
            });
            if d == 2 {
                value["pebble_game"] = json!(pebble_game_2d(&g));
                value["jackson_jordan"] = json!(generically_globally_rigid_2d(&g));
            }
            emit(out, &value)?;
        }
        Command::Render { graph, realization, output } => {
            let (_, f) = load(&graph, Some(&realization))?;
            let svg = render_svg(&f.expect("realization loaded"))?;
            match output {
                Some(p) => std::fs::write(&p, svg).map_err(|e| with_path(e.into(), &p))?,
                None => out.write_all(svg.as_bytes()).map_err(Error::from)?,
            }
        }
        Command::Corpus { command: CorpusCommand::Run { filter, restarts, seed } } => {
            let opts = NumericOptions { restarts, seed: seed_or_default(seed)? };
            corpus_run(filter.as_deref(), &opts, &tol, out, err)?;
        }
        Command::Corpus { command: CorpusCommand::Export { output } } => {
            corpus_export(&output)?;
            let _ = writeln!(err, "wrote {} fixtures to {}", corpus().len(), output.display());
        }
    }
    Ok(())
}

fn corpus_run(
    filter: Option<&str>,
    opts: &NumericOptions,
    tol: &ToleranceConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::result::Result<(), Failure> {
    let pattern = filter
        .map(|f| glob::Pattern::new(f).map_err(|e| Error::Format(format!("bad filter {f:?}: {e}"))))
        .transpose()?;
    let all = corpus();
    let chosen: Vec<_> = all.iter().filter(|f| pattern.as_ref().is_none_or(|p| p.matches(&f.id))).collect();
    if chosen.is_empty() {
        return Err(Error::Format(format!("no fixture matches {:?}", filter.unwrap_or("*"))).into());
    }
    let reports: Vec<FixtureReport> = chosen.par_iter().map(|f| check_fixture(f, opts, tol)).collect();
    let mismatches = if pattern.is_none() { table_mismatches(&all) } else { Vec::new() };
    let failed: Vec<&str> = reports.iter().filter(|r| r.failed()).map(|r| r.id.as_str()).collect();
    let claims: usize = reports.iter().map(|r| r.claims.len()).sum();
    emit(
        out,
        &json!({
            "fixtures": reports,
            "table_mismatches": mismatches,
            "failed": failed,
        }),
    )?;
    let _ = writeln!(err, "{} fixtures, {claims} claims, {} failing fixtures", reports.len(), failed.len());
    if failed.is_empty() && mismatches.is_empty() {
        Ok(())
    } else {
        Err(Failure::Claims(format!("failing: {}", failed.iter().copied().chain(mismatches.iter().map(String::as_str)).collect::<Vec<_>>().join(", "))))
    }
}

/// Writes each fixture's files plus `index.json` (fixture metadata) and
/// `tables.json` (both comparison tables).
pub fn corpus_export(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let fixtures = corpus();
    let mut index = Vec::new();
    for f in &fixtures {
        f.export(dir)?;
        index.push(json!({
            "id": f.id,
            "d": f.d,
            "vertices": f.graph.len(),
            "edges": f.graph.edge_count(),
            "realization": f.realization.is_some(),
            "alternates": f.alternates.len(),
            "analogue": f.analogue,
            "note": f.note,
        }));
    }
    let tables = json!({ "2": comparison_table(2), "3": comparison_table(3) });
    std::fs::write(dir.join("index.json"), serde_json::to_string_pretty(&index)? + "\n")?;
    std::fs::write(dir.join("tables.json"), serde_json::to_string_pretty(&tables)? + "\n")?;
    Ok(())
}
