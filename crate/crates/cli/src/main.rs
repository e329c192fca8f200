//! Batch front door for the tower checkers: run an axiom suite or dump a
//! structure table, emit a canonical report, and exit 0 on pass, 1 on a
//! check failure, 2 on a bad request, 3 on I/O or internal failure.

use clap::{Parser, Subcommand};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use towers_core::error::TowerError;
use towers_core::hopf::report::Report;
use towers_core::request::{
    parse_composition, parse_degrees, parse_group, run_check, run_table, CheckRequest,
    OutputFormat, TableRequest,
};

#[derive(Parser)]
#[command(
    name = "towers",
    version,
    about = "Axiom checks and structure tables for three towers of algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named check suite and report every cell.
    Check {
        /// Tower: sym, hecke0, or z2.
        #[arg(long)]
        tower: String,
        /// Check: cond12, cond3, cond5, cond5prime, bialgebra, duality,
        /// antipode, or pairing.
        #[arg(long)]
        check: String,
        /// Grothendieck group: g0 or k0.
        #[arg(long, default_value = "g0")]
        group: String,
        /// Largest total degree to sweep.
        #[arg(long)]
        max_degree: usize,
        /// Output format: json or csv.
        #[arg(long, default_value = "json")]
        format: String,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dump a structure table in canonical order.
    Table {
        /// Tower: sym, hecke0, or z2.
        #[arg(long)]
        tower: String,
        /// Table: product, coproduct, antipode, pairing, characters, or
        /// module-bases.
        #[arg(long)]
        op: String,
        /// Grothendieck group: g0 or k0.
        #[arg(long, default_value = "g0")]
        group: String,
        /// Degree, or comma-separated degree pair for product.
        #[arg(long)]
        degree: Option<String>,
        /// Composition parts for module-bases, e.g. 2,1.
        #[arg(long)]
        composition: Option<String>,
        /// Output format: json or csv.
        #[arg(long, default_value = "json")]
        format: String,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Bad requests exit 2, everything that goes wrong after validation exits 3.
fn request_exit(e: &TowerError) -> u8 {
    match e {
        TowerError::DegreeCap { .. }
        | TowerError::UnknownName { .. }
        | TowerError::InvalidRequest(_)
        | TowerError::InvalidComposition(_)
        | TowerError::InvalidPartition(_)
        | TowerError::InvalidPermutation(_) => 2,
        _ => 3,
    }
}

fn emit(report: &Report, format: OutputFormat, out: Option<&Path>) -> std::io::Result<()> {
    let body = match format {
        OutputFormat::Json => report.to_json_string(),
        OutputFormat::Csv => report.to_csv(),
    };
    match out {
        Some(path) => std::fs::write(path, body),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            stdout.flush()
        }
    }
}

fn run(cli: Cli) -> std::result::Result<u8, (u8, String)> {
    let bad = |e: TowerError| (request_exit(&e), e.to_string());
    match cli.command {
        Command::Check {
            tower,
            check,
            group,
            max_degree,
            format,
            out,
        } => {
            let req = CheckRequest {
                tower: tower.parse().map_err(bad)?,
                check: check.parse().map_err(bad)?,
                group: parse_group(&group).map_err(bad)?,
                max_degree,
            };
            let format: OutputFormat = format.parse().map_err(bad)?;
            let report = run_check(&req).map_err(bad)?;
            emit(&report, format, out.as_deref())
                .map_err(|e| (3, format!("cannot write report: {e}")))?;
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Table {
            tower,
            op,
            group,
            degree,
            composition,
            format,
            out,
        } => {
            let req = TableRequest {
                tower: tower.parse().map_err(bad)?,
                op: op.parse().map_err(bad)?,
                group: parse_group(&group).map_err(bad)?,
                degrees: match degree.as_deref() {
                    Some(s) => parse_degrees(s).map_err(bad)?,
                    None => Vec::new(),
                },
                composition: match composition.as_deref() {
                    Some(s) => Some(parse_composition(s).map_err(bad)?),
                    None => None,
                },
            };
            let format: OutputFormat = format.parse().map_err(bad)?;
            let report = run_table(&req).map_err(bad)?;
            emit(&report, format, out.as_deref())
                .map_err(|e| (3, format!("cannot write report: {e}")))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    if let Ok(s) = std::env::var("TOWER_MAX_THREADS") {
        match s.parse::<usize>() {
            Ok(n) if n >= 1 => towers_core::par::set_max_threads(n),
            _ => {
                eprintln!("error: TOWER_MAX_THREADS must be a positive integer, got {s:?}");
                return ExitCode::from(2);
            }
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
