//! `tripm`: check, survey, verify, generate and decompose.
//!
//! Exit codes for `check`: 0 admissible, 1 not admissible, 2 unknown
//! (budget), 3 ineligible, 4 I/O, parse or usage error. `verify` exits 0
//! when the certificate holds, 1 on a violation, 4 on schema errors.

mod generate;
mod input;
mod report;
mod survey;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use input::Format;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use tripm_core::certificate::{parse_certificate, verify_certificate};
use tripm_core::tripm::check;
use tripm_core::Budget;

const DEFAULT_BUDGET: u64 = 10_000_000;
const EXIT_ERROR: u8 = 4;

#[derive(Parser)]
#[command(name = "tripm", version, about = "Three perfect matchings with empty common intersection")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphInput {
    /// Graph file; stdin when absent or `-`.
    input: Option<PathBuf>,
    /// Input format, detected from the first line when absent.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct BudgetArg {
    /// Search-node budget per graph.
    #[arg(long, env = "TRIPM_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Decide one graph and print a JSON report.
    Check {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        budget: BudgetArg,
        /// Also write the certificate to this file.
        #[arg(long)]
        cert_out: Option<PathBuf>,
    },
    /// Check a graph6 stream, one JSONL record per line.
    Survey {
        /// graph6 file; stdin when absent or `-`.
        input: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArg,
        /// Worker threads; all cores when 0.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Also run the direct and structural searches and compare them.
        #[arg(long)]
        cross_validate: bool,
        /// Directory for certificate files instead of inline certificates.
        #[arg(long)]
        cert_out: Option<PathBuf>,
    },
    /// Emit graphs from a named family.
    Generate {
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check a certificate against a graph.
    Verify {
        #[command(flatten)]
        graph: GraphInput,
        /// Certificate JSON, bare or embedded in a `check` report.
        #[arg(long)]
        cert: PathBuf,
    },
    /// Print the Gallai–Edmonds decomposition.
    Decompose {
        #[command(flatten)]
        graph: GraphInput,
    },
}

fn print_json(v: &serde_json::Value) -> Result<()> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v)?;
    writeln!(out)?;
    Ok(())
}

fn run_check(graph: GraphInput, budget: u64, cert_out: Option<&Path>) -> Result<u8> {
    let g = input::read_graph(graph.input.as_deref(), graph.format)?;
    let r = check(&g, &Budget::new(budget));
    if let (Some(path), Some(cert)) = (cert_out, report::certificate(&g, &r)) {
        std::fs::write(path, cert.to_json_pretty())
            .with_context(|| format!("writing {}", path.display()))?;
    }
    print_json(&report::check_report(&g, &r, budget))?;
    Ok(report::exit_code(&r))
}

fn run_verify(graph: GraphInput, cert: &Path) -> Result<u8> {
    let g = input::read_graph(graph.input.as_deref(), graph.format)?;
    let text = std::fs::read_to_string(cert).with_context(|| format!("reading {}", cert.display()))?;
    let doc = parse_certificate(&text)?;
    let v = verify_certificate(&g, &doc)?;
    print_json(&serde_json::json!({ "valid": v.is_valid(), "violations": v.violations }))?;
    Ok(if v.is_valid() { 0 } else { 1 })
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Check { graph, budget, cert_out } => run_check(graph, budget.budget, cert_out.as_deref()),
        Command::Survey { input, budget, jobs, cross_validate, cert_out } => {
            let opts = survey::Options { budget: budget.budget, cross_validate, jobs, cert_dir: cert_out };
            let stdout = std::io::stdout();
            let mut out = std::io::BufWriter::new(stdout.lock());
            match input.as_deref() {
                Some(p) if p != Path::new("-") => {
                    let f = std::fs::File::open(p).with_context(|| format!("opening {}", p.display()))?;
                    survey::survey(BufReader::new(f), &mut out, &opts)?;
                }
                _ => {
                    let stdin = std::io::stdin().lock();
                    survey::survey(stdin, &mut out, &opts)?;
                }
            }
            Ok(0)
        }
        Command::Generate { family, n, k, count, seed } => {
            let f = generate::family(&family, generate::Params { n, k, seed })?;
            let graphs = generate::generate_many(f, seed.unwrap_or(0), count)?;
            let mut out = std::io::stdout().lock();
            for g in &graphs {
                out.write_all(generate::render(g).as_bytes())?;
            }
            Ok(0)
        }
        Command::Verify { graph, cert } => run_verify(graph, &cert),
        Command::Decompose { graph } => {
            let g = input::read_graph(graph.input.as_deref(), graph.format)?;
            print_json(&report::decompose_report(&g))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
