//! Thin command-line front end over the library: run named checks from
//! the verification catalogue, evaluate expressions, show named objects.
//!
//! Exit status: 0 all checks pass, 1 any check fails, 2 usage error.

use clap::{Parser, Subcommand, ValueEnum};
use polycontact::catalogue::{run_checks, RunOptions, Selection};
use polycontact::parse::{eval_str, Workspace};
use polycontact::render::{render_value, Format};
use polycontact::report::CheckStatus;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "polycontact",
    about = "Exact symbolic verification of the SUSY polycontact structure on R^{4|4}",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Run named checks from the catalogue ("all" or a list of ids).
    Verify {
        /// Check ids, or the single word "all".
        #[arg(required = true)]
        ids: Vec<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        /// x-degree bound for the ansatz solves.
        #[arg(long, default_value_t = 2)]
        xdeg: u32,
    },
    /// Evaluate an expression and print its canonical form.
    Eval {
        expr: String,
    },
    /// Print a named object (alpha, dalpha, omega, varpi, Q1..R).
    Show {
        name: String,
        #[arg(long)]
        latex: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { ids, format, xdeg } => {
            let selection = Selection::from_args(&ids);
            let opts = RunOptions { x_degree: xdeg };
            match run_checks(&selection, &opts) {
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
                Ok(reports) => {
                    let mut all_pass = true;
                    for report in &reports {
                        if !report.passed() {
                            all_pass = false;
                        }
                        match format {
                            OutputFormat::Structured => {
                                println!(
                                    "{}",
                                    serde_json::to_string(report)
                                        .expect("reports serialize infallibly")
                                );
                            }
                            OutputFormat::Text => {
                                let tag = match report.status {
                                    CheckStatus::Pass => "PASS",
                                    CheckStatus::Fail => "FAIL",
                                    CheckStatus::Skipped => "SKIP",
                                };
                                println!(
                                    "[{tag}] {} ({} ms) {}",
                                    report.check_id, report.elapsed_ms, report.statement
                                );
                                if let Some(witness) = &report.witness {
                                    println!("       witness: {witness}");
                                }
                            }
                        }
                    }
                    if all_pass {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
            }
        }
        Command::Eval { expr } => {
            let ws = Workspace::new();
            match eval_str(&ws, &expr) {
                Ok(value) => {
                    println!("{value}");
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Command::Show { name, latex } => {
            let ws = Workspace::new();
            match ws.named(&name) {
                Some(value) => {
                    let format = if latex { Format::Latex } else { Format::Plain };
                    println!("{}", render_value(&ws, &value, format));
                    ExitCode::SUCCESS
                }
                None => {
                    eprintln!(
                        "error: unknown object `{name}`; try alpha, dalpha, omega, varpi, Q1, Q2, Qb1, Qb2, D1, D2, Db1, Db2, P0..P3, R"
                    );
                    ExitCode::from(2)
                }
            }
        }
    }
}
