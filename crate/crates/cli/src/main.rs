//! `thermo`: convertibility, work and monotones for quasiclassical thermal
//! resources described in a TOML file.
//!
//! Exit codes: 0 success or convertible, 2 input error, 3 not convertible,
//! 4 the convertibility criteria disagree.

mod commands;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand};

use commands::{GibbsSource, Report};

const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(
    name = "thermo",
    version,
    about = "Exact thermal-resource computations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether state A converts to state B under thermal operations.
    Check {
        file: PathBuf,
        a: String,
        b: String,
        /// Print a Gibbs-stochastic matrix mapping A to B.
        #[arg(long)]
        witness: bool,
        /// Criteria to run (default: lp, lorenz, hinge-d, hinge-e).
        #[arg(long, value_delimiter = ',')]
        criteria: Vec<String>,
    },
    /// Optimal work gain of the transformation A -> B.
    Work {
        file: PathBuf,
        a: String,
        b: String,
        #[arg(long, default_value_t = 1.0)]
        beta: f64,
        /// Print the optimal matrix F.
        #[arg(long)]
        witness: bool,
        /// Lift F to a thermal map with weight parameter epsilon (a rational).
        #[arg(long)]
        epsilon: Option<String>,
    },
    /// Lorenz-curve breakpoints as TSV.
    Lorenz {
        file: PathBuf,
        #[arg(required = true)]
        names: Vec<String>,
        /// Write the TSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate thermal monotones of a state.
    Monotone {
        file: PathBuf,
        name: String,
        /// Monotones to evaluate, e.g. `renyi:3/2` or `hinge:1/2`
        /// (default: the standard family).
        #[arg(long = "monotone", value_delimiter = ',')]
        monotones: Vec<String>,
    },
    /// Rationalized Gibbs vector, from `--levels` and `--beta` or from a
    /// state in a file.
    Gibbs {
        file: Option<PathBuf>,
        state: Option<String>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        levels: Vec<f64>,
        #[arg(long)]
        beta: Option<f64>,
        /// Decimal digits kept in each weight.
        #[arg(long)]
        precision: Option<u32>,
    },
}

fn run(cli: Cli) -> Result<Report> {
    match cli.command {
        Command::Check {
            file,
            a,
            b,
            witness,
            criteria,
        } => commands::check(&file, &a, &b, witness, &criteria),
        Command::Work {
            file,
            a,
            b,
            beta,
            witness,
            epsilon,
        } => commands::work(&file, &a, &b, beta, witness, epsilon.as_deref()),
        Command::Lorenz { file, names, out } => {
            let (tsv, summary) = commands::lorenz(&file, &names)?;
            match out {
                Some(path) => {
                    std::fs::write(&path, tsv)
                        .map_err(|e| anyhow::anyhow!("cannot write {}: {e}", path.display()))?;
                    Ok(Report {
                        text: summary,
                        code: 0,
                    })
                }
                None => {
                    eprint!("{summary}");
                    Ok(Report { text: tsv, code: 0 })
                }
            }
        }
        Command::Monotone {
            file,
            name,
            monotones,
        } => commands::monotone(&file, &name, &monotones),
        Command::Gibbs {
            file,
            state,
            levels,
            beta,
            precision,
        } => {
            let source = match (&file, &state, levels.is_empty()) {
                (Some(file), Some(state), true) if beta.is_none() && precision.is_none() => {
                    GibbsSource::File { file, state }
                }
                (None, None, false) => match beta {
                    Some(beta) => GibbsSource::Hamiltonian {
                        levels,
                        beta,
                        precision,
                    },
                    None => bail!("--levels requires --beta"),
                },
                _ => bail!("give either FILE STATE or --levels with --beta"),
            };
            commands::gibbs(source)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(report.text.as_bytes());
            ExitCode::from(report.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
