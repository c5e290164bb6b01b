//! `galois`: closure operators parameterized by Galois connections, from the command line.
//!
//! Exit codes: 0 success or true, 1 checked and false, 2 input error,
//! 3 inconclusive (budget exhausted or closure unbounded).

mod check;
mod front;
mod reason;
mod report;
mod validate;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use galois_closure::inference::{DEFAULT_BUDGET, DEFAULT_MONOID_LIMIT};

use crate::check::Extra;
use crate::report::INPUT_ERROR;

#[derive(Debug, Parser)]
#[command(
    name = "galois",
    version,
    about = "Closure operators parameterized by Galois connections"
)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a lattice, residuated lattice, hedge, filter, connection or parameters file.
    Validate {
        file: String,
        /// Parameters file giving the lattice for hedges, filters and connections.
        #[arg(long)]
        params: Option<String>,
    },
    /// Print the closure of an element under a theory, or under a model with --semantic.
    Closure {
        #[arg(long)]
        params: String,
        #[arg(long)]
        theory: Option<String>,
        /// Element literal, inline JSON or a file holding it.
        #[arg(long)]
        element: String,
        #[arg(long, requires = "model")]
        semantic: bool,
        #[arg(long)]
        model: Option<String>,
        #[arg(long, env = "GALOIS_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        /// Recompute with the naive reference and fail on disagreement.
        #[arg(long)]
        oracle: bool,
    },
    /// Decide whether a theory proves an implication.
    Prove {
        #[arg(long)]
        params: String,
        #[arg(long)]
        theory: String,
        /// `{"lhs": ..., "rhs": ...}`, inline or a file.
        #[arg(long)]
        implication: String,
        /// Write the proof to this file when one is found.
        #[arg(long)]
        emit_proof: Option<PathBuf>,
        #[arg(long, env = "GALOIS_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Decide whether an implication is true in a model.
    Entails {
        #[arg(long)]
        params: String,
        #[arg(long)]
        model: String,
        #[arg(long)]
        implication: String,
    },
    /// Check a proof file against a theory.
    VerifyProof {
        #[arg(long)]
        params: String,
        #[arg(long)]
        theory: String,
        #[arg(long)]
        proof: String,
    },
    /// Classify an operator against the closure axioms and their characterizations.
    CheckOperator {
        #[arg(long)]
        params: String,
        #[arg(long)]
        operator: String,
        /// Also check the hedge-based axioms on L-sets.
        #[arg(long, conflicts_with = "filter")]
        hedge: bool,
        /// Also check the filter-based axioms on L-sets.
        #[arg(long)]
        filter: bool,
    },
    /// Check whether a set of elements is a closure system for the parameterization.
    CheckSystem {
        #[arg(long)]
        params: String,
        #[arg(long)]
        system: String,
    },
    /// Print the monoid generated by the connections under composition.
    Monoid {
        #[arg(long)]
        params: String,
        #[arg(long, default_value_t = DEFAULT_MONOID_LIMIT)]
        limit: usize,
    },
}

fn run(cmd: &Command) -> anyhow::Result<report::Report> {
    match cmd {
        Command::Validate { file, params } => validate::run(file, params.as_deref()),
        Command::Closure {
            params,
            theory,
            element,
            semantic,
            model,
            budget,
            oracle,
        } => reason::closure(&reason::ClosureArgs {
            params,
            theory: theory.as_deref(),
            element,
            model: model.as_deref(),
            semantic: *semantic,
            budget: *budget,
            oracle: *oracle,
        }),
        Command::Prove {
            params,
            theory,
            implication,
            emit_proof,
            budget,
        } => reason::prove(params, theory, implication, emit_proof.as_deref(), *budget),
        Command::Entails {
            params,
            model,
            implication,
        } => reason::entails_cmd(params, model, implication),
        Command::VerifyProof {
            params,
            theory,
            proof,
        } => reason::verify(params, theory, proof),
        Command::CheckOperator {
            params,
            operator,
            hedge,
            filter,
        } => {
            let extra = match (hedge, filter) {
                (true, _) => Extra::Hedge,
                (_, true) => Extra::Filter,
                _ => Extra::None,
            };
            check::operator(params, operator, extra)
        }
        Command::CheckSystem { params, system } => check::system(params, system),
        Command::Monoid { params, limit } => check::monoid(params, *limit),
    }
}

/// The error chain, skipping causes already spelled out by their parent.
fn describe(e: &anyhow::Error) -> String {
    let mut out = String::new();
    for cause in e.chain() {
        let text = cause.to_string();
        if !out.contains(&text) {
            if !out.is_empty() {
                out.push_str(": ");
            }
            out.push_str(&text);
        }
    }
    out
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(INPUT_ERROR)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli.command) {
        Ok(report) => {
            report.print(cli.json);
            ExitCode::from(report.code)
        }
        Err(e) => {
            eprintln!("error: {}", describe(&e));
            ExitCode::from(INPUT_ERROR)
        }
    }
}
