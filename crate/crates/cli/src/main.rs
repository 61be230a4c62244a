//! `celine`: evaluate, tabulate and verify.

mod eval;
mod parse;
mod render;
mod table;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use celine_core::Error;

#[derive(Parser)]
#[command(name = "celine", version, about = "Exact Sister Celine polynomials and angular-momentum coefficients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)] // parsed once per process
enum Command {
    /// Evaluate one quantity.
    Eval(eval::EvalArgs),
    /// Tabulate every valid 3j symbol or Clebsch–Gordan coefficient up to a bound.
    Table(table::TableArgs),
    /// Run identity suites and write a JSON report.
    Verify(verify::VerifyArgs),
}

/// Failure of a subcommand, carrying its exit status.
#[derive(Debug)]
pub enum Failure {
    /// Malformed input or unknown suite.
    Usage(String),
    /// A computation rejected its arguments.
    Compute(Error),
    /// Output could not be written.
    Io(String),
    /// Verification ran but at least one suite failed.
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(msg) => Failure::Usage(msg),
            Error::NotFound(id) => Failure::Usage(format!("unknown suite `{id}`")),
            other => Failure::Compute(other),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse_from(std::env::args_os().map(parse::protect_negative));
    let result = match cli.command {
        Command::Eval(args) => eval::run(&args),
        Command::Table(args) => table::run(&args),
        Command::Verify(args) => verify::run(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(e)) => {
            eprintln!("{}: {e}", e.kind());
            ExitCode::from(3)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(4)
        }
        Err(Failure::Verify) => ExitCode::from(1),
    }
}
