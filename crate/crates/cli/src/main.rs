//! `uqgl2`: build, verify and sweep colored R-matrices from the command line.
//!
//! Exit codes: 0 when everything passed, 1 when a check failed, 2 for invalid input.
//! Failures also print a one-line JSON record on stderr.

mod artifact;
mod cli;
mod commands;
mod failure;
mod model;
mod parse;
mod sweep;

use clap::error::ErrorKind;
use clap::Parser;

use cli::{Cli, Command};
use failure::Failure;

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => e.exit(),
        Err(e) => {
            let failure = Failure::invalid("UsageError", e.to_string().trim_end());
            eprintln!("{}", failure.record());
            std::process::exit(failure.exit_code());
        }
    };
    let outcome = match &cli.command {
        Command::Build(args) => commands::build(args),
        Command::Verify(args) => commands::verify(args),
        Command::Sweep(args) => sweep::sweep(args),
    };
    if let Err(failure) = outcome {
        eprintln!("{}", failure.record());
        std::process::exit(failure.exit_code());
    }
}
