//! `persona`: corpus statistics, cross-validated pipeline runs, χ² feature
//! reports, Selective.WSD sweeps and report comparison.

mod args;
mod commands;
mod failure;
mod load;
mod manifest;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use crate::args::{Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(if cli.quiet { "warn" } else { "info" }))
        .format_timestamp(None)
        .init();

    let result = match &cli.command {
        Command::Stats(a) => commands::stats::run(&cli.resources, a),
        Command::Run(a) => commands::run::run(&cli.resources, a),
        Command::TopFeatures(a) => commands::top::run(&cli.resources, a),
        Command::SweepSelective(a) => commands::sweep::run(&cli.resources, a),
        Command::Compare(a) => commands::compare::run(a),
        Command::Extract(a) => commands::extract::run(&cli.resources, a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            let _ = std::io::stdout().flush();
            eprintln!("error: {:#}", failure.error);
            ExitCode::from(failure.code)
        }
    }
}
