//! `dspec`: build graph families, compute exact distance polynomials and
//! spectra, and run the verification sweeps. Every subcommand writes one JSON
//! document to standard output.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for usage
//! errors.

mod args;
mod commands;

use args::Cli;
use clap::{CommandFactory, Parser};
use commands::{Failure, Output};
use std::io::Write;
use std::process::ExitCode;

fn usage_for(cli: &Cli) -> String {
    let mut cmd = Cli::command();
    let name = match &cli.command {
        args::Command::Family { .. } => "family",
        args::Command::Charpoly { .. } => "charpoly",
        args::Command::Spectrum { .. } => "spectrum",
        args::Command::VerifyClosedForm { .. } => "verify-closed-form",
        args::Command::SignCheck { .. } => "sign-check",
        args::Command::DsCheck { .. } => "ds-check",
        args::Command::Census { .. } => "census",
        args::Command::Forbidden { .. } => "forbidden",
        args::Command::Tables => "tables",
        args::Command::Fixtures { .. } => "fixtures",
    };
    cmd.build();
    match cmd.find_subcommand_mut(name) {
        Some(sub) => sub.render_usage().to_string(),
        None => cmd.render_usage().to_string(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.render().to_string();
            eprint!("{text}");
            if !text.contains("Usage:") {
                eprintln!("\n{}", Cli::command().render_usage());
            }
            return ExitCode::from(2);
        }
    };
    match commands::run(&cli) {
        Ok(outcome) => {
            let text = match outcome.output {
                Output::Json(v) => dspec_core::json::to_string_pretty(&v),
                Output::Text(t) => t,
            };
            let mut out = std::io::stdout().lock();
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(2);
            }
            if !cli.quiet {
                eprintln!("{}", outcome.summary);
            }
            if outcome.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n\n{}", usage_for(&cli));
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
