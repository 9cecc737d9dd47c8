//! Command-line front end for the `gca-core` engine.
//!
//! Exit status: 0 when the verdict agrees with what was expected, 1 when it
//! does not (or an internal cross-check failed), 2 for bad input.

pub mod commands;
pub mod config;
pub mod expr;
pub mod report;

use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand};
use gca_core::Error;

use crate::config::{Params, UsageError};
use crate::report::Report;

#[derive(Parser, Debug)]
#[command(name = "gca", version, about = "Computations with modules over the algebra G")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the bracket compatibility of a module action on a finite window
    Axioms(Params),
    /// Probe a rank-one module for irreducibility
    RankOne(Params),
    /// Probe a tensor product module for irreducibility
    TensorIrr(Params),
    /// Generate the submodule spanned by seed expressions
    Closure(Params),
    /// Lower the degree of a vector in an I⊗I tensor module
    Reduce(Params),
    /// Check that a spanning set generates an invariant subspace
    Invariance(Params),
    /// Solve for module maps between two tensor modules
    Intertwiner(Params),
    /// Decide isomorphism of two tensor modules
    Classify(Params),
    /// Evaluate the 4x4 power determinant for four scalars
    Vandermonde(Params),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Axioms(_) => "axioms",
            Command::RankOne(_) => "rank-one",
            Command::TensorIrr(_) => "tensor-irr",
            Command::Closure(_) => "closure",
            Command::Reduce(_) => "reduce",
            Command::Invariance(_) => "invariance",
            Command::Intertwiner(_) => "intertwiner",
            Command::Classify(_) => "classify",
            Command::Vandermonde(_) => "vandermonde",
        }
    }

    fn params(&self) -> &Params {
        match self {
            Command::Axioms(p)
            | Command::RankOne(p)
            | Command::TensorIrr(p)
            | Command::Closure(p)
            | Command::Reduce(p)
            | Command::Invariance(p)
            | Command::Intertwiner(p)
            | Command::Classify(p)
            | Command::Vandermonde(p) => p,
        }
    }
}

/// How a run ended, before it is turned into an exit status.
pub enum RunResult {
    Done { report: Report, falsified: bool },
    Falsified(String),
    Usage(String),
}

impl RunResult {
    pub fn code(&self) -> i32 {
        match self {
            RunResult::Done { falsified: false, .. } => 0,
            RunResult::Done { falsified: true, .. } | RunResult::Falsified(_) => 1,
            RunResult::Usage(_) => 2,
        }
    }
}

fn classify_error(e: UsageError) -> RunResult {
    match e {
        UsageError::Core(
            e @ (Error::CrossCheckFailed(..) | Error::WitnessRejected(..) | Error::NoReductionWitness { .. }),
        ) => RunResult::Falsified(e.to_string()),
        e => RunResult::Usage(e.to_string()),
    }
}

/// Runs a parsed command without touching stdout or the filesystem.
pub fn execute(command: &Command) -> RunResult {
    let params = match command.params().clone().resolve() {
        Ok(p) => p,
        Err(e) => return RunResult::Usage(e.to_string()),
    };
    let start = Instant::now();
    let report = Report::new(command.name(), params.echo());
    let out = match command {
        Command::Axioms(_) => commands::axioms(&params, report),
        Command::RankOne(_) => commands::rank_one(&params, report),
        Command::TensorIrr(_) => commands::tensor_irr(&params, report),
        Command::Closure(_) => commands::closure(&params, report),
        Command::Reduce(_) => commands::reduce(&params, report),
        Command::Invariance(_) => commands::invariance(&params, report),
        Command::Intertwiner(_) => commands::intertwiner(&params, report),
        Command::Classify(_) => commands::classify(&params, report),
        Command::Vandermonde(_) => commands::vandermonde(&params, report),
    };
    match out {
        Ok(mut o) => {
            o.report.wall_ms = if params.no_timing { 0 } else { start.elapsed().as_millis() as u64 };
            RunResult::Done { report: o.report, falsified: o.falsified }
        }
        Err(e) => classify_error(e),
    }
}

/// Full CLI behaviour for the given argv; returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = execute(&cli.command);
    match &result {
        RunResult::Done { report, .. } => {
            let json = report.to_json();
            let written = match &cli.command.params().out {
                Some(path) => std::fs::write(path, &json).map_err(|e| format!("writing {}: {e}", path.display())),
                None => std::io::stdout().write_all(json.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return 2;
            }
            eprintln!("{}", report.summary());
        }
        RunResult::Falsified(msg) => eprintln!("falsified: {msg}"),
        RunResult::Usage(msg) => eprintln!("error: {msg}"),
    }
    result.code()
}
