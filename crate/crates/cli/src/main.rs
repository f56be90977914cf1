//! `qpvi`: build quivers, act with group words, run verification suites and
//! generate orbits of the q-Painleve flows.
//!
//! Exit status is 0 when every requested check passes, 1 when a check fails
//! (the failing relations with their witnesses go to stderr as JSON) and 2
//! for usage or input errors.

mod args;
mod commands;
mod error;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, EvolveCmd, LaxCmd};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Quiver(q) => commands::quiver(q),
        Command::Act(a) => commands::act(a),
        Command::Verify(v) => commands::verify(v),
        Command::Evolve(EvolveCmd::Qp(e)) => commands::evolve_qp(e),
        Command::Evolve(EvolveCmd::Tau3(e)) => commands::evolve_tau3(e),
        Command::Lax(LaxCmd::Check(l)) => commands::lax_check(l),
    };
    match result {
        Ok(o) if o.pass => ExitCode::SUCCESS,
        Ok(o) => {
            if let Some(f) = o.failure {
                eprint!("{f}");
            }
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
