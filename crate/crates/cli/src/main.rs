mod args;
mod commands;
mod error;
mod format;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use error::CliError;

fn run(cli: &Cli) -> Result<Option<CliError>, CliError> {
    let (outcome, output) = match &cli.command {
        Command::Point(a) => (commands::point(a)?, &a.common.output),
        Command::Sweep(a) => (commands::sweep(a)?, &a.common.output),
        Command::PhaseDiagram(a) => (commands::phase_diagram(a)?, &a.common.output),
        Command::Distributions(a) => (commands::distributions(a)?, &a.common.output),
        Command::TransitionOrder(a) => (commands::transition(a)?, &a.common.output),
    };
    match output {
        Some(path) => std::fs::write(path, &outcome.text)
            .map_err(|source| CliError::Io { context: format!("writing {}", path.display()), source })?,
        None => std::io::stdout()
            .lock()
            .write_all(outcome.text.as_bytes())
            .map_err(|source| CliError::Io { context: "writing standard output".into(), source })?,
    }
    Ok(outcome.deferred)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let err = match run(&cli) {
        Ok(None) => return ExitCode::SUCCESS,
        Ok(Some(e)) | Err(e) => e,
    };
    eprintln!("tavis: {err}");
    ExitCode::from(err.exit_code() as u8)
}
