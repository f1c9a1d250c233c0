//! `landau-dipole`: analytic spectra, eigenfunctions and finite-difference
//! cross-checks for Landau levels of neutral dipoles.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

mod args;
mod commands;
mod table;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use commands::Failure;

fn emit(global: &args::GlobalArgs, text: &str) -> Result<(), String> {
    match &global.output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // clap exits 2 on usage errors and 0 for --help/--version
        Err(e) => e.exit(),
    };

    let result = commands::resolve_config(&cli.global)
        .and_then(|config| commands::run(&cli.command, &config));
    let (table, message, code) = match result {
        Ok(outcome) => (outcome.table, outcome.summary, 0),
        Err(Failure::Verification { output, message }) => (output, Some(message), 1),
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(&cli.global, &table.render(cli.global.format)) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if let Some(message) = message {
        eprintln!("{message}");
    }
    ExitCode::from(code)
}
