//! Command-line front end for `eurbound`: parameter sweeps, one-shot bound
//! evaluation, certification runs and state-file generation.
//!
//! Exit codes: 0 ok, 1 inequality violation, 2 usage or validation error,
//! 3 I/O error.

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub mod args;
pub mod commands;
pub mod output;
pub mod sweep;

use args::{Cli, Command};
use output::{EXIT_OK, EXIT_USAGE};

/// Parses `argv` and runs the chosen subcommand, returning the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let result = match &cli.command {
        Command::Fig3Sweep(a) => commands::fig3_sweep(a, stdout),
        Command::Fig4Sweep(a) => commands::fig4_sweep(a, stdout),
        Command::Bound(a) => commands::bound(a, stdout),
        Command::Certify(a) => commands::certify(a, stdout),
        Command::State(a) => commands::state(a, stdout),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
