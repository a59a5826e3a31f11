//! `sdptool`: batch front end for the sdp library. Results go to stdout as
//! JSON (or text for `gen-axioms --format text`); errors go to stderr as a
//! JSON error object with a nonzero exit status.

mod args;
mod commands;
mod error;
mod files;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::Cli;
use error::CliError;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail(&CliError::Usage(first_line(&e.to_string()).to_string())),
    };
    match commands::run(cli.command) {
        Ok(out) => {
            // A closed pipe on stdout is the reader's choice, not an error.
            let _ = writeln!(std::io::stdout().lock(), "{}", out.stdout);
            match out.failure {
                Some(e) => fail(&e),
                None => ExitCode::SUCCESS,
            }
        }
        Err(e) => fail(&e),
    }
}

fn first_line(s: &str) -> &str {
    let s = s.trim_start_matches("error: ");
    s.lines().next().unwrap_or(s)
}

fn fail(e: &CliError) -> ExitCode {
    eprintln!("{}", e.to_json());
    ExitCode::from(e.exit_code() as u8)
}
