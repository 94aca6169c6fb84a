//! Command-line front end for `extremal-core`: graph6 line streams in,
//! human tables, JSON lines or CSV out.
//!
//! Exit codes: 0 success, 1 when a promised object was not found, 2 for
//! usage errors, 3 for input that cannot be read or parsed.

use std::ffi::OsString;
use std::io::{self, BufRead, Write};

use clap::error::ErrorKind;
use clap::Parser;

pub mod args;
mod commands;
pub mod input;
pub mod parallel;
pub mod report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_FOUND: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MALFORMED: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Malformed(String),
    #[error("write failed: {0}")]
    Io(#[source] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Malformed(_) | CliError::Io(_) => EXIT_MALFORMED,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    NotFound,
}

/// Runs one command line (including the program name) against the given
/// streams and returns the process exit code.
pub fn run<I, T>(argv: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    return EXIT_OK;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(stderr, "{}", e.render());
            return code;
        }
    };
    let mut ctx = commands::Ctx { format: cli.format, jobs: cli.jobs, stdin, stdout };
    let result = commands::dispatch(cli.command, &mut ctx).and_then(|outcome| {
        ctx.stdout.flush().map_err(CliError::Io)?;
        Ok(outcome)
    });
    match result {
        Ok(Outcome::Success) => EXIT_OK,
        Ok(Outcome::NotFound) => EXIT_NOT_FOUND,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

/// Convenience wrapper for tests: runs with `input` on stdin and returns
/// `(exit code, stdout, stderr)`.
pub fn run_captured<I, T>(argv: I, input: &str) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut stdin = io::Cursor::new(input.as_bytes().to_vec());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut stdin, &mut out, &mut err);
    (code, String::from_utf8(out).expect("utf-8 output"), String::from_utf8(err).expect("utf-8 output"))
}
