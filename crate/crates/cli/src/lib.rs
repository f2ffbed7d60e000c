//! Library side of the `gevrey` binary: argument parsing, dispatch, rendering
//! and the sequence cache. [`run`] is the whole program minus process exit.

pub mod cache;
pub mod cli;
mod commands;
pub mod render;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

pub use cli::{Cli, Command, Format, GlobalOpts};
pub use commands::{Route, DISPATCH, MODULE_OPERATIONS};

pub const EXIT_OK: u8 = 0;
pub const EXIT_ARGUMENT: u8 = 1;
pub const EXIT_CONSISTENCY: u8 = 2;

#[derive(Debug)]
pub enum CliError {
    Argument(String),
    Consistency(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Argument(_) => EXIT_ARGUMENT,
            CliError::Consistency(_) => EXIT_CONSISTENCY,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Argument(m) | CliError::Consistency(m) => f.write_str(m),
        }
    }
}

impl From<gevrey::Error> for CliError {
    fn from(e: gevrey::Error) -> Self {
        if e.is_consistency() {
            CliError::Consistency(e.to_string())
        } else {
            CliError::Argument(e.to_string())
        }
    }
}

/// Parses `args` (program name first), runs the command and writes the
/// rendered report to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_ARGUMENT
                }
            };
        }
    };
    let result = commands::execute(&cli, err).and_then(|report| {
        let text = report.render(cli.global.format)?;
        Ok((report, text))
    });
    match result {
        Ok((report, text)) => {
            if out
                .write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .is_err()
            {
                return EXIT_ARGUMENT;
            }
            match report.failure() {
                Some(msg) => {
                    let _ = writeln!(err, "error: {msg}");
                    EXIT_CONSISTENCY
                }
                None => EXIT_OK,
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
