//! Command-line front end: argument parsing, dispatch and JSON/CSV output.

mod args;
mod commands;

use std::ffi::OsString;
use std::io::Write;

use barnes_ehrhart::Error;
use clap::Parser;

pub use args::Cli;

/// Exit status for an error class.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InternalConsistency(_) => 1,
        Error::Resource(_) => 3,
        _ => 2,
    }
}

fn error_line(kind: &str, message: &str) -> String {
    serde_json::json!({ "error": kind, "message": message }).to_string()
}

/// Parses `argv` (program name first), runs the subcommand and returns the
/// process exit code. Output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("usage error").trim_start_matches("error: ");
            let _ = writeln!(err, "{}", error_line("usage", first));
            return 2;
        }
    };
    match commands::dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "{}", error_line(e.kind(), &e.to_string()));
            exit_code(&e)
        }
    }
}
