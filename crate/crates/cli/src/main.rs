//! `genseq`: evaluate, enumerate and verify generalized Fibonacci and Lucas
//! numbers from the command line.
//!
//! Exit codes: 0 success, 1 verification failures, 2 usage or hypothesis errors.
//! `GENSEQ_THREADS` caps the worker threads used by verification and counting.

mod args;
mod commands;
mod output;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use crate::args::Cli;
use crate::commands::EXIT_USAGE;

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("GENSEQ_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| format!("GENSEQ_THREADS must be a positive integer (got `{raw}`)"))?;
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(message) = configure_threads() {
        eprintln!("error: {message}");
        return ExitCode::from(EXIT_USAGE);
    }
    let mut out = BufWriter::new(io::stdout().lock());
    let result = commands::run(&cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(code), Ok(())) => ExitCode::from(code),
        (Err(e), _) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
        (Ok(_), Err(e)) => {
            eprintln!("error: write failed: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
