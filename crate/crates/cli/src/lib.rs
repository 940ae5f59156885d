//! Library half of the `patavoid` command: argument definitions, the output
//! record, and the command runner.

pub mod args;
pub mod commands;
pub mod output;

use std::ffi::OsString;
use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

pub use args::Cli;
pub use output::{Format, Outcome, OutputRecord, PatternCount, Term};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] patavoid::Error),
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFICATION_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Runs one command and builds its record.
pub fn run(cli: &Cli, argv: Vec<String>) -> Result<OutputRecord, CliError> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.get())
            .build_global()
            .map_err(|e| CliError::Usage(format!("cannot size the thread pool: {e}")))?;
    }
    let start = Instant::now();
    let computed = commands::execute(&cli.command)?;
    let elapsed = start.elapsed();
    Ok(OutputRecord {
        command: computed.name.to_string(),
        argv,
        parameters: computed.parameters,
        result: computed.result,
        elapsed_us: (!cli.no_timing).then_some(elapsed.as_micros() as u64),
    })
}

/// Entry point shared by the binary: parse, run, print, pick the exit code.
pub fn main_with_args(args: impl IntoIterator<Item = OsString>) -> ExitCode {
    let args: Vec<OsString> = args.into_iter().collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let argv = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Plain
    };
    match run(&cli, argv) {
        Ok(record) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not worth a panic
            let _ = stdout.write_all(record.render(format).as_bytes());
            if format != Format::Json {
                if let Some(us) = record.elapsed_us {
                    eprintln!("elapsed: {:.3} ms", us as f64 / 1000.0);
                }
            }
            ExitCode::from(if record.failed() {
                EXIT_VERIFICATION_FAILED
            } else {
                EXIT_OK
            })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
