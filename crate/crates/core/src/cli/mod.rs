//! Command-line front end: argument parsing, figure presets, parallel sweeps
//! and CSV/JSON output.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 bad configuration, 3 numerical
//! failure.

mod commands;
mod config;
mod output;

pub use commands::{
    cmd_coefficients, cmd_extrema, cmd_poynting, cmd_pulseparams, cmd_spectrum, cmd_variances, run_command, Cell,
    Table, COEFFICIENTS_HEADER, EXTREMA_HEADER, POYNTING_HEADER, PULSEPARAMS_HEADER, SPECTRUM_HEADER,
    VARIANCES_HEADER,
};
pub use config::{Args, Command, Format, Preset, RunConfig, Sweep, SweepVar};
pub use output::{write_csv, write_json};

use clap::Parser;
use std::fs::File;
use std::io::{BufWriter, Write};

use crate::error::Result;

/// Computes the table for `cfg` and writes it to the configured sink.
pub fn run(cfg: &RunConfig) -> Result<()> {
    let table = run_command(cfg)?;
    match &cfg.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            emit(&table, cfg, &mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = std::io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            emit(&table, cfg, &mut w)?;
            w.flush()?;
        }
    }
    Ok(())
}

fn emit(table: &Table, cfg: &RunConfig, w: &mut impl Write) -> Result<()> {
    match cfg.format {
        Format::Csv => write_csv(table, w),
        Format::Json => write_json(table, cfg, w),
    }
}

/// Parses `args` (program name first), runs, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let parsed = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    let result = std::panic::catch_unwind(|| RunConfig::from_args(&parsed).and_then(|cfg| run(&cfg)));
    match result {
        Ok(Ok(())) => 0,
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
        Err(_) => {
            eprintln!("error: internal failure");
            3
        }
    }
}
