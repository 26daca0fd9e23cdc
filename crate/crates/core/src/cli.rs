//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or schema error, 2 weak-value pole,
//! 3 refused spectrum check.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::error::Result;
use crate::run::{
    run_bloch, run_superosc, run_weakvalue, write_field_csv, write_spectrum_csv, write_trace_csv,
};
use crate::scenario::parse_scenario;

#[derive(Debug, Parser)]
#[command(
    name = "weaklens",
    version,
    about = "Weak values, superoscillations and Bloch-sphere deformation fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weak value, pole proximity and Bargmann triangle as a JSON report.
    Weakvalue {
        scenario: PathBuf,
        /// Report path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Superoscillation trace CSV and optional spectrum CSV.
    ///
    /// Without --trace the trace goes to stdout and the JSON report to
    /// stderr; otherwise the report goes to stdout.
    Superosc {
        scenario: PathBuf,
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Requires `spectrum_check` in the scenario.
        #[arg(long)]
        spectrum: Option<PathBuf>,
    },
    /// Observable-induced field and metrics on a Bloch-sphere grid.
    Bloch {
        scenario: PathBuf,
        #[arg(long)]
        ntheta: usize,
        #[arg(long)]
        nphi: usize,
        /// CSV path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path)?))
}

pub fn execute(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Weakvalue { scenario, out } => {
            let s = parse_scenario(&scenario)?;
            let mut report = run_weakvalue(&s)?;
            match out {
                Some(path) => {
                    create(&path)?.write_all(report.to_json().as_bytes())?;
                    report.output_paths.push(path);
                }
                None => io::stdout().lock().write_all(report.to_json().as_bytes())?,
            }
        }
        Command::Superosc {
            scenario,
            trace,
            spectrum,
        } => {
            let s = parse_scenario(&scenario)?;
            if spectrum.is_some() && s.spectrum_check.is_none() {
                return Err(crate::Error::SchemaViolation {
                    field: "spectrum_check".into(),
                    reason: "--spectrum needs a spectrum_check in the scenario".into(),
                });
            }
            let mut run = run_superosc(&s)?;
            if let (Some(path), Some(report)) = (&spectrum, &run.spectrum) {
                let mut w = create(path)?;
                write_spectrum_csv(report, &mut w)?;
                w.flush()?;
                run.report.output_paths.push(path.clone());
            }
            match trace {
                Some(path) => {
                    let mut w = create(&path)?;
                    write_trace_csv(&run.trace, &mut w)?;
                    w.flush()?;
                    run.report.output_paths.push(path);
                    io::stdout()
                        .lock()
                        .write_all(run.report.to_json().as_bytes())?;
                }
                None => {
                    write_trace_csv(&run.trace, io::stdout().lock())?;
                    io::stderr()
                        .lock()
                        .write_all(run.report.to_json().as_bytes())?;
                }
            }
        }
        Command::Bloch {
            scenario,
            ntheta,
            nphi,
            out,
        } => {
            let s = parse_scenario(&scenario)?;
            let rows = run_bloch(&s, ntheta, nphi)?;
            match out {
                Some(path) => {
                    let mut w = create(&path)?;
                    write_field_csv(&rows, &mut w)?;
                    w.flush()?;
                }
                None => write_field_csv(&rows, io::stdout().lock())?,
            }
        }
    }
    Ok(())
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
