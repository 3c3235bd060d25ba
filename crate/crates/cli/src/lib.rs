//! Command-line front end: single decisions, determinant reports, censuses,
//! cross-checks and the concordance.
//!
//! Exit codes: 0 holds (or success), 1 fails (or disagreements found), 2 error.

pub mod args;
pub mod census;
pub mod concordance;
pub mod decide;
mod error;
pub mod record;
pub mod verify;

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::time::Instant;

use clap::Parser;
use lefschetz_core::detformula::{nilp_determinant_bruteforce, proctor_determinant};
use lefschetz_core::Characteristic;
use serde_json::{json, Map, Value};

pub use args::{Cli, Command};
pub use error::CliError;

use args::{DecideArgs, DetArgs, Property};
use record::CensusRecord;

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Parses `argv` and runs the command, writing to the given streams.
pub fn run_from<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_HOLDS };
            let _ = if e.use_stderr() { write!(err, "{}", e.render()) } else { write!(out, "{}", e.render()) };
            return code;
        }
    };
    match run(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Wlp(a) => cmd_decide(Property::Wlp, a, out, err),
        Command::Slp(a) => cmd_decide(Property::Slp, a, out, err),
        Command::Det(a) => cmd_det(a, out),
        Command::Census(a) => {
            let plan = census::CensusPlan::from_args(a)?;
            let records = census::run_census(&plan)?;
            match &plan.out {
                Some(path) => {
                    let file = File::create(path).map_err(|source| CliError::Output { path: path.clone(), source })?;
                    let mut w = BufWriter::new(file);
                    census::write_records(&records, plan.format, &mut w)?;
                    w.flush().map_err(|source| CliError::Output { path: path.clone(), source })?;
                }
                None => census::write_records(&records, plan.format, out)?,
            }
            Ok(EXIT_HOLDS)
        }
        Command::Verify(a) => {
            let report = verify::run_verify(a)?;
            write!(out, "{report}")?;
            Ok(if report.is_clean() { EXIT_HOLDS } else { EXIT_FAILS })
        }
        Command::Concordance(a) => {
            let doc = concordance::generate_concordance();
            match &a.out {
                Some(path) => {
                    std::fs::write(path, doc).map_err(|source| CliError::Output { path: path.clone(), source })?
                }
                None => out.write_all(doc.as_bytes())?,
            }
            Ok(EXIT_HOLDS)
        }
    }
}

fn cmd_decide(property: Property, a: &DecideArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let tuple = decide::parse_degrees(&a.degrees, a.allow_unit)?;
    let characteristic = Characteristic::new(a.characteristic)?;
    let start = Instant::now();
    let decision = decide::decide(property, &tuple, characteristic, a.method)?;
    let micros = start.elapsed().as_micros() as u64;
    if a.trace {
        match &decision.trace {
            Some(t) => write!(err, "{t}")?,
            None => writeln!(err, "method chosen explicitly; no cascade trace")?,
        }
    }
    let record = CensusRecord::new(&tuple, characteristic, property, &decision.verdict, micros);
    writeln!(out, "{}", record.to_json_line()?)?;
    Ok(if decision.verdict.holds_property() { EXIT_HOLDS } else { EXIT_FAILS })
}

fn cmd_det(a: &DetArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let tuple = decide::parse_degrees(&a.degrees, a.allow_unit)?;
    let report = proctor_determinant(&tuple)?;
    let magnitude: Map<String, Value> =
        report.magnitude.factors().iter().map(|(p, e)| (p.to_string(), json!(e))).collect();
    let mut doc = json!({
        "degrees": tuple.original(),
        "normalized": tuple.degrees(),
        "socle_degree": tuple.socle_degree(),
        "magnitude": magnitude,
        "value": report.magnitude.value().to_string(),
        "bad_primes": report.bad_primes,
        "square_size": report.square_size,
    });
    if a.bruteforce {
        let det = nilp_determinant_bruteforce(&tuple)?;
        doc["determinant"] = json!(det.to_string());
    }
    writeln!(out, "{}", serde_json::to_string(&doc)?)?;
    Ok(EXIT_HOLDS)
}
