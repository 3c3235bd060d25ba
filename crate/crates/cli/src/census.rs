use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use lefschetz_core::classify::descending_tuples;
use lefschetz_core::combinat::primes_up_to;
use lefschetz_core::{Characteristic, DegreeTuple};
use rayon::prelude::*;
use serde::Deserialize;

use crate::args::{CensusArgs, MethodChoice, OutputFormat, Property};
use crate::decide::decide;
use crate::record::{version_header, CensusRecord, CSV_COLUMNS};
use crate::CliError;

/// Preset file keys; command-line flags take precedence.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CensusConfig {
    pub n: Option<usize>,
    pub dmax: Option<u32>,
    pub pmax: Option<u64>,
    pub property: Option<Property>,
    pub format: Option<OutputFormat>,
    pub jobs: Option<usize>,
    pub deterministic: Option<bool>,
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusPlan {
    pub n: usize,
    pub dmax: u32,
    pub pmax: u64,
    pub property: Property,
    pub format: OutputFormat,
    pub jobs: Option<usize>,
    pub deterministic: bool,
    pub out: Option<PathBuf>,
}

impl CensusPlan {
    pub fn from_args(args: &CensusArgs) -> Result<Self, CliError> {
        let config = match &args.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Config { path: path.clone(), reason: e.to_string() })?;
                toml::from_str::<CensusConfig>(&text)
                    .map_err(|e| CliError::Config { path: path.clone(), reason: e.to_string() })?
            }
            None => CensusConfig::default(),
        };
        Ok(Self {
            n: args.n.or(config.n).ok_or(CliError::MissingParameter("n"))?,
            dmax: args.dmax.or(config.dmax).ok_or(CliError::MissingParameter("dmax"))?,
            pmax: args.pmax.or(config.pmax).ok_or(CliError::MissingParameter("pmax"))?,
            property: args.property.or(config.property).ok_or(CliError::MissingParameter("property"))?,
            format: args.format.or(config.format).unwrap_or(OutputFormat::Jsonl),
            jobs: args.jobs.or(config.jobs),
            deterministic: args.deterministic || config.deterministic.unwrap_or(false),
            out: args.out.clone().or(config.out),
        })
    }

    /// `(tuple, prime)` pairs ordered by tuple (lexicographic) then prime.
    pub fn tasks(&self) -> Vec<(DegreeTuple, Characteristic)> {
        if self.n == 0 {
            return Vec::new();
        }
        let primes = primes_up_to(self.pmax);
        descending_tuples(self.n + 1, 2, self.dmax)
            .into_iter()
            .flat_map(|raw| {
                let tuple = DegreeTuple::new(&raw).expect("entries >= 2");
                primes.iter().map(move |&p| (tuple.clone(), Characteristic::new(p).expect("prime"))).collect::<Vec<_>>()
            })
            .collect()
    }
}

pub fn with_pool<T: Send>(jobs: Option<usize>, work: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j);
    }
    let pool = builder.build().map_err(|e| CliError::Pool(e.to_string()))?;
    Ok(pool.install(work))
}

/// Records in task order, whatever the completion order.
pub fn run_census(plan: &CensusPlan) -> Result<Vec<CensusRecord>, CliError> {
    let tasks = plan.tasks();
    let property = plan.property;
    let deterministic = plan.deterministic;
    with_pool(plan.jobs, || {
        tasks
            .par_iter()
            .map(|(tuple, c)| {
                let start = Instant::now();
                let decision = decide(property, tuple, *c, MethodChoice::Auto)?;
                let micros = if deterministic { 0 } else { start.elapsed().as_micros() as u64 };
                Ok(CensusRecord::new(tuple, *c, property, &decision.verdict, micros))
            })
            .collect::<Result<Vec<_>, CliError>>()
    })?
}

/// Writes the version header and records; nothing at all when there are no records.
pub fn write_records(records: &[CensusRecord], format: OutputFormat, out: &mut dyn Write) -> Result<(), CliError> {
    if records.is_empty() {
        return Ok(());
    }
    writeln!(out, "{}", version_header())?;
    match format {
        OutputFormat::Jsonl => {
            for r in records {
                writeln!(out, "{}", r.to_json_line()?)?;
            }
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(CSV_COLUMNS)?;
            for r in records {
                w.write_record(r.csv_fields()?)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
