use lefschetz_core::{Characteristic, DegreeTuple, Verdict, Witness};
use serde::Serialize;

use crate::args::Property;

/// One JSONL line. Field order is the serialized key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub degrees: Vec<u32>,
    pub normalized: Vec<u32>,
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub property: Property,
    pub status: String,
    pub method: String,
    pub witness: Option<WitnessRecord>,
    pub runtime_micros: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WitnessRecord {
    Degree { degree: u32, power: u32 },
    Prime { prime: u64, exponent: u32 },
    Syzygy { degree: u32, coefficients: Vec<String> },
    GapPoint { scale: i32, point: [i64; 3] },
    Theorem { id: String },
}

impl From<&Witness> for WitnessRecord {
    fn from(w: &Witness) -> Self {
        match w {
            Witness::Degree { degree, power } => WitnessRecord::Degree { degree: *degree, power: *power },
            Witness::Prime { prime, exponent } => WitnessRecord::Prime { prime: *prime, exponent: *exponent },
            Witness::Syzygy { degree, coefficients } => {
                WitnessRecord::Syzygy { degree: *degree, coefficients: coefficients.clone() }
            }
            Witness::GapPoint { scale, point } => WitnessRecord::GapPoint { scale: *scale, point: *point },
            Witness::Theorem { id } => WitnessRecord::Theorem { id: id.as_str().to_string() },
        }
    }
}

impl CensusRecord {
    pub fn new(
        tuple: &DegreeTuple,
        characteristic: Characteristic,
        property: Property,
        verdict: &Verdict,
        runtime_micros: u64,
    ) -> Self {
        Self {
            degrees: tuple.original().to_vec(),
            normalized: tuple.degrees().to_vec(),
            characteristic: characteristic.value(),
            property,
            status: verdict.status.as_str().to_string(),
            method: verdict.method.to_string(),
            witness: verdict.witness.as_ref().map(WitnessRecord::from),
            runtime_micros,
        }
    }

    pub fn to_json_line(&self) -> serde_json::Result<String> {
        serde_json::to_string(self)
    }

    /// Columns: degrees, normalized, char, property, status, method, witness, runtime_micros.
    /// Tuples are comma-joined and the witness is its JSON object or empty.
    pub fn csv_fields(&self) -> serde_json::Result<[String; 8]> {
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        Ok([
            join(&self.degrees),
            join(&self.normalized),
            self.characteristic.to_string(),
            self.property.as_str().to_string(),
            self.status.clone(),
            self.method.clone(),
            match &self.witness {
                Some(w) => serde_json::to_string(w)?,
                None => String::new(),
            },
            self.runtime_micros.to_string(),
        ])
    }
}

pub const CSV_COLUMNS: [&str; 8] =
    ["degrees", "normalized", "char", "property", "status", "method", "witness", "runtime_micros"];

pub fn version_header() -> String {
    format!("# lefschetz {}", env!("CARGO_PKG_VERSION"))
}
