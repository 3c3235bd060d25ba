use lefschetz_core::classify::{classify_slp, classify_wlp, ClassifyOptions, MethodTrace};
use lefschetz_core::detformula::proctor_determinant;
use lefschetz_core::oracle::{has_slp_oracle, has_wlp_oracle};
use lefschetz_core::syzgap::{slp_two_var, wlp_three_gen_via_syzgap};
use lefschetz_core::{Characteristic, DegreeTuple, Status, Verdict};

use crate::args::{MethodChoice, Property};
use crate::CliError;

/// Parses `"5,5,5"`; exponents of 1 need `allow_unit`.
pub fn parse_degrees(input: &str, allow_unit: bool) -> Result<DegreeTuple, CliError> {
    let bad = |reason: String| CliError::Degrees { input: input.to_string(), reason };
    let raw = input
        .split(',')
        .map(|s| s.trim().parse::<i64>().map_err(|e| bad(format!("{s:?}: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let tuple = DegreeTuple::normalize(&raw)?;
    if !allow_unit && tuple.has_units() {
        return Err(CliError::UnitNotAllowed);
    }
    Ok(tuple)
}

pub struct Decision {
    pub verdict: Verdict,
    pub trace: Option<MethodTrace>,
}

pub fn decide(
    property: Property,
    tuple: &DegreeTuple,
    characteristic: Characteristic,
    method: MethodChoice,
) -> Result<Decision, CliError> {
    let plain = |verdict| Ok(Decision { verdict, trace: None });
    match method {
        MethodChoice::Auto | MethodChoice::Theorem => {
            let options =
                if method == MethodChoice::Auto { ClassifyOptions::default() } else { ClassifyOptions::THEOREMS_ONLY };
            let c = match property {
                Property::Wlp => classify_wlp(tuple, characteristic, options),
                Property::Slp => classify_slp(tuple, characteristic, options),
            };
            if c.verdict.status == Status::Unknown {
                return Err(CliError::Inapplicable {
                    method: "theorem",
                    reason: format!("no closed-form result decides {tuple} in characteristic {characteristic}"),
                });
            }
            Ok(Decision { verdict: c.verdict, trace: Some(c.trace) })
        }
        MethodChoice::Oracle => plain(match property {
            Property::Wlp => has_wlp_oracle(tuple, characteristic),
            Property::Slp => has_slp_oracle(tuple, characteristic),
        }),
        MethodChoice::Det => {
            if property == Property::Slp {
                return Err(CliError::Inapplicable {
                    method: "det",
                    reason: "the determinant decides WLP only".into(),
                });
            }
            let report = proctor_determinant(tuple)
                .map_err(|e| CliError::Inapplicable { method: "det", reason: e.to_string() })?;
            plain(report.verdict(characteristic))
        }
        MethodChoice::Syzgap => {
            let syzgap_err =
                |e: lefschetz_core::Error| CliError::Inapplicable { method: "syzgap", reason: e.to_string() };
            let d: Vec<u64> = tuple.degrees().iter().map(|&v| u64::from(v)).collect();
            match (property, d.as_slice()) {
                (Property::Wlp, &[a, b, c]) => {
                    let Some(p) = characteristic.prime() else {
                        return Err(CliError::Inapplicable {
                            method: "syzgap",
                            reason: "the gap criterion needs a prime characteristic".into(),
                        });
                    };
                    plain(wlp_three_gen_via_syzgap(a, b, c, p).map_err(syzgap_err)?)
                }
                (Property::Slp, &[a, b]) => plain(slp_two_var(a, b, characteristic).map_err(syzgap_err)?),
                (Property::Wlp, _) => {
                    Err(CliError::Inapplicable { method: "syzgap", reason: "WLP needs three exponents".into() })
                }
                (Property::Slp, _) => {
                    Err(CliError::Inapplicable { method: "syzgap", reason: "SLP needs two exponents".into() })
                }
            }
        }
    }
}
