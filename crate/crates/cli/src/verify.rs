use std::fmt;

use lefschetz_core::classify::{
    check_conjectures, classify_slp, classify_wlp, descending_tuples, ClassifyOptions, ConjectureRange,
};
use lefschetz_core::combinat::primes_up_to;
use lefschetz_core::detformula::proctor_determinant;
use lefschetz_core::oracle::{has_slp_oracle, has_wlp_oracle, has_wlp_via_mgd};
use lefschetz_core::syzgap::wlp_three_gen_via_syzgap;
use lefschetz_core::{Characteristic, DegreeTuple, Status};
use rayon::prelude::*;

use crate::args::{Property, VerifyArgs, VerifyMode};
use crate::census::with_pool;
use crate::record::version_header;
use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disagreement {
    pub description: String,
    /// Command that recomputes the disputed value with the rank oracle.
    pub reproduce: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub mode: VerifyMode,
    pub checked: usize,
    pub disagreements: Vec<Disagreement>,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.disagreements.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", version_header())?;
        writeln!(
            f,
            "mode {}: checked {}, disagreements {}",
            self.mode.as_str(),
            self.checked,
            self.disagreements.len()
        )?;
        for d in &self.disagreements {
            writeln!(f, "disagreement: {}", d.description)?;
            writeln!(f, "  reproduce: {}", d.reproduce)?;
        }
        Ok(())
    }
}

fn joined(d: &DegreeTuple) -> String {
    d.original().iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn reproduce(property: Property, d: &DegreeTuple, c: Characteristic) -> String {
    let unit = if d.has_units() { " --allow-unit" } else { "" };
    format!("lefschetz {} --degrees {} --char {} --method oracle{unit}", property.as_str(), joined(d), c)
}

fn tuples(n_max: usize, dmax: u32) -> Vec<DegreeTuple> {
    (1..=n_max)
        .flat_map(|n| descending_tuples(n + 1, 2, dmax))
        .map(|raw| DegreeTuple::new(&raw).expect("entries >= 2"))
        .collect()
}

fn characteristics(pmax: u64, with_zero: bool) -> Vec<Characteristic> {
    let zero = with_zero.then_some(0);
    zero.into_iter().chain(primes_up_to(pmax)).map(|p| Characteristic::new(p).expect("prime or zero")).collect()
}

type Check = Option<Disagreement>;

fn compare(property: Property, d: &DegreeTuple, c: Characteristic, route: &str, got: Status, oracle: Status) -> Check {
    (got != oracle).then(|| Disagreement {
        description: format!("{} {d} char {c}: {route} says {got}, oracle says {oracle}", property.as_str()),
        reproduce: reproduce(property, d, c),
    })
}

/// Bad primes of the determinant against WLP failures, for every prime up to the socle degree.
fn det_tasks(args: &VerifyArgs) -> Vec<(DegreeTuple, Characteristic)> {
    tuples(args.n, args.dmax)
        .into_iter()
        .filter(|d| d.socle_degree() % 2 == 1 && d.top() <= d.half_socle_ceil())
        .flat_map(|d| characteristics(u64::from(d.socle_degree()), false).into_iter().map(move |c| (d.clone(), c)))
        .collect()
}

fn det_check(d: &DegreeTuple, c: Characteristic) -> Check {
    let report = proctor_determinant(d).expect("filtered to the determinant hypotheses");
    compare(Property::Wlp, d, c, "determinant", report.verdict(c).status, has_wlp_oracle(d, c).status)
}

/// Triples `a <= b <= c < a + b` with entries in `1..=dmax`.
pub fn stable_triples(dmax: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in 1..=dmax {
        for b in a..=dmax {
            for c in b..(a + b).min(dmax + 1) {
                out.push([a, b, c]);
            }
        }
    }
    out
}

pub fn run_verify(args: &VerifyArgs) -> Result<VerifyReport, CliError> {
    let mode = args.mode;
    let report = |checked, disagreements| VerifyReport { mode, checked, disagreements };
    if mode == VerifyMode::Conjectures {
        let r =
            with_pool(args.jobs, || check_conjectures(ConjectureRange { n_min: 1, n_max: args.n, dmax: args.dmax }))?;
        let disagreements = r
            .counterexamples
            .iter()
            .map(|ce| {
                let property = if ce.conjecture == "even-socle-gap" { Property::Wlp } else { Property::Slp };
                Disagreement {
                    description: format!(
                        "{}: {} char {} expected {}, oracle says {}",
                        ce.conjecture,
                        ce.tuple,
                        ce.characteristic,
                        if ce.expected { "holds" } else { "fails" },
                        ce.observed
                    ),
                    reproduce: reproduce(property, &ce.tuple, ce.characteristic),
                }
            })
            .collect();
        return Ok(report(r.even_gap_checked + r.small_top_checked, disagreements));
    }

    let tasks: Vec<(DegreeTuple, Characteristic)> = match mode {
        VerifyMode::DetVsOracle => det_tasks(args),
        VerifyMode::SyzgapVsOracle => {
            let chars = characteristics(args.pmax, false);
            stable_triples(args.dmax)
                .into_iter()
                .flat_map(|t| {
                    let d = DegreeTuple::new(&t).expect("positive");
                    chars.iter().map(move |&c| (d.clone(), c)).collect::<Vec<_>>()
                })
                .collect()
        }
        _ => {
            let chars = characteristics(args.pmax, true);
            tuples(args.n, args.dmax)
                .into_iter()
                .flat_map(|d| chars.iter().map(move |&c| (d.clone(), c)).collect::<Vec<_>>())
                .collect()
        }
    };

    let checks: Vec<Vec<Check>> = with_pool(args.jobs, || {
        tasks
            .par_iter()
            .map(|(d, c)| match mode {
                VerifyMode::DetVsOracle => vec![det_check(d, *c)],
                VerifyMode::MgdVsOracle => {
                    vec![compare(
                        Property::Wlp,
                        d,
                        *c,
                        "mgd",
                        has_wlp_via_mgd(d, *c).status,
                        has_wlp_oracle(d, *c).status,
                    )]
                }
                VerifyMode::SyzgapVsOracle => {
                    let [a, b, cc] = [0, 1, 2].map(|i| u64::from(d.degrees()[i]));
                    let p = c.prime().expect("prime characteristics only");
                    let gap = wlp_three_gen_via_syzgap(a, b, cc, p).expect("stable triple");
                    vec![compare(Property::Wlp, d, *c, "syzygy gap", gap.status, has_wlp_oracle(d, *c).status)]
                }
                VerifyMode::ClassifyVsOracle => {
                    let mut out = Vec::new();
                    let w = classify_wlp(d, *c, ClassifyOptions::THEOREMS_ONLY).verdict;
                    if w.is_decided() {
                        out.push(compare(
                            Property::Wlp,
                            d,
                            *c,
                            "classification",
                            w.status,
                            has_wlp_oracle(d, *c).status,
                        ));
                    }
                    let s = classify_slp(d, *c, ClassifyOptions::THEOREMS_ONLY).verdict;
                    if s.is_decided() {
                        out.push(compare(
                            Property::Slp,
                            d,
                            *c,
                            "classification",
                            s.status,
                            has_slp_oracle(d, *c).status,
                        ));
                    }
                    out
                }
                VerifyMode::Conjectures => unreachable!("handled above"),
            })
            .collect()
    })?;
    let checked = checks.iter().map(Vec::len).sum();
    Ok(report(checked, checks.into_iter().flatten().flatten().collect()))
}
