//! The decision cascade: closed-form results first, cheapest first, with the
//! rank oracle as the last resort. Every step records whether its hypotheses
//! held, so each verdict can be audited.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::combinat::{is_prime, p_adic_valuation, prime_power_in_range, primes_up_to};
use crate::detformula::{is_large_top, large_top_case, proctor_determinant};
use crate::domain::{Characteristic, DegreeTuple};
use crate::oracle::{has_slp_oracle, has_wlp_oracle};
use crate::poly::build_near_uniform_syzygy;
use crate::syzgap::{slp_dd_criterion, slp_two_var, wlp_three_gen_via_syzgap};
use crate::{Error, Method, Result, Status, TheoremId, Verdict, Witness};

/// A step of the cascade.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Theorem(TheoremId),
    Determinant,
    SyzygyGap,
    /// Even socle degree with `p = t/2 + 1`: no theorem applies.
    ConjectureGap,
    Oracle,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Route::Theorem(id) => write!(f, "theorem:{id}"),
            Route::Determinant => f.write_str("determinant"),
            Route::SyzygyGap => f.write_str("syzygy-gap"),
            Route::ConjectureGap => f.write_str("conjecture-gap"),
            Route::Oracle => f.write_str("oracle"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub route: Route,
    pub applicable: bool,
    pub note: String,
}

/// Ordered record of the cascade. At most one step is decisive, and it is the
/// last applicable one.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MethodTrace {
    pub steps: Vec<TraceStep>,
    pub decisive: Option<Route>,
}

impl MethodTrace {
    fn skip(&mut self, route: Route, note: impl Into<String>) {
        self.steps.push(TraceStep { route, applicable: false, note: note.into() });
    }

    fn inconclusive(&mut self, route: Route, note: impl Into<String>) {
        self.steps.push(TraceStep { route, applicable: true, note: note.into() });
    }

    fn decide(&mut self, route: Route, note: impl Into<String>) {
        self.steps.push(TraceStep { route, applicable: true, note: note.into() });
        self.decisive = Some(route);
    }
}

impl fmt::Display for MethodTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            let mark = if Some(step.route) == self.decisive && step.applicable {
                "*"
            } else if step.applicable {
                "~"
            } else {
                "-"
            };
            writeln!(f, "{mark} {:<36} {}", step.route.to_string(), step.note)?;
        }
        match self.decisive {
            Some(r) => writeln!(f, "decided by {r}"),
            None => writeln!(f, "undecided"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    pub trace: MethodTrace,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Decide by the rank oracle when no closed form applies.
    pub oracle_fallback: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self { oracle_fallback: true }
    }
}

impl ClassifyOptions {
    pub const THEOREMS_ONLY: ClassifyOptions = ClassifyOptions { oracle_fallback: false };
}

fn finish_with_oracle(
    mut trace: MethodTrace,
    options: ClassifyOptions,
    oracle: impl FnOnce() -> Verdict,
) -> Classification {
    if options.oracle_fallback {
        let verdict = oracle();
        trace.decide(Route::Oracle, "rank of the multiplication maps");
        Classification { verdict, trace }
    } else {
        trace.skip(Route::Oracle, "oracle fallback disabled");
        Classification { verdict: Verdict::unknown(Method::Oracle), trace }
    }
}

/// Algebras with fewer than two non-unit exponents are `K` or `K[x]/(x^a)`,
/// where every power of `x` has maximal rank.
fn trivial(d: &DegreeTuple, characteristic: Characteristic, slp: bool) -> Option<Classification> {
    if d.without_units().is_some() {
        return None;
    }
    let mut trace = MethodTrace::default();
    let verdict = if slp { has_slp_oracle(d, characteristic) } else { has_wlp_oracle(d, characteristic) };
    trace.decide(Route::Oracle, "at most one non-unit exponent");
    Some(Classification { verdict, trace })
}

/// WLP fails when `d_1 <= p <= d_0`: every mixed term of `l^{d_0}` vanishes.
pub fn frobenius_top_power_applies(d: &DegreeTuple, p: u64) -> bool {
    d.n() >= 2 && d.top() <= d.half_socle_ceil() && u64::from(d.degrees()[1]) <= p && p <= u64::from(d.top())
}

/// WLP fails when some `p^m`, `m >= 1`, lies in `[d_0, ceil(t/2)]`.
pub fn prime_power_window(d: &DegreeTuple, p: u64) -> Option<u64> {
    if d.n() < 2 || d.top() > d.half_socle_ceil() {
        return None;
    }
    prime_power_in_range(p, u64::from(d.top()), u64::from(d.half_socle_ceil()))
}

/// `(d, ..., d, d-1)` with `n >= 4`, `d >= 3`, `d` or `n` odd, and `2 <= p < d`.
pub fn uniform_one_short_fails(d: &DegreeTuple, p: u64) -> bool {
    let deg = d.degrees();
    let n = d.n();
    let top = d.top();
    n >= 4
        && top >= 3
        && deg[..n].iter().all(|&v| v == top)
        && deg[n] == top - 1
        && (top % 2 == 1 || n % 2 == 1)
        && p < u64::from(top)
}

/// `(d, d, d, d-3)` with `d >= 6`; returns `d`.
pub fn dddd_minus_three(d: &DegreeTuple) -> Option<u32> {
    let deg = d.degrees();
    (deg.len() == 4 && deg[0] >= 6 && deg[1] == deg[0] && deg[2] == deg[0] && deg[3] == deg[0] - 3).then_some(deg[0])
}

/// Classification of WLP in the given characteristic.
pub fn classify_wlp(d: &DegreeTuple, characteristic: Characteristic, options: ClassifyOptions) -> Classification {
    if let Some(c) = trivial(d, characteristic, false) {
        return c;
    }
    let reduced = d.without_units().expect("checked above");
    let d = &reduced;
    let mut trace = MethodTrace::default();
    let t = d.socle_degree();
    let n = d.n();
    let top = d.top();
    let theorem = |id| Route::Theorem(id);
    let decided = |mut trace: MethodTrace, route: Route, note: String, verdict: Verdict| {
        trace.decide(route, note);
        Classification { verdict, trace }
    };

    let Some(p) = characteristic.prime() else {
        return decided(
            trace,
            theorem(TheoremId::CharZero),
            "characteristic zero".into(),
            Verdict::by_theorem(TheoremId::CharZero, true),
        );
    };
    trace.skip(theorem(TheoremId::CharZero), format!("characteristic {p}"));

    if n == 1 {
        return decided(
            trace,
            theorem(TheoremId::TwoVariablesWlp),
            "two variables".into(),
            Verdict::by_theorem(TheoremId::TwoVariablesWlp, true),
        );
    }
    trace.skip(theorem(TheoremId::TwoVariablesWlp), format!("{} variables", n + 1));

    if top > d.half_socle_ceil() {
        return decided(
            trace,
            theorem(TheoremId::LargeTopDegree),
            format!("d_0 = {top} > ceil(t/2) = {}", d.half_socle_ceil()),
            Verdict::by_theorem(TheoremId::LargeTopDegree, true),
        );
    }
    trace.skip(theorem(TheoremId::LargeTopDegree), format!("d_0 = {top} <= ceil(t/2) = {}", d.half_socle_ceil()));

    if frobenius_top_power_applies(d, p) {
        return decided(
            trace,
            theorem(TheoremId::FrobeniusTopPower),
            format!("d_1 = {} <= p <= d_0 = {top}", d.degrees()[1]),
            Verdict::by_theorem(TheoremId::FrobeniusTopPower, false),
        );
    }
    trace.skip(theorem(TheoremId::FrobeniusTopPower), "p outside [d_1, d_0]");

    if let Some(q) = prime_power_window(d, p) {
        return decided(
            trace,
            theorem(TheoremId::PrimePowerWindow),
            format!("d_0 <= {q} <= ceil(t/2)"),
            Verdict::by_theorem(TheoremId::PrimePowerWindow, false),
        );
    }
    trace.skip(theorem(TheoremId::PrimePowerWindow), "no power of p in [d_0, ceil(t/2)]");

    if 2 * p > u64::from(t) + 2 {
        return decided(
            trace,
            theorem(TheoremId::LargePrimeWlp),
            format!("p > ceil((t+1)/2) = {}", (t + 2) / 2),
            Verdict::by_theorem(TheoremId::LargePrimeWlp, true),
        );
    }
    trace.skip(theorem(TheoremId::LargePrimeWlp), format!("p <= ceil((t+1)/2) = {}", (t + 2) / 2));

    if d.is_uniform() && n >= 4 {
        let bound = t.div_ceil(2);
        return decided(
            trace,
            theorem(TheoremId::UniformManyVariablesWlp),
            format!("uniform degree, bound ceil((n+1)(d-1)/2) = {bound}"),
            Verdict::by_theorem(TheoremId::UniformManyVariablesWlp, p > u64::from(bound)),
        );
    }
    trace.skip(theorem(TheoremId::UniformManyVariablesWlp), "not uniform in at least five variables");

    if uniform_one_short_fails(d, p) {
        return decided(
            trace,
            theorem(TheoremId::UniformOneShort),
            format!("(d, ..., d, d-1) with d = {top}, p < d"),
            Verdict::by_theorem(TheoremId::UniformOneShort, false),
        );
    }
    trace.skip(theorem(TheoremId::UniformOneShort), "not (d, ..., d, d-1) with the parity and prime hypotheses");

    if let Some(dd) = dddd_minus_three(d) {
        let holds = p > u64::from(2 * dd - 3);
        let mut verdict = Verdict::by_theorem(TheoremId::DdddMinusThree, holds);
        if !holds && p < u64::from(dd) {
            if let Ok(Some(s)) = build_near_uniform_syzygy(dd, p) {
                verdict.witness = Some(Witness::Syzygy {
                    degree: s.degree,
                    coefficients: s.coefficients.iter().map(ToString::to_string).collect(),
                });
            }
        }
        return decided(trace, theorem(TheoremId::DdddMinusThree), format!("(d,d,d,d-3) with d = {dd}"), verdict);
    }
    trace.skip(theorem(TheoremId::DdddMinusThree), "not (d,d,d,d-3) with d >= 6");

    if is_large_top(d) {
        match large_top_case(d) {
            Ok(r) => {
                let note = format!("single entry {}", r.multinomial);
                return decided(trace, theorem(TheoremId::SingleEntryDeterminant), note, r.verdict(characteristic));
            }
            Err(e) => trace.inconclusive(theorem(TheoremId::SingleEntryDeterminant), e.to_string()),
        }
    } else {
        trace.skip(theorem(TheoremId::SingleEntryDeterminant), "d_0 != d_1 + ... + d_n - n");
    }

    if n == 2 {
        let deg = d.degrees();
        match wlp_three_gen_via_syzgap(u64::from(deg[0]), u64::from(deg[1]), u64::from(deg[2]), p) {
            Ok(v) => return decided(trace, Route::SyzygyGap, "stable triple".into(), v),
            Err(e) => trace.inconclusive(Route::SyzygyGap, e.to_string()),
        }
    } else {
        trace.skip(Route::SyzygyGap, "needs exactly three variables");
    }

    if t % 2 == 1 {
        match proctor_determinant(d) {
            Ok(r) => {
                let note = format!("|det| = {}", r.magnitude);
                return decided(trace, Route::Determinant, note, r.verdict(characteristic));
            }
            Err(e) => trace.inconclusive(Route::Determinant, e.to_string()),
        }
    } else {
        trace.skip(Route::Determinant, format!("socle degree {t} is even"));
        match even_socle_lift(d, characteristic) {
            Ok(v) if v.holds_property() => {
                return decided(trace, theorem(TheoremId::EvenSocleLift), "WLP of (d, 2) holds".into(), v);
            }
            Ok(_) => trace.inconclusive(theorem(TheoremId::EvenSocleLift), "WLP of (d, 2) fails; no conclusion"),
            Err(e) => trace.inconclusive(theorem(TheoremId::EvenSocleLift), e.to_string()),
        }
        if p == u64::from(t / 2 + 1) {
            trace.inconclusive(Route::ConjectureGap, format!("t = {t} even and p = t/2 + 1"));
        }
    }
    let original = d.clone();
    finish_with_oracle(trace, options, || has_wlp_oracle(&original, characteristic))
}

/// One-directional: for even `t`, WLP of `(d, 2)` implies WLP of `d`.
/// Returns an unknown verdict when the lift fails or is undecided.
pub fn even_socle_lift(d: &DegreeTuple, characteristic: Characteristic) -> Result<Verdict> {
    let t = d.socle_degree();
    if t % 2 == 1 {
        return Err(Error::OddSocleDegree(t));
    }
    let lifted = d.extended(2)?;
    let c = classify_wlp(&lifted, characteristic, ClassifyOptions::THEOREMS_ONLY);
    Ok(if c.verdict.holds_property() {
        Verdict::by_theorem(TheoremId::EvenSocleLift, true)
    } else {
        Verdict::unknown(Method::Theorem(TheoremId::EvenSocleLift))
    })
}

/// SLP as the conjunction of WLP over `(d, t - 2k)`, `0 <= k <= floor(t/2)`,
/// omitting the vacuous `t - 2k = 0`. Fails at the least failing `k`; unknown
/// if some member is undecided and none fails.
pub fn slp_via_wlp_family(
    d: &DegreeTuple,
    characteristic: Characteristic,
    mut wlp_decider: impl FnMut(&DegreeTuple, Characteristic) -> Verdict,
) -> Verdict {
    let t = d.socle_degree();
    let mut undecided = false;
    for k in 0..=t / 2 {
        let extra = t - 2 * k;
        if extra == 0 {
            continue;
        }
        let member = d.extended(extra).expect("positive extra degree");
        match wlp_decider(&member, characteristic).decision() {
            Some(true) => {}
            Some(false) => {
                return Verdict::fails(
                    Method::Theorem(TheoremId::WlpFamily),
                    Witness::Degree { degree: k, power: extra },
                )
            }
            None => undecided = true,
        }
    }
    if undecided {
        Verdict::unknown(Method::Theorem(TheoremId::WlpFamily))
    } else {
        Verdict::holds(Method::Theorem(TheoremId::WlpFamily))
    }
}

/// SLP fails when `max(d_1, 2 d_0 - t) <= p <= d_0` or some `p^m`, `m >= 1`,
/// lies in `[d_0, t]`.
pub fn slp_failure_window(d: &DegreeTuple, p: u64) -> bool {
    let t = i64::from(d.socle_degree());
    let top = i64::from(d.top());
    let low = i64::from(d.degrees()[1]).max(2 * top - t);
    let p_signed = p as i64;
    (low <= p_signed && p_signed <= top) || prime_power_in_range(p, top as u64, t as u64).is_some()
}

/// Characteristic two: SLP holds only for two variables with `(odd, 2)` or
/// `(4k + 2, 3)`.
pub fn char_two_slp(d: &DegreeTuple) -> bool {
    let deg = d.degrees();
    d.n() == 1 && ((deg[0] % 2 == 1 && deg[1] == 2) || (deg[0] % 4 == 2 && deg[1] == 3))
}

/// `(a, 2)`: SLP iff `p` does not divide `a`. `(a, 3)`: SLP iff `p = 2` and
/// `a = 2 mod 4`, or `p != 2` and `a` is not `-1, 0, 1 mod p`. `None` unless
/// `d = (a, b)` with `b` in `{2, 3}`.
pub fn small_second_degree_slp(d: &DegreeTuple, p: u64) -> Option<bool> {
    if d.n() != 1 {
        return None;
    }
    let (a, b) = (u64::from(d.degrees()[0]), d.degrees()[1]);
    match b {
        2 => Some(a % p != 0),
        3 if p == 2 => Some(a % 4 == 2),
        3 => {
            let r = a % p;
            Some(r != 0 && r != 1 && r != p - 1)
        }
        _ => None,
    }
}

/// Uniform degree `d` in `n + 1` variables: SLP iff `p^s > 2(d-1)` for `n = 1`
/// (with `p^{s-1}` the exact power dividing `(2d-1)(2d+1)`), and iff
/// `p > (n+1)(d-1)` for `n >= 2`.
pub fn uniform_slp(n: usize, d: u32, p: u64) -> bool {
    if n == 1 {
        let d = u64::from(d);
        let s = p_adic_valuation((2 * d - 1) * (2 * d + 1), p) + 1;
        p.checked_pow(s).is_none_or(|q| q > 2 * (d - 1))
    } else {
        p > (n as u64 + 1) * u64::from(d - 1)
    }
}

fn uniform_slp_theorem(n: usize) -> TheoremId {
    match n {
        1 => TheoremId::UniformTwoVariablesSlp,
        2 => TheoremId::UniformThreeVariablesSlp,
        3 => TheoremId::UniformFourVariablesSlp,
        _ => TheoremId::UniformManyVariablesSlp,
    }
}

/// Classification of SLP in the given characteristic.
pub fn classify_slp(d: &DegreeTuple, characteristic: Characteristic, options: ClassifyOptions) -> Classification {
    if let Some(c) = trivial(d, characteristic, true) {
        return c;
    }
    let reduced = d.without_units().expect("checked above");
    let d = &reduced;
    let mut trace = MethodTrace::default();
    let t = d.socle_degree();
    let n = d.n();
    let theorem = |id| Route::Theorem(id);
    let decided = |mut trace: MethodTrace, route: Route, note: String, verdict: Verdict| {
        trace.decide(route, note);
        Classification { verdict, trace }
    };

    let Some(p) = characteristic.prime() else {
        return decided(
            trace,
            theorem(TheoremId::CharZero),
            "characteristic zero".into(),
            Verdict::by_theorem(TheoremId::CharZero, true),
        );
    };
    trace.skip(theorem(TheoremId::CharZero), format!("characteristic {p}"));

    if p > u64::from(t) {
        return decided(
            trace,
            theorem(TheoremId::LargePrimeSlp),
            format!("p > t = {t}"),
            Verdict::by_theorem(TheoremId::LargePrimeSlp, true),
        );
    }
    trace.skip(theorem(TheoremId::LargePrimeSlp), format!("p <= t = {t}"));

    if slp_failure_window(d, p) {
        return decided(
            trace,
            theorem(TheoremId::SlpFailureWindow),
            "p in [max(d_1, 2d_0 - t), d_0] or a power of p in [d_0, t]".into(),
            Verdict::by_theorem(TheoremId::SlpFailureWindow, false),
        );
    }
    trace.skip(theorem(TheoremId::SlpFailureWindow), "p outside both failure windows");

    if p == 2 {
        let id = if n == 1 { TheoremId::CharTwoTwoVariables } else { TheoremId::CharTwoManyVariables };
        return decided(trace, theorem(id), "characteristic two".into(), Verdict::by_theorem(id, char_two_slp(d)));
    }
    trace.skip(theorem(TheoremId::CharTwoTwoVariables), "odd characteristic");
    trace.skip(theorem(TheoremId::CharTwoManyVariables), "odd characteristic");

    if let Some(holds) = small_second_degree_slp(d, p) {
        return decided(
            trace,
            theorem(TheoremId::SmallSecondDegree),
            format!("two variables with d_1 = {}", d.degrees()[1]),
            Verdict::by_theorem(TheoremId::SmallSecondDegree, holds),
        );
    }
    trace.skip(theorem(TheoremId::SmallSecondDegree), "not (a, 2) or (a, 3)");

    if d.is_uniform() {
        let id = uniform_slp_theorem(n);
        let verdict = if n == 1 {
            slp_dd_criterion(u64::from(d.top()), characteristic).expect("d >= 2")
        } else {
            Verdict::by_theorem(id, uniform_slp(n, d.top(), p))
        };
        return decided(trace, theorem(id), format!("uniform degree {}", d.top()), verdict);
    }
    trace.skip(theorem(TheoremId::UniformManyVariablesSlp), "degrees not uniform");

    if n == 1 {
        let deg = d.degrees();
        match slp_two_var(u64::from(deg[0]), u64::from(deg[1]), characteristic) {
            Ok(v) => return decided(trace, Route::SyzygyGap, "triples (a, b, a+b-2-2k)".into(), v),
            Err(e) => trace.inconclusive(Route::SyzygyGap, e.to_string()),
        }
    } else {
        trace.skip(Route::SyzygyGap, "needs two variables");
    }

    let family = slp_via_wlp_family(d, characteristic, |member, c| {
        classify_wlp(member, c, ClassifyOptions::THEOREMS_ONLY).verdict
    });
    if family.is_decided() {
        return decided(
            trace,
            theorem(TheoremId::WlpFamily),
            "every (d, t-2k) decided by the WLP cascade".into(),
            family,
        );
    }
    trace.inconclusive(theorem(TheoremId::WlpFamily), "some (d, t-2k) undecided without the oracle");

    let original = d.clone();
    finish_with_oracle(trace, options, || has_slp_oracle(&original, characteristic))
}

/// Sweep bounds for the conjecture monitors: tuples of `n + 1` entries in
/// `2..=dmax` for every `n` in `n_min..=n_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConjectureRange {
    pub n_min: usize,
    pub n_max: usize,
    pub dmax: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub conjecture: &'static str,
    pub tuple: DegreeTuple,
    pub characteristic: Characteristic,
    pub expected: bool,
    pub observed: Status,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConjectureReport {
    /// `(tuple, p)` pairs checked against the even-gap statement.
    pub even_gap_checked: usize,
    /// `(tuple, characteristic)` pairs checked against the small-top statement.
    pub small_top_checked: usize,
    /// Tuples outside the small-top hypothesis `d_0 <= ceil(t/2)`.
    pub small_top_skipped: usize,
    pub counterexamples: Vec<Counterexample>,
}

/// Descending tuples with `len` entries in `lo..=hi`, lexicographically ascending.
pub fn descending_tuples(len: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    fn extend(prefix: &mut Vec<u32>, len: usize, lo: u32, cap: u32, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for v in lo..=cap {
            prefix.push(v);
            extend(prefix, len, lo, v, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if len > 0 && lo <= hi {
        extend(&mut Vec::with_capacity(len), len, lo, hi, &mut out);
    }
    out
}

/// Monitors the two open statements on the given range:
/// even `t` with `p = t/2 + 1` is expected to have the WLP, and
/// `d_0 <= ceil(t/2)` is expected to have the SLP exactly when `p = 0` or `p > t`.
/// Reports disagreements instead of failing.
pub fn check_conjectures(range: ConjectureRange) -> ConjectureReport {
    let mut report = ConjectureReport::default();
    for n in range.n_min.max(1)..=range.n_max {
        for raw in descending_tuples(n + 1, 2, range.dmax) {
            let d = DegreeTuple::new(&raw).expect("entries >= 2");
            let t = d.socle_degree();
            if t.is_multiple_of(2) && is_prime(u64::from(t / 2 + 1)) {
                let c = Characteristic::new(u64::from(t / 2 + 1)).expect("prime");
                report.even_gap_checked += 1;
                let v = has_wlp_oracle(&d, c);
                if !v.holds_property() {
                    report.counterexamples.push(Counterexample {
                        conjecture: "even-socle-gap",
                        tuple: d.clone(),
                        characteristic: c,
                        expected: true,
                        observed: v.status,
                    });
                }
            }
            if d.top() > d.half_socle_ceil() {
                report.small_top_skipped += 1;
                continue;
            }
            let chars = core::iter::once(0).chain(primes_up_to(u64::from(t) + 2));
            for p in chars {
                let c = Characteristic::new(p).expect("prime or zero");
                let expected = p == 0 || p > u64::from(t);
                report.small_top_checked += 1;
                let v = has_slp_oracle(&d, c);
                if v.holds_property() != expected {
                    report.counterexamples.push(Counterexample {
                        conjecture: "small-top-slp",
                        tuple: d.clone(),
                        characteristic: c,
                        expected,
                        observed: v.status,
                    });
                }
            }
        }
    }
    report
}
