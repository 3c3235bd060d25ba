//! Result-to-code map. `docs/CONCORDANCE.md` is the rendering of [`ENTRIES`];
//! tests check that the file is current and that every cited test exists.

use std::fmt::Write;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Standing {
    /// Proved; the implementation is audited against the oracle.
    Proved,
    /// Open; checked on finite ranges and never used to decide.
    Monitored,
}

impl Standing {
    pub fn as_str(self) -> &'static str {
        match self {
            Standing::Proved => "proved",
            Standing::Monitored => "monitored, not assumed",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ConcordanceEntry {
    pub result: &'static str,
    pub statement: &'static str,
    pub operations: &'static [&'static str],
    /// `path::function`, relative to the workspace root.
    pub tests: &'static [&'static str],
    pub standing: Standing,
}

macro_rules! entry {
    ($result:expr, $statement:expr, [$($op:expr),* $(,)?], [$($test:expr),* $(,)?]) => {
        entry!($result, $statement, [$($op),*], [$($test),*], Standing::Proved)
    };
    ($result:expr, $statement:expr, [$($op:expr),* $(,)?], [$($test:expr),* $(,)?], $standing:expr) => {
        ConcordanceEntry { result: $result, statement: $statement, operations: &[$($op),*], tests: &[$($test),*], standing: $standing }
    };
}

pub const ENTRIES: &[ConcordanceEntry] = &[
    entry!(
        "Characteristic zero",
        "Every monomial complete intersection has the SLP over a field of characteristic zero.",
        ["classify_wlp", "classify_slp"],
        ["crates/core/src/classify.rs::cascade_is_sound_without_the_oracle"]
    ),
    entry!(
        "Large top degree",
        "If d_0 > ceil(t/2) the WLP holds in every characteristic.",
        ["classify_wlp"],
        ["crates/core/src/classify.rs::cascade_is_sound_without_the_oracle", "crates/core/src/classify.rs::wlp_examples"]
    ),
    entry!(
        "Peak determinant",
        "For odd t and d_0 <= ceil(t/2), the middle map of multiplication by l has an explicit product determinant.",
        ["proctor_determinant", "nilp_determinant_bruteforce"],
        [
            "crates/core/src/detformula.rs::formula_matches_bruteforce_determinant",
            "crates/cli/tests/acceptance.rs::determinant_regression"
        ]
    ),
    entry!(
        "Bad primes",
        "For odd t and d_0 <= ceil(t/2), the WLP fails in characteristic p exactly when p divides the peak determinant.",
        ["bad_primes", "DeterminantReport::verdict"],
        [
            "crates/core/src/detformula.rs::bad_primes_are_exactly_the_wlp_failures",
            "crates/cli/tests/acceptance.rs::bad_prime_equivalence"
        ]
    ),
    entry!(
        "Even socle lift",
        "For even t, the WLP of (d, 2) implies the WLP of d.",
        ["even_socle_lift"],
        ["crates/core/src/oracle.rs::even_socle_descent_through_a_square", "crates/core/src/classify.rs::lift_examples"]
    ),
    entry!(
        "SLP as a family of WLP questions",
        "d has the SLP iff (d, t - 2k) has the WLP for every 0 <= k <= floor(t/2).",
        ["slp_via_wlp_family", "has_slp_oracle"],
        [
            "crates/core/src/oracle.rs::slp_is_a_family_of_wlp_questions",
            "crates/cli/tests/acceptance.rs::cross_route_agreement"
        ]
    ),
    entry!(
        "Strong Stanley form",
        "With a symmetric Hilbert function, the SLP is equivalent to bijectivity of l^{t-2k} from degree k to degree t-k.",
        ["has_slp_oracle", "has_slp_full_definition"],
        ["crates/core/src/oracle.rs::strong_stanley_form_matches_full_definition"]
    ),
    entry!(
        "Frobenius window for WLP",
        "With d_0 <= ceil(t/2), the WLP fails if d_1 <= p <= d_0 or some power p^m lies in [d_0, ceil(t/2)].",
        ["classify_wlp", "frobenius_top_power_applies", "prime_power_window"],
        ["crates/core/src/classify.rs::failure_windows_match_oracle"]
    ),
    entry!(
        "Large primes for WLP",
        "With at least three variables, the WLP holds if p > ceil((t+1)/2).",
        ["classify_wlp"],
        ["crates/core/src/classify.rs::cascade_is_sound_without_the_oracle"]
    ),
    entry!(
        "Single-entry determinant",
        "If d_0 = d_1 + ... + d_n - n with n >= 2, the WLP holds iff p does not divide the multinomial of (d_1 - 1, ..., d_n - 1).",
        ["large_top_case", "is_large_top"],
        ["crates/core/src/detformula.rs::single_entry_agrees_with_oracle"]
    ),
    entry!(
        "Frobenius window for SLP",
        "The SLP fails if max(d_1, 2d_0 - t) <= p <= d_0 or some power p^m lies in [d_0, t]; it holds if p > t.",
        ["classify_slp", "slp_failure_window"],
        [
            "crates/core/src/classify.rs::failure_windows_match_oracle",
            "crates/core/src/classify.rs::large_primes_always_have_slp"
        ]
    ),
    entry!(
        "Two variables, WLP",
        "Every quotient of K[x, y] by pure powers has the WLP.",
        ["classify_wlp"],
        ["crates/core/src/classify.rs::two_variables_always_have_wlp"]
    ),
    entry!(
        "Second exponent 2 or 3",
        "(a, 2) has the SLP iff p does not divide a; (a, 3) has the SLP iff p does not divide binom(a+1, 2) binom(a, 2).",
        ["small_second_degree_slp"],
        ["crates/core/src/classify.rs::small_second_degree_matches_oracle"]
    ),
    entry!(
        "Syzygy gap criterion",
        "For a stable triple, the WLP of (a, b, c) is decided by the distance from p^s (a, b, c) to odd lattice points.",
        ["han_delta_positive", "wlp_three_gen_via_syzgap"],
        [
            "crates/core/src/syzgap.rs::gap_route_agrees_with_oracle",
            "crates/cli/tests/acceptance.rs::syzygy_gap_agreement"
        ]
    ),
    entry!(
        "Lucas parity",
        "A multinomial is odd iff the binary digits of its parts are pairwise disjoint.",
        ["is_multinomial_odd", "bit_positions"],
        [
            "crates/core/src/combinat.rs::odd_multinomials_by_bit_disjointness_exhaustive",
            "crates/cli/tests/acceptance.rs::kummer_property_suite"
        ]
    ),
    entry!(
        "Kummer carries",
        "The p-adic valuation of binom(m + k, k) is the number of carries when adding m and k in base p.",
        ["carries_base_p", "p_adic_valuation"],
        [
            "crates/core/src/combinat.rs::kummer_matches_pascal_valuations",
            "crates/cli/tests/acceptance.rs::kummer_property_suite"
        ]
    ),
    entry!(
        "Two variables in characteristic two",
        "For p = 2, (a, b) with b >= 2 fails the SLP iff b = 2 and a is even, b = 3 and a is not 2 mod 4, or b >= 4.",
        ["char_two_slp", "classify_slp"],
        ["crates/core/src/classify.rs::char_two_classification_matches_oracle"]
    ),
    entry!(
        "Equal exponents in two variables",
        "(d, d) has the SLP iff 2d - 2 < p^s, where p^{s-1} exactly divides (2d - 1)(2d + 1).",
        ["slp_dd_criterion", "dd_exponent"],
        ["crates/core/src/syzgap.rs::uniform_two_variable_criterion_agrees_with_oracle"]
    ),
    entry!(
        "Gap bound by syzygies",
        "The WLP holds iff no non-Koszul syzygy of (l^{d_0}, x_1^{d_1}, ..., x_n^{d_n}) appears in degree below floor((t+3)/2).",
        ["mgd_nonkoszul", "has_wlp_via_mgd"],
        [
            "crates/core/src/oracle.rs::syzygy_bound_agrees_with_rank_oracle",
            "crates/cli/tests/acceptance.rs::cross_route_agreement"
        ]
    ),
    entry!(
        "Standard four-term syzygy",
        "x^k, y^{k+j}, z^{k+j}, l^k admit an explicit relation built from two auxiliary polynomials.",
        ["standard_syzygy", "verify_syzygy"],
        ["crates/core/src/poly.rs::standard_syzygy_verifies", "crates/cli/tests/acceptance.rs::explicit_syzygy_suite"]
    ),
    entry!(
        "Three equal exponents with a shorter fourth",
        "(d, d, d, d - 3) with d >= 6 has the WLP iff p = 0 or p > 2d - 3; for p < d an explicit syzygy of degree at most 2d - 3 witnesses failure.",
        ["build_near_uniform_syzygy", "classify_wlp"],
        [
            "crates/core/src/poly.rs::every_near_uniform_syzygy_is_a_low_degree_nonkoszul_relation",
            "crates/core/src/classify.rs::dddd_minus_three_carries_a_syzygy"
        ]
    ),
    entry!(
        "Three equal exponents",
        "(d, d, d) has the SLP iff p = 0 or p > 3(d - 1).",
        ["uniform_slp", "classify_slp"],
        ["crates/core/src/classify.rs::uniform_criterion_matches_oracle", "crates/cli/tests/acceptance.rs::multinomial_regressions"]
    ),
    entry!(
        "Characteristic two, three or more variables",
        "With at least three variables the SLP fails in characteristic two.",
        ["char_two_slp", "classify_slp"],
        ["crates/core/src/classify.rs::char_two_classification_matches_oracle"]
    ),
    entry!(
        "Equal exponents, many variables, WLP",
        "d repeated n + 1 >= 5 times has the WLP iff p = 0 or p > ceil((n+1)(d-1)/2).",
        ["classify_wlp"],
        ["crates/core/src/classify.rs::uniform_many_variables_wlp_matches_oracle"]
    ),
    entry!(
        "Equal exponents, SLP",
        "d repeated n + 1 >= 3 times has the SLP iff p = 0 or p > (n+1)(d-1).",
        ["uniform_slp", "classify_slp"],
        [
            "crates/core/src/classify.rs::uniform_criterion_matches_oracle",
            "crates/cli/tests/acceptance.rs::uniform_degree_check"
        ]
    ),
    entry!(
        "Equal exponents with one short",
        "(d, ..., d, d - 1) with n >= 4, d >= 3, d or n odd fails the WLP for 2 <= p < d.",
        ["uniform_one_short_fails", "classify_wlp"],
        ["crates/core/src/classify.rs::uniform_one_short_matches_oracle"]
    ),
    entry!(
        "Characteristic two classification",
        "For p = 2 the SLP holds iff there are two variables and d = (odd, 2) or (4k + 2, 3).",
        ["char_two_slp"],
        ["crates/cli/tests/acceptance.rs::char_two_classification"]
    ),
    entry!(
        "Equal exponents classification",
        "Uniform degree d: SLP in two variables iff p^s > 2(d - 1), otherwise iff p > (n+1)(d-1).",
        ["uniform_slp", "slp_dd_criterion"],
        ["crates/cli/tests/acceptance.rs::uniform_degree_check"]
    ),
    entry!(
        "Characteristic t/2 + 1",
        "For even t and p = t/2 + 1 the WLP is expected to hold; the case of three variables is proved.",
        ["check_conjectures"],
        [
            "crates/core/src/classify.rs::conjecture_monitor_examples",
            "crates/cli/tests/acceptance.rs::conjecture_monitors"
        ],
        Standing::Monitored
    ),
    entry!(
        "SLP with a small top exponent",
        "With d_0 <= ceil(t/2), the SLP is expected to hold iff p = 0 or p > t.",
        ["check_conjectures"],
        ["crates/cli/tests/acceptance.rs::conjecture_monitors"],
        Standing::Monitored
    ),
];

/// Markdown rendering of [`ENTRIES`].
pub fn generate_concordance() -> String {
    let mut out = String::new();
    out.push_str("# Concordance\n\n");
    out.push_str("Generated by `lefschetz concordance`. Each row names a result, the code that implements it and the tests that audit it.\n\n");
    out.push_str("| Result | Statement | Operations | Tests | Standing |\n");
    out.push_str("|---|---|---|---|---|\n");
    for e in ENTRIES {
        let ops = e.operations.iter().map(|o| format!("`{o}`")).collect::<Vec<_>>().join(", ");
        let tests = e.tests.iter().map(|t| format!("`{t}`")).collect::<Vec<_>>().join("<br>");
        let _ = writeln!(
            out,
            "| {} | {} | {ops} | {tests} | {} |",
            e.result,
            e.statement.replace('|', "\\|"),
            e.standing.as_str()
        );
    }
    out
}
