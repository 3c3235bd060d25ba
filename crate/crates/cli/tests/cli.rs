use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use lefschetz_cli::concordance::{generate_concordance, ENTRIES};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_lefschetz"));
    c.env_remove("LEFSCHETZ_JOBS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(run(args).stdout).expect("utf-8")
}

fn workspace_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn json_lines(text: &str) -> Vec<serde_json::Value> {
    text.lines().filter(|l| !l.starts_with('#')).map(|l| serde_json::from_str(l).expect("json")).collect()
}

#[test]
fn exit_codes_follow_the_verdict() {
    assert_eq!(code(&["wlp", "--degrees", "5,5,5", "--char", "7"]), 0);
    assert_eq!(code(&["slp", "--degrees", "4,4,2", "--char", "2"]), 1);
    assert_eq!(code(&["wlp", "--degrees", "4,4,4,1", "--char", "5", "--allow-unit", "--method", "det"]), 1);
    assert_eq!(code(&["slp", "--degrees", "6,3", "--char", "2"]), 0);
    assert_eq!(code(&["slp", "--degrees", "3,3", "--char", "2", "--method", "det"]), 2);
    assert_eq!(code(&["wlp", "--degrees", "2,2,2,2", "--char", "3", "--method", "syzgap"]), 2);
}

#[test]
fn record_has_the_documented_keys_in_order() {
    let line = stdout(&["wlp", "--degrees", "4,4,4,1", "--char", "5", "--allow-unit", "--method", "det"]);
    let v: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["degrees", "normalized", "char", "property", "status", "method", "witness", "runtime_micros"]);
    assert_eq!(v["witness"], serde_json::json!({"kind": "prime", "prime": 5, "exponent": 1}));
    assert_eq!(v["status"], "fails");
}

#[test]
fn input_order_is_kept_next_to_the_normalized_tuple() {
    let v: serde_json::Value =
        serde_json::from_str(stdout(&["wlp", "--degrees", "2,7,2", "--char", "2"]).trim()).unwrap();
    assert_eq!(v["degrees"], serde_json::json!([2, 7, 2]));
    assert_eq!(v["normalized"], serde_json::json!([7, 2, 2]));
    assert_eq!(v["method"], "theorem:large-top-degree");
}

#[test]
fn trace_goes_to_stderr() {
    let out = run(&["wlp", "--degrees", "5,5,5", "--char", "7", "--trace"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("decided by syzygy-gap"), "{err}");
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 1);
}

#[test]
fn determinant_reports() {
    let v: serde_json::Value = serde_json::from_str(stdout(&["det", "--degrees", "5,5,5,2"]).trim()).unwrap();
    assert_eq!(v["magnitude"], serde_json::json!({"2": 1, "5": 5, "7": 1}));
    assert_eq!(v["bad_primes"], serde_json::json!([2, 5, 7]));
    let v: serde_json::Value =
        serde_json::from_str(stdout(&["det", "--degrees", "2,2,2", "--bruteforce"]).trim()).unwrap();
    assert_eq!(v["determinant"], "2");
    assert_eq!(v["value"], "2");
    let out = run(&["det", "--degrees", "3,2,2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("socle degree 4 is even"));
}

#[test]
fn malformed_flags_exit_with_two() {
    let corpus: &[&[&str]] = &[
        &[],
        &["wlp"],
        &["wlp", "--degrees"],
        &["wlp", "--degrees", ""],
        &["wlp", "--degrees", "5"],
        &["wlp", "--degrees", "5,,5"],
        &["wlp", "--degrees", "5,5,x"],
        &["wlp", "--degrees", "5,-5"],
        &["wlp", "--degrees", "5,0"],
        &["wlp", "--degrees", "5,1"],
        &["wlp", "--degrees", "99999999999,2"],
        &["wlp", "--degrees", "5,5", "--char", "4"],
        &["wlp", "--degrees", "5,5", "--char", "1"],
        &["wlp", "--degrees", "5,5", "--char", "-3"],
        &["wlp", "--degrees", "5,5", "--char", "seven"],
        &["wlp", "--degrees", "5,5", "--method", "magic"],
        &["wlp", "--degrees", "5,5", "--bogus"],
        &["slp", "--degrees", "5;5"],
        &["det", "--degrees", "3,2,2"],
        &["det", "--degrees", "9,2,2"],
        &["census", "--n", "1"],
        &["census", "--n", "x", "--dmax", "3", "--pmax", "3", "--property", "wlp"],
        &["census", "--n", "1", "--dmax", "3", "--pmax", "3", "--property", "both"],
        &["census", "--n", "1", "--dmax", "3", "--pmax", "3", "--property", "wlp", "--config", "/nonexistent.toml"],
        &["census", "--n", "1", "--dmax", "3", "--pmax", "3", "--property", "wlp", "--out", "/nonexistent/dir/x"],
        &["verify"],
        &["verify", "--mode", "everything"],
        &["frobnicate"],
    ];
    for args in corpus {
        assert_eq!(code(args), 2, "{args:?}");
    }
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["--version"]), 0);
}

#[test]
fn census_rows_for_three_equal_exponents() {
    let text = stdout(&["census", "--n", "2", "--dmax", "4", "--pmax", "11", "--property", "slp"]);
    assert!(text.starts_with("# lefschetz "));
    let rows: Vec<_> =
        json_lines(&text).into_iter().filter(|r| r["normalized"] == serde_json::json!([4, 4, 4])).collect();
    let by_char: Vec<(u64, String)> =
        rows.iter().map(|r| (r["char"].as_u64().unwrap(), r["status"].as_str().unwrap().to_string())).collect();
    assert_eq!(
        by_char,
        [(2, "fails"), (3, "fails"), (5, "fails"), (7, "fails"), (11, "holds")].map(|(p, s)| (p, s.to_string()))
    );
}

#[test]
fn census_rows_for_three_three() {
    let text = stdout(&["census", "--n", "1", "--dmax", "3", "--pmax", "7", "--property", "slp"]);
    let statuses: Vec<(u64, String)> = json_lines(&text)
        .into_iter()
        .filter(|r| r["normalized"] == serde_json::json!([3, 3]))
        .map(|r| (r["char"].as_u64().unwrap(), r["status"].as_str().unwrap().to_string()))
        .collect();
    assert_eq!(statuses, [(2, "fails"), (3, "fails"), (5, "holds"), (7, "holds")].map(|(p, s)| (p, s.to_string())));
}

#[test]
fn census_is_ordered_and_reproducible() {
    let args = ["census", "--n", "2", "--dmax", "5", "--pmax", "13", "--property", "wlp", "--deterministic"];
    let serial = bin().args(args).args(["--jobs", "1"]).output().unwrap();
    let parallel = bin().args(args).env("LEFSCHETZ_JOBS", "4").output().unwrap();
    assert_eq!(serial.status.code(), Some(0));
    assert_eq!(serial.stdout, parallel.stdout);
    let rows = json_lines(&String::from_utf8(serial.stdout).unwrap());
    let keys: Vec<(Vec<u64>, u64)> = rows
        .iter()
        .map(|r| {
            let d = r["normalized"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
            (d, r["char"].as_u64().unwrap())
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert_eq!(rows.len(), 20 * 6);
}

#[test]
fn census_without_deterministic_differs_only_in_runtime() {
    let args = ["census", "--n", "1", "--dmax", "4", "--pmax", "5", "--property", "slp"];
    let strip = |text: String| {
        json_lines(&text)
            .into_iter()
            .map(|mut r| {
                r.as_object_mut().unwrap().remove("runtime_micros");
                r
            })
            .collect::<Vec<_>>()
    };
    assert_eq!(strip(stdout(&args)), strip(stdout(&args)));
}

#[test]
fn empty_census_writes_an_empty_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("empty.jsonl");
    let status = code(&[
        "census",
        "--n",
        "1",
        "--dmax",
        "1",
        "--pmax",
        "7",
        "--property",
        "wlp",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(status, 0);
    assert_eq!(std::fs::read(&out).unwrap().len(), 0);
}

#[test]
fn census_preset_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("preset.toml");
    std::fs::write(&config, "n = 1\ndmax = 3\npmax = 7\nproperty = \"slp\"\nformat = \"csv\"\ndeterministic = true\n")
        .unwrap();
    let out = dir.path().join("census.csv");
    assert_eq!(code(&["census", "--config", config.to_str().unwrap(), "--out", out.to_str().unwrap()]), 0);
    let text = std::fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# lefschetz "));
    assert_eq!(lines.next().unwrap(), "degrees,normalized,char,property,status,method,witness,runtime_micros");
    assert!(text.contains("\"3,3\",\"3,3\",5,slp,holds,"));
    // flags override the preset
    let text = stdout(&["census", "--config", config.to_str().unwrap(), "--format", "jsonl", "--pmax", "2"]);
    assert!(json_lines(&text).iter().all(|r| r["char"] == 2));
    std::fs::write(&config, "n = 1\nunknown_key = 3\n").unwrap();
    assert_eq!(code(&["census", "--config", config.to_str().unwrap()]), 2);
}

#[test]
fn verify_modes_are_clean_on_small_ranges() {
    for args in [
        &["verify", "--mode", "det-vs-oracle", "--n", "3", "--dmax", "5"][..],
        &["verify", "--mode", "conjectures", "--n", "2", "--dmax", "5"],
        &["verify", "--mode", "classify-vs-oracle", "--n", "2", "--dmax", "4", "--pmax", "13"],
        &["verify", "--mode", "mgd-vs-oracle", "--n", "2", "--dmax", "4"],
        &["verify", "--mode", "syzgap-vs-oracle", "--dmax", "8", "--pmax", "7"],
    ] {
        let out = run(args);
        let text = String::from_utf8(out.stdout).unwrap();
        assert_eq!(out.status.code(), Some(0), "{args:?}\n{text}");
        assert!(text.contains("disagreements 0"), "{text}");
    }
}

#[test]
fn concordance_document_is_current() {
    let committed = std::fs::read_to_string(workspace_root().join("docs/CONCORDANCE.md")).unwrap();
    assert_eq!(committed, generate_concordance(), "regenerate with `lefschetz concordance --out docs/CONCORDANCE.md`");
    assert_eq!(stdout(&["concordance"]), committed);
}

#[test]
fn concordance_cites_existing_tests() {
    for entry in ENTRIES {
        assert!(!entry.tests.is_empty(), "{}", entry.result);
        for cited in entry.tests {
            let (path, name) = cited.rsplit_once("::").unwrap();
            let source = std::fs::read_to_string(workspace_root().join(path)).unwrap_or_else(|_| panic!("{path}"));
            assert!(source.contains(&format!("fn {name}(")), "{cited} not found");
        }
    }
}

#[test]
fn concordance_names_public_operations() {
    let sources: String = ["core/src", "cli/src"]
        .iter()
        .flat_map(|d| std::fs::read_dir(workspace_root().join("crates").join(d)).unwrap())
        .map(|e| std::fs::read_to_string(e.unwrap().path()).unwrap())
        .collect();
    for entry in ENTRIES {
        for op in entry.operations {
            let name = op.rsplit("::").next().unwrap();
            assert!(sources.contains(&format!("pub fn {name}(")), "{op}");
        }
    }
    let mut results: Vec<_> = ENTRIES.iter().map(|e| e.result).collect();
    results.sort();
    results.dedup();
    assert_eq!(results.len(), ENTRIES.len(), "each result appears once");
}
