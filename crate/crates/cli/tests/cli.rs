use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brauer-verify")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json", "--deterministic"]);
    let o = run(&a);
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)))
}

fn temp_file(name: &str, body: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("brauer-verify-{}-{name}", std::process::id()));
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn verify_all_passes() {
    let o = run(&["verify", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("16/16 checks passed"));
}

#[test]
fn deterministic_json_is_byte_identical() {
    let args = ["verify", "all", "--format", "json", "--deterministic", "--seed", "7"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], "1");
    assert_eq!(v["seed"], 7);
    assert!(v.get("timestamp").is_none());
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn timestamp_present_without_deterministic() {
    let o = run(&["brauer", "closed-char2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["timestamp"].is_u64());
}

#[test]
fn exhaustive_checks_do_not_depend_on_seed() {
    let a = json(&["verify", "h1-bruteforce", "--seed", "1"]);
    let b = json(&["verify", "h1-bruteforce", "--seed", "2"]);
    assert_eq!(a["checks"], b["checks"]);
}

#[test]
fn cohomology_examples() {
    assert_eq!(json(&["cohomology", "--group", "gl2:3", "--module", "paper-M", "--degree", "1"])["invariant_factors"], serde_json::json!([2, 2]));
    assert_eq!(json(&["cohomology", "--group", "cyclic:4", "--module", "trivial:2", "--degree", "2"])["invariant_factors"], serde_json::json!([2]));
    assert_eq!(
        json(&["cohomology", "--group", "semidirect:3:4:2", "--module", "trivial:4", "--degree", "2"])["invariant_factors"],
        serde_json::json!([4])
    );
}

#[test]
fn cohomology_from_files() {
    let g = temp_file("group.json", r#"{"type": "semidirect", "m": 3, "n": 4, "r": 2}"#);
    let m = temp_file("module.json", r#"{"moduli": [4], "action": [[[1]], [[1]]]}"#);
    let v = json(&["cohomology", "--group-file", g.to_str().unwrap(), "--module-file", m.to_str().unwrap(), "--degree", "2"]);
    assert_eq!(v["invariant_factors"], serde_json::json!([4]));
}

#[test]
fn descriptor_errors_exit_2_with_location() {
    let g = temp_file("bad.json", "{\"type\": \"gl2\",\n  \"p\": \"three\"}");
    let o = run(&["cohomology", "--group-file", g.to_str().unwrap(), "--module", "trivial:2", "--degree", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
    let o = run(&["cohomology", "--group", "gl2:3", "--module", "{\"moduli\":[2],\"action\":[[[1]]]}", "--degree", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("action"));
}

#[test]
fn brauer_examples() {
    assert_eq!(json(&["brauer", "closed-char2"])["group"], "Z/2");
    assert_eq!(json(&["brauer", "finite:4"])["group"], "Z/12 + Z/2");
    assert_eq!(json(&["brauer", "finite:2"])["group"], "Z/24");
    let v = json(&["brauer", "finite:4"]);
    for e in v["evidence"].as_array().unwrap() {
        assert!(["computed", "assumed-from-paper"].contains(&e["source"].as_str().unwrap()));
    }
    assert_eq!(run(&["brauer", "finite:6"]).status.code(), Some(2));
    assert_eq!(run(&["brauer", "elsewhere"]).status.code(), Some(2));
}

#[test]
fn hesse_examples() {
    let o = run(&["hesse", "torsion-table", "--field", "2:2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("9/9 points match"));
    assert_eq!(run(&["hesse", "coord-change", "--trials", "100"]).status.code(), Some(0));
    let v = json(&["hesse", "j-check", "--prime", "13", "--trials", "100"]);
    assert_eq!(v["details"]["matched"], 100);
    assert_eq!(run(&["hesse", "no-such-check"]).status.code(), Some(2));
}

#[test]
fn failed_verification_exits_1() {
    // With no samples the coordinate-change check cannot see both square roots.
    let o = run(&["hesse", "coord-change", "--prime", "7", "--trials", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("# hesse coord-change"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nonexistent"]).status.code(), Some(2));
    assert_eq!(run(&["cohomology", "--group", "gl2:3", "--module", "paper-M", "--degree", "3"]).status.code(), Some(2));
    assert_eq!(run(&["cohomology", "--group", "cyclic:4", "--module", "paper-M", "--degree", "1"]).status.code(), Some(2));
}

#[test]
fn output_file_matches_stdout() {
    let path = std::env::temp_dir().join(format!("brauer-verify-{}-out.json", std::process::id()));
    let o = run(&["brauer", "finite:8", "--format", "json", "--deterministic", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let direct = run(&["brauer", "finite:8", "--format", "json", "--deterministic"]);
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
}
