use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn dsr(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_dsr")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exited normally"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn temp_file(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("dsr-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn totals(doc: &Value) -> Vec<String> {
    doc["totals"].as_array().unwrap().iter().map(|t| t["value"].as_str().unwrap().to_string()).collect()
}

#[test]
fn tournament_text_output() {
    let (code, out, _) = dsr(&["tournament", data("four-tournament.mat").to_str().unwrap(), "--format", "text"]);
    assert_eq!(code, 0);
    assert!(out.contains("totals: a=3 b=4 c=1 d=0"), "{out}");
    assert!(out.contains("winners: {b}"));
}

#[test]
fn partitions_of_the_cycle_profile() {
    let (code, out, _) = dsr(&["partitions", data("cycle.ballots").to_str().unwrap()]);
    assert_eq!(code, 0);
    let last = out.lines().last().unwrap();
    assert!(last.starts_with("partition"));
    let cells: Vec<&str> = last.split("  ").map(str::trim).filter(|c| !c.is_empty()).collect();
    assert_eq!(cells, ["partition", "none", "none", "⟨{y,z}, {x,u}⟩_z", "⟨{y,z}, {u}, {x}⟩_u"]);
}

#[test]
fn partitions_json_accepts_matrices() {
    let (code, out, _) = dsr(&["partitions", data("six-tournament.mat").to_str().unwrap(), "--format", "json"]);
    assert_eq!(code, 0);
    let _: Value = serde_json::from_str(&out).unwrap();
}

#[test]
fn rank_json_uses_exact_rationals() {
    let (code, out, _) = dsr(&["rank", data("cycle.ballots").to_str().unwrap(), "--format", "json"]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(totals(&doc), ["0/1", "3/1", "4/1", "1/1"]);
    assert_eq!(doc["winners"], serde_json::json!(["z"]));
    assert_eq!(doc["voters"], 3);
}

#[test]
fn alpha_flag_changes_the_ranking() {
    let f = data("tied-triangle.mat");
    let f = f.to_str().unwrap();
    for (alpha, want) in [("0", "b ≻ a ≻ c"), ("1/2", "a ∼ b ≻ c"), ("1", "a ≻ b ≻ c")] {
        let (code, out, _) = dsr(&["tournament", f, "--alpha", alpha]);
        assert_eq!(code, 0);
        assert!(out.contains(&format!("ranking: {want}")), "α = {alpha}: {out}");
    }
}

#[test]
fn rank_and_tournament_agree_on_a_tie_free_profile() {
    let ballots = data("weak.ballots");
    let (_, out, _) = dsr(&["rank", ballots.to_str().unwrap(), "--format", "json"]);
    let ranked: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(ranked["relation"]["tournament"], true);
    let rows: Vec<String> = ranked["relation"]["matrix"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    let matrix = format!("4\nlabels: a b c d\n{}\n", rows.join("\n"));
    let path = temp_file("weak.mat", &matrix);
    let (code, out, _) = dsr(&["tournament", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code, 0);
    let direct: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(ranked["pivots"], direct["pivots"]);
    assert_eq!(ranked["totals"], direct["totals"]);
}

#[test]
fn compare_reports_containments() {
    let (code, out, _) = dsr(&["compare", data("four-tournament.mat").to_str().unwrap(), "--format", "json"]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["copeland"]["winners"], serde_json::json!(["a", "b"]));
    assert_eq!(doc["uncovered_set"], serde_json::json!(["a", "b", "d"]));
    assert_eq!(doc["containments"]["winners ⊆ Copeland"], true);
    assert_eq!(doc["containments"]["winners ⊆ uncovered set"], true);
}

#[test]
fn compare_on_ballots_with_ties_skips_covering() {
    let path = temp_file("tied.ballots", "alternatives: a,b\n1: a > b\n1: b > a\n");
    let (code, out, _) = dsr(&["compare", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("uncovered set: n/a"));
}

#[test]
fn verify_prints_a_report() {
    let (code, out, _) = dsr(&["verify", "--m", "3-4", "--mode", "tournaments", "--format", "json"]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["instances"], 8 + 64);
    assert_eq!(doc["passed"], true);

    let (code, out, _) = dsr(&["verify", "--m", "4", "--mode", "random", "--seed", "3", "--count", "40", "--style", "weak"]);
    assert_eq!(code, 0);
    assert!(out.contains("seed: 3"));
}

#[test]
fn verify_is_reproducible() {
    let args = ["verify", "--m", "3-6", "--mode", "random-relations", "--seed", "11", "--count", "60", "--format", "json"];
    assert_eq!(dsr(&args).1, dsr(&args).1);
}

#[test]
fn empty_file_is_a_parse_error() {
    let path = temp_file("empty.ballots", "");
    let (code, out, err) = dsr(&["rank", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.starts_with("error:"));
}

#[test]
fn input_errors_exit_with_one() {
    let cases = [
        ("missing.ballots", "alternatives: a,b,c\n2: a > b\n", 2),
        ("unknown.ballots", "alternatives: a,b\n1: a > q\n", 2),
        ("mixed.ballots", "alternatives: a,b\n1: a > b\n1: approve {a}\n", 3),
        ("syntax.ballots", "alternatives: a,b\nthree: a > b\n", 2),
    ];
    for (name, text, line) in cases {
        let path = temp_file(name, text);
        let (code, _, err) = dsr(&["rank", path.to_str().unwrap()]);
        assert_eq!(code, 1, "{name}");
        assert!(err.contains(&format!("line {line}")), "{name}: {err}");
    }
    let bad = temp_file("bad.mat", "2\n0 1\n1 0\n");
    assert_eq!(dsr(&["tournament", bad.to_str().unwrap()]).0, 1);
    assert_eq!(dsr(&["rank", "/nonexistent/file"]).0, 1);
    assert_eq!(dsr(&["rank", data("cycle.ballots").to_str().unwrap(), "--alpha", "3/2"]).0, 1);
    assert_eq!(dsr(&["verify", "--m", "40", "--mode", "tournaments"]).0, 1);
    assert_eq!(dsr(&["frobnicate"]).0, 1);
}

#[test]
fn help_exits_cleanly() {
    let (code, out, _) = dsr(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}
