//! End-to-end tests of the command-line surface: exact outputs, exit codes,
//! JSON round trips, and stdout determinism.

use std::process::{Command, Output};

fn wildkron(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wildkron"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = wildkron(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8")
}

#[test]
fn seq_outputs() {
    assert_eq!(
        stdout_of(&["seq", "--n", "3", "--kind", "A", "--upto", "5"]),
        "0 1 3 8 21 55\n"
    );
    assert_eq!(
        stdout_of(&["seq", "--n", "3", "--kind", "B", "--upto", "7"]),
        "0 1 1 2 3 5 8 13\n"
    );
    assert_eq!(
        stdout_of(&["seq", "--n", "3", "--kind", "s", "--upto", "5"]),
        "1 7 48\n"
    );
    assert_eq!(
        stdout_of(&["seq", "--n", "4", "--kind", "B", "--upto", "6"]),
        "0 1 1 3 4 11 15\n"
    );
}

#[test]
fn root_classification_output() {
    assert_eq!(
        stdout_of(&["root", "classify", "--n", "3", "--vec", "5,1"]),
        "NonRoot q=11\n"
    );
    assert_eq!(
        stdout_of(&["root", "classify", "--n", "3", "--vec", "8,7"]),
        "Imaginary q=-55\n"
    );
    assert_eq!(
        stdout_of(&["root", "classify", "--n", "3", "--vec", "3,8"]),
        "Real q=1\n"
    );
}

#[test]
fn orbit_output() {
    let text = stdout_of(&["orbit", "--n", "3", "--vec", "8,7", "--range", "-1..1"]);
    assert_eq!(text, "i=-1 (13,32)\ni=0 (8,7)\ni=1 (43,17)\n");
}

#[test]
fn census_human_and_json() {
    let text = stdout_of(&["census", "--n", "3", "--seed", "8,7", "--length", "60"]);
    assert_eq!(
        text,
        "length=60 count=2\nnode(i=1, r=1) dim=(43,17)\nnode(i=-1, r=2) dim=(21,39)\n"
    );

    let json = stdout_of(&[
        "census", "--n", "3", "--seed", "8,7", "--length", "60", "--json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&json).expect("valid json");
    assert_eq!(doc["count"], 2);
    assert_eq!(doc["hits"][0]["dim"][0], "43");
    assert_eq!(doc["hits"][1]["quasi_length"], 2);
}

#[test]
fn pairs_worked_example() {
    let text = stdout_of(&["pairs", "--n", "3", "--r", "1", "--s", "2", "--max-i", "2"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(
        lines[0],
        "i=1 seed=(8,7) node_r(i=1,r=1)=(43,17) node_s(i=-1,r=2)=(21,39) length=60"
    );
    assert_eq!(
        lines[1],
        "i=2 seed=(41,79) node_r(i=2,r=1)=(596,229) node_s(i=-1,r=2)=(237,588) length=825"
    );
}

#[test]
fn dimset_decisions() {
    assert_eq!(
        stdout_of(&["dimset", "--n", "3", "--seedA", "8,7", "--seedB", "43,17"]),
        "true\n"
    );
    assert_eq!(
        stdout_of(&["dimset", "--n", "3", "--seedA", "8,7", "--seedB", "7,8"]),
        "false\n"
    );
}

#[test]
fn ql_output() {
    let text = stdout_of(&["ql", "--n", "3", "--vec", "21,39"]);
    assert_eq!(
        text,
        "options: 1 2\nr=1 seed=(21,39) layer=(21,39)\nr=2 seed=(7,13) layer=(39,96)\n"
    );
}

#[test]
fn brick_json_round_trip_through_homdim() {
    let dir = tempfile::tempdir().unwrap();
    for vec in ["1,1", "8,7", "7,3", "2,3", "5,2"] {
        let path = dir
            .path()
            .join(format!("brick_{}.json", vec.replace(',', "_")));
        let path_str = path.to_str().unwrap();
        let out = wildkron(&[
            "brick", "--n", "3", "--vec", vec, "--out", path_str, "--verify",
        ]);
        assert!(out.status.success(), "brick {vec} failed");
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(
            text.contains("\"end_dim\":1"),
            "certificate for {vec}: {text}"
        );
        assert!(text.contains("verified"));

        let hom = stdout_of(&["homdim", "--rep1", path_str, "--rep2", path_str]);
        assert_eq!(hom, "1\n", "self-hom of the {vec} brick");
    }
}

#[test]
fn verify_suites_pass_and_obey_exit_convention() {
    let out = wildkron(&[
        "verify",
        "--suite",
        "identities",
        "--n",
        "3..4",
        "--upto",
        "10",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("suite=identities cases="));
    assert!(text.contains("failures=0"));

    let out = wildkron(&[
        "verify",
        "--suite",
        "pairs",
        "--n",
        "3",
        "--r-bound",
        "2",
        "--s-bound",
        "2",
        "--json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value =
        serde_json::from_str(String::from_utf8(out.stdout).unwrap().trim()).unwrap();
    assert_eq!(doc["suite"], "pairs");
    assert_eq!(doc["failures"].as_array().unwrap().len(), 0);
    // Timing goes to stderr, never stdout.
    assert!(String::from_utf8(out.stderr).unwrap().contains("time_ms="));
}

#[test]
fn exit_codes() {
    // Usage error from clap.
    assert_eq!(wildkron(&["seq", "--n", "3"]).status.code(), Some(2));
    // Invalid parameter.
    assert_eq!(
        wildkron(&["root", "classify", "--n", "2", "--vec", "1,1"])
            .status
            .code(),
        Some(2)
    );
    // Non-imaginary root rejected by the brick constructor.
    assert_eq!(
        wildkron(&["brick", "--n", "3", "--vec", "3,8"])
            .status
            .code(),
        Some(2)
    );
    // Malformed vector.
    assert_eq!(
        wildkron(&["root", "classify", "--n", "3", "--vec", "nope"])
            .status
            .code(),
        Some(2)
    );
    // Orbit over a tame quiver is refused.
    assert_eq!(
        wildkron(&["orbit", "--n", "2", "--vec", "1,1", "--range", "0..1"])
            .status
            .code(),
        Some(2)
    );
    // A census length that would need an unbounded scan is refused.
    assert_eq!(
        wildkron(&["census", "--n", "3", "--seed", "1,1", "--length", "1000000000"])
            .status
            .code(),
        Some(2)
    );
    // Success.
    assert_eq!(
        wildkron(&["root", "classify", "--n", "3", "--vec", "1,1"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn verify_merges_over_a_range_of_quivers() {
    let out = wildkron(&[
        "verify", "--suite", "pairs", "--n", "3..5", "--r-bound", "2", "--s-bound", "2",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("suite=pairs"));
    assert!(text.contains("failures=0"));
}

#[test]
fn stdout_is_deterministic() {
    let args = [
        "census", "--n", "3", "--seed", "5,4", "--length", "100", "--json",
    ];
    let first = wildkron(&args);
    let second = wildkron(&args);
    assert_eq!(first.stdout, second.stdout);
    let args = [
        "verify",
        "--suite",
        "dimset",
        "--n",
        "3",
        "--seed-bound",
        "4",
    ];
    let first = wildkron(&args);
    let second = wildkron(&args);
    assert_eq!(first.stdout, second.stdout);
}
