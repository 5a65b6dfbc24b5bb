use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidtrees")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn temp_file(name: &str, body: &str) -> PathBuf {
    let p = std::env::temp_dir().join(format!("braidtrees-{}-{name}", std::process::id()));
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn enumerate_examples() {
    let o = run(&["enumerate", "--kind", "lush", "--n", "5", "--count-only", "--plain"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "72");
    let o = run(&["enumerate", "--kind", "lush", "--n", "5", "--count-only"]);
    assert_eq!(json(&o)["count"], 72);
    let o = run(&["enumerate", "--kind", "binary", "--n", "0", "--plain"]);
    assert_eq!(stdout(&o).trim(), "|");
    let o = run(&["enumerate", "--kind", "angular", "--n", "2", "--count-only", "--plain"]);
    assert_eq!(stdout(&o).trim(), "3");
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(run(&["enumerate", "--kind", "oak", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--kind", "binary", "--n", "2", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "--op", "star", "--alg", "bt", "(| e1 |", "(| e2 |)"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "--op", "dot", "--alg", "bt", "(| e1 |)", "(| e2 |)"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--suite", "theta", "--braiding", "twist"]).status.code(), Some(2));
    let o = run(&["compute", "--op", "antipode", "--alg", "at", "--dim", "1", "[| e2 |]"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn checks_pass() {
    let o = run(&["check", "--suite", "theta", "--braiding", "flip", "--dim", "2", "--max-degree", "3"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let j = json(&o);
    assert_eq!(j["all_pass"], true);
    assert_eq!(j["identities"]["bijectivity"]["status"], "pass");
    let o = run(&["check", "--suite", "dendriform", "--braiding", "diag:2", "--dim", "1", "--max-degree", "3"]);
    assert!(o.status.success(), "{}", stdout(&o));
    for suite in ["hopf-bt", "hopf-rt", "tridendriform", "hopf-at", "lush-quotient", "yang-baxter"] {
        let o = run(&["check", "--suite", suite, "--max-degree", "2"]);
        assert!(o.status.success(), "{suite}: {}", stdout(&o));
    }
}

#[test]
fn broken_braiding_is_reported() {
    let bad = temp_file(
        "bad.json",
        r#"{"dim":2,"kind":"explicit","entries":[
            {"i":1,"j":1,"k":1,"l":1,"c":"1"},{"i":2,"j":2,"k":2,"l":2,"c":"1"},
            {"i":1,"j":2,"k":2,"l":1,"c":"1"},{"i":2,"j":1,"k":1,"l":2,"c":"1"},
            {"i":1,"j":2,"k":1,"l":2,"c":"1"}]}"#,
    );
    let spec = format!("file:{}", bad.display());
    let o = run(&["check", "--suite", "yang-baxter", "--braiding", &spec]);
    assert_eq!(o.status.code(), Some(1));
    let j = json(&o);
    assert_eq!(j["identities"]["braid-relation"]["status"], "fail");
    assert!(j["identities"]["braid-relation"]["counterexample"].as_str().unwrap().contains("σ1σ2σ1"));
    let o = run(&["check", "--suite", "dendriform", "--braiding", &spec]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("braid relation"));
    std::fs::remove_file(bad).ok();
}

#[test]
fn compute_examples() {
    let o = run(&["compute", "--op", "coproduct", "--alg", "rt", "--braiding", "flip", "e1(e2 e3(e4 e5))"]);
    assert!(o.status.success());
    let terms = json(&o);
    let terms = terms.as_array().unwrap();
    assert_eq!(terms.len(), 11);
    assert!(terms.iter().all(|t| t["coeff"] == "1/1" && t["term"]["left"].is_string()));
    assert!(terms.iter().any(|t| t["term"]["left"] == "e2 e4" && t["term"]["right"] == "e1(e3(e5))"));

    let o = run(&["compute", "--op", "star", "--alg", "bt", "--braiding", "flip", "(| e1 |)", "(| e2 |)"]);
    let j = json(&o);
    let trees: Vec<&str> = j.as_array().unwrap().iter().map(|t| t["term"].as_str().unwrap()).collect();
    assert_eq!(trees, ["((| e1 |) e2 |)", "(| e1 (| e2 |))"]);

    let o = run(&["compute", "--op", "antipode", "--alg", "at", "--braiding", "flip", "[| e1 |]"]);
    let j = json(&o);
    assert_eq!(j[0]["coeff"], "-1/1");
    assert_eq!(j[0]["term"], "[| e1 |]");
}

#[test]
fn expressions() {
    let o = run(&["--plain", "compute", "--op", "eval", "--alg", "at", "{[| e1 |] <: [| e2 |]} + [| e1 |] :> [| e2 |]"]);
    assert_eq!(stdout(&o).trim(), "[[| e1 |] e2 |] + [| e1 [| e2 |]]");
    let o = run(&["--plain", "compute", "--op", "eval", "--alg", "at", "[| e1 |] * [| e2 |] - [| e1 |] . [| e2 |]"]);
    assert_eq!(stdout(&o).trim(), "[[| e1 |] e2 |] + [| e1 [| e2 |]]");
    let o = run(&["--plain", "compute", "--op", "eval", "--alg", "rt", "3/2 e1 * e2 - 1"]);
    assert_eq!(stdout(&o).trim(), "-1 + 3/2·e1 e2");
    let o = run(&["--plain", "compute", "--op", "theta", "--alg", "bt", "((| e1 (| e2 |)) e3 |)"]);
    assert_eq!(stdout(&o).trim(), "-e1(e2 e3) + e1(e2) e3");
    let o = run(&["--plain", "compute", "--op", "counit", "--alg", "bt", "2 | + (| e1 |)"]);
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn reduce_and_lush_dot() {
    let alg = temp_file(
        "alg.json",
        r#"{"dim":2,"mult":[{"i":1,"j":1,"k":2,"c":"1"}],
            "braiding":{"dim":2,"kind":"diagonal","q":[["-1","1"],["1","1"]]}}"#,
    );
    let a = alg.to_str().unwrap();
    let o = run(&["--plain", "compute", "--op", "reduce", "--alg", "at", "--algebra", a, "[| e1 | e1 |]"]);
    assert_eq!(stdout(&o).trim(), "[| e2 |]");
    let o = run(&["--plain", "compute", "--op", "lush-dot", "--alg", "at", "--algebra", a, "[| e1 |]", "[| e1 |]"]);
    assert_eq!(stdout(&o).trim(), "[| e2 |]");
    let o = run(&["compute", "--op", "lush-dot", "--alg", "at", "--algebra", a, "[| e1 | e1 |]", "[| e1 |]"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["check", "--suite", "lush-quotient", "--algebra", a, "--max-degree", "3"]);
    assert!(o.status.success(), "{}", stdout(&o));
    std::fs::remove_file(alg).ok();
}

#[test]
fn sequences() {
    let o = run(&["--plain", "sequence", "--name", "lush", "--upto", "8"]);
    let vals: Vec<String> = stdout(&o).lines().skip(1).map(|l| l.split('\t').nth(1).unwrap().to_string()).collect();
    assert_eq!(vals, ["1", "1", "2", "6", "20", "72", "272", "1064", "4272"]);
    let o = run(&["sequence", "--name", "lush", "--upto", "8", "--method", "all"]);
    assert!(o.status.success());
    assert_eq!(json(&o)["agree"], true);
    let o = run(&["sequence", "--name", "a141200", "--upto", "9"]);
    let j = json(&o);
    let v = j["values"].as_array().unwrap();
    assert_eq!(v[7]["recursion"], "1065");
    assert_eq!(v[8]["recursion"], "4282");
    let o = run(&["--plain", "sequence", "--name", "catalan", "--upto", "5"]);
    let text = stdout(&o);
    let vals: Vec<&str> = text.lines().skip(1).map(|l| l.split('\t').nth(1).unwrap()).collect();
    assert_eq!(vals.join(" "), "1 1 2 5 14 42");
    let o = run(&["sequence", "--name", "schroeder", "--upto", "6", "--method", "all"]);
    assert_eq!(json(&o)["agree"], true);
    assert_eq!(run(&["sequence", "--name", "lush", "--upto", "50"]).status.code(), Some(2));
}

#[test]
fn term_cap() {
    let o = Command::new(env!("CARGO_BIN_EXE_braidtrees"))
        .args(["compute", "--op", "coproduct", "--alg", "rt", "e1(e2 e3(e4 e5))"])
        .env("BRAIDTREES_MAX_TERMS", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("11 terms"));
}

#[test]
fn output_is_deterministic() {
    let args = ["compute", "--op", "coproduct", "--alg", "at", "--braiding", "diag:-2", "[[| e1 |] e2 [| e1 | e2 |]]"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["check", "--suite", "hopf-at", "--max-degree", "2"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
