use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn strata(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_strata"))
        .args(args)
        .env_remove("STRATA_BUDGET")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = strata(&all);
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn stratify_prints_ranks() {
    let o = strata(&["stratify", "--sem", "grounded", &data("transitive_chain.apx")]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "A1:0 A2:1 A3:2\n");
}

#[test]
fn zrank_table_and_partition() {
    let o = strata(&["zrank", &data("penguin.kb")]);
    let rows: Vec<(String, String)> = stdout(&o)
        .lines()
        .map(|l| {
            let mut it = l.split_whitespace();
            (it.next().unwrap().into(), it.next().unwrap().into())
        })
        .collect();
    assert_eq!(rows.len(), 8);
    assert_eq!(rows[0], ("pbf".into(), "2".into()));
    assert_eq!(rows[7], ("-p-b-f".into(), "0".into()));
    let o = strata(&["zrank", "--partition", &data("penguin.kb")]);
    assert_eq!(stdout(&o), "0: (f | b)\n1: (b | p), (!f | p)\n");
}

#[test]
fn exit_codes() {
    assert_eq!(strata(&["bridge", &data("penguin.kb")]).status.code(), Some(0));
    let qp = strata(&["check", "--prop", "qp", "--sem", "gr", &data("defended_cycle.apx")]);
    assert_eq!(qp.status.code(), Some(1));
    assert!(stdout(&qp).contains("(A5, A2)"));
    let wvp = strata(&["check", "--prop", "wvp", "--sem", "gr", &data("defended_cycle.apx")]);
    assert_eq!(wvp.status.code(), Some(0));
    assert_eq!(strata(&["solve", "--sem", "nope", &data("triangle.tgf")]).status.code(), Some(2));
    assert_eq!(strata(&["solve", "--sem", "gr", "/no/such/file.apx"]).status.code(), Some(2));
    assert_eq!(strata(&["solve", "--sem", "gr", &data("penguin.kb")]).status.code(), Some(2));
    assert_eq!(strata(&["zrank", &data("triangle.tgf")]).status.code(), Some(2));
}

#[test]
fn json_schema() {
    let v = json(&["stratify", "--sem", "grounded", &data("self_attacking_chains.apx")]);
    assert_eq!(v["command"], "stratify");
    assert!(v["input"].as_str().unwrap().ends_with("self_attacking_chains.apx"));
    let lab = &v["result"]["labelings"][0];
    assert_eq!(lab["A1"], 2);
    assert_eq!(lab["A3"], "inf");
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["command", "input", "result"]);

    let e = json(&["enforce", "--sem", "gr", "--target", "A2", "--budget", "1", &data("self_attacking_chains.apx")]);
    assert_eq!(e["result"]["value"]["unknown_beyond"], 1);
    assert!(e["result"]["witness_edits"].is_null());
    let z = json(&["zrank", &data("penguin.kb")]);
    assert_eq!(z["result"]["worlds"][1]["world"], "pb-f");
    assert_eq!(z["result"]["worlds"][1]["rank"], 1);
    assert_eq!(
        json(&["solve", "--sem", "s", &data("triangle.tgf")]),
        json(&["solve", "--sem", "s", &data("triangle.tgf")])
    );
}

#[test]
fn enforce_reports_witness() {
    let o = strata(&["enforce", "--sem", "grounded", "--target", "A1", "--budget", "3", &data("self_attacking_chains.apx")]);
    assert_eq!(stdout(&o), "1\nremove A2 A1\n");
    let scan = strata(&["enforce", "--sem", "grounded", "--scan", &data("self_attacking_chains.apx")]);
    assert!(stdout(&scan).lines().any(|l| l == "A1 A2"));
}

#[test]
fn dot_has_every_node_and_edge() {
    let o = strata(&["dot", "--sem", "grounded", &data("defended_cycle.apx")]);
    let text = stdout(&o);
    assert_eq!(text.matches(" -> ").count(), 6);
    assert_eq!(text.matches("stratum=").count(), 5);
    assert_eq!(strata(&["dot", "--sem", "s", "--index", "9", &data("triangle.tgf")]).status.code(), Some(2));
    let induced = strata(&["induce", "--out", "dot", &data("penguin.kb")]);
    assert_eq!(stdout(&induced).matches(" -> ").count(), 21);
}

#[test]
fn format_override_and_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_strata"))
        .args(["--format", "tgf", "stratify", "--sem", "gr", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"a\nb\n#\na b\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o), "a:0 b:1\n");
    let wrong = strata(&["--format", "tgf", "solve", "--sem", "gr", &data("transitive_chain.apx")]);
    assert_eq!(wrong.status.code(), Some(2));
}

#[test]
fn induce_round_trips_through_apx() {
    let o = strata(&["induce", &data("penguin.kb")]);
    let text = stdout(&o);
    assert_eq!(text.matches("att(").count(), 21);
    assert_eq!(text.matches("arg(").count(), 8);
}

#[test]
fn budget_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_strata"))
        .args(["stratify", "--sem", "complete", &data("linked_cycles.apx")])
        .env("STRATA_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}
