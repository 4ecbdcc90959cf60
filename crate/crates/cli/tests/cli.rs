use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_picard-ck"))
}

fn json_of(out: &std::process::Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn verify_all_passes() {
    let out = bin().args(["verify", "all"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json_of(&out);
    assert_eq!(v["summary"]["failed"], 0);
    assert_eq!(v["suites"].as_array().unwrap().len(), 6);
}

#[test]
fn single_suite() {
    let out = bin().args(["verify", "motives"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["suite"] == "motives"));
}

#[test]
fn unknown_suite_is_usage_error() {
    let out = bin().args(["verify", "astrology"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_flag_is_usage_error() {
    let out = bin().args(["verify", "--frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_scenario_is_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("s.json");
    std::fs::write(&p, "{ suites: ").unwrap();
    let out = bin().args(["verify", "--scenario"]).arg(&p).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn truncation_one_fails_with_exit_one() {
    let out = bin().args(["verify", "l2", "--truncation", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    assert!(v["summary"]["failed"].as_u64().unwrap() > 0);
}

#[test]
fn out_file_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let scen = dir.path().join("s.json");
    std::fs::write(&scen, r#"{"suites": ["higgs", "lattice"], "truncation_bound": 3}"#).unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (p, extra) in [(&a, None), (&b, Some("--sequential"))] {
        let mut cmd = bin();
        cmd.args(["verify", "--scenario"]).arg(&scen).arg("--out").arg(p);
        if let Some(x) = extra {
            cmd.arg(x);
        }
        assert_eq!(cmd.output().unwrap().status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn scenario_output_field_is_used() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("r.json");
    let scen = dir.path().join("s.json");
    std::fs::write(&scen, serde_json::json!({ "suites": ["tensor"], "output": target }).to_string()).unwrap();
    let out = bin().args(["verify", "--scenario"]).arg(&scen).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&target).unwrap()).unwrap();
    assert_eq!(v["suites"][0], "tensor");
}

#[test]
fn positional_suite_overrides_scenario() {
    let dir = tempfile::tempdir().unwrap();
    let scen = dir.path().join("s.json");
    std::fs::write(&scen, r#"{"suites": ["higgs"]}"#).unwrap();
    let out = bin().args(["verify", "curves", "--scenario"]).arg(&scen).output().unwrap();
    let v = json_of(&out);
    assert_eq!(v["suites"], serde_json::json!(["curves"]));
}
