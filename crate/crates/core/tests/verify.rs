use picard_ck::verify::{is_float_free, run, Execution, Scenario, Status, Suite};

fn scenario(json: &str) -> Scenario {
    Scenario::parse(json).unwrap()
}

#[test]
fn full_run_has_no_failures() {
    let r = run(&Scenario::default(), Execution::Parallel).unwrap();
    for c in &r.checks {
        assert_ne!(c.status, Status::Fail, "{} failed: {}", c.id, c.witness);
    }
    assert!(r.ok());
    assert_eq!(r.summary.total, r.checks.len());
    assert_eq!(r.check("higgs.obstruction_s2").unwrap().status, Status::Bounded);
}

#[test]
fn parallel_and_sequential_agree_byte_for_byte() {
    let s = Scenario::default();
    let a = run(&s, Execution::Parallel).unwrap().to_json();
    let b = run(&s, Execution::Sequential).unwrap().to_json();
    let c = run(&s, Execution::Parallel).unwrap().to_json();
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn report_is_float_free() {
    let r = run(&Scenario::default(), Execution::Sequential).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert!(is_float_free(&v));
}

#[test]
fn single_suite_only() {
    let r = run(&scenario(r#"{"suites": ["lattice"]}"#), Execution::Parallel).unwrap();
    assert!(!r.checks.is_empty());
    assert!(r.checks.iter().all(|c| c.suite == Suite::Lattice));
}

#[test]
fn small_truncation_is_a_failed_check() {
    let r = run(&scenario(r#"{"suites": ["l2"], "truncation_bound": 1}"#), Execution::Parallel).unwrap();
    assert!(!r.ok());
    let c = r.check("l2.theta_stable").unwrap();
    assert_eq!(c.status, Status::Fail);
    assert!(c.witness["error"].as_str().unwrap().contains("below 2"));
}

#[test]
fn missing_axiom_degrades_vanishing_to_failure() {
    let r = run(&scenario(r#"{"suites": ["higgs"], "axioms": ["nef_big_dual", "nef_big_dual_l2"]}"#), Execution::Parallel)
        .unwrap();
    assert_eq!(r.check("higgs.vanishing_e").unwrap().status, Status::Fail);
    assert_eq!(r.check("higgs.vanishing_e").unwrap().witness["verdict"]["kind"], "unknown");
    assert_eq!(r.check("higgs.reduce_e").unwrap().status, Status::Pass);
}

#[test]
fn axioms_used_are_listed() {
    let r = run(&scenario(r#"{"suites": ["higgs"]}"#), Execution::Parallel).unwrap();
    let c = r.check("higgs.vanishing_e").unwrap();
    assert_eq!(c.axioms_used, vec!["bogomolov_sommese", "nef_big_dual"]);
}
