use serde::Serialize;
use serde_json::Value;

use super::suites::Context;
use super::Suite;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// The check holds, and its result is an upper bound rather than a value.
    Bounded,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    pub suite: Suite,
    pub status: Status,
    pub witness: Value,
    pub axioms_used: Vec<String>,
    pub citation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub bounded: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub suites: Vec<Suite>,
    pub truncation_bound: u32,
    pub axioms: Vec<String>,
    pub summary: Summary,
    pub checks: Vec<Check>,
}

impl Report {
    pub(crate) fn assemble(ctx: &Context, suites: &[Suite], per_suite: Vec<Vec<Check>>) -> Self {
        let checks: Vec<Check> = per_suite.into_iter().flatten().collect();
        let count = |s: Status| checks.iter().filter(|c| c.status == s).count();
        let summary = Summary {
            total: checks.len(),
            passed: count(Status::Pass),
            bounded: count(Status::Bounded),
            failed: count(Status::Fail),
        };
        Report {
            tool: "picard-ck".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            suites: suites.to_vec(),
            truncation_bound: ctx.truncation_bound,
            axioms: ctx.registry.to_list().into_iter().map(|a| a.id).collect(),
            summary,
            checks,
        }
    }

    pub fn ok(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// True if no number anywhere in `v` is a float.
pub fn is_float_free(v: &Value) -> bool {
    match v {
        Value::Number(n) => n.is_i64() || n.is_u64(),
        Value::Array(a) => a.iter().all(is_float_free),
        Value::Object(o) => o.values().all(is_float_free),
        _ => true,
    }
}
