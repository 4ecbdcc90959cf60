//! Batch verification: a JSON scenario selects suites, each suite runs a fixed
//! list of checks, and the report is a deterministic JSON document with no
//! floating-point values.

pub mod report;
pub mod scenario;
pub mod suites;

pub use report::{is_float_free, Check, Report, Status, Summary};
pub use scenario::{AxiomSpec, Scenario, Suite, VerifyError, DEFAULT_TRUNCATION};
pub use suites::Context;

/// How suites are scheduled. Output is identical either way.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Execution {
    #[default]
    Parallel,
    Sequential,
}

/// Runs the scenario's suites and assembles the report.
pub fn run(scenario: &Scenario, execution: Execution) -> Result<Report, VerifyError> {
    let ctx = Context::from_scenario(scenario)?;
    let suites = scenario.selected_suites()?;
    let per_suite = run_suites(&ctx, &suites, execution);
    Ok(Report::assemble(&ctx, &suites, per_suite))
}

#[cfg(feature = "parallel")]
fn run_suites(ctx: &Context, suites: &[Suite], execution: Execution) -> Vec<Vec<Check>> {
    use rayon::prelude::*;
    match execution {
        Execution::Parallel => suites.par_iter().map(|s| suites::run_suite(ctx, *s)).collect(),
        Execution::Sequential => suites.iter().map(|s| suites::run_suite(ctx, *s)).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
fn run_suites(ctx: &Context, suites: &[Suite], _execution: Execution) -> Vec<Vec<Check>> {
    suites.iter().map(|s| suites::run_suite(ctx, *s)).collect()
}
