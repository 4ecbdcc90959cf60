use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use picard_ck::verify::{run, Execution, Scenario, VerifyError};

#[derive(Parser)]
#[command(name = "picard-ck", version, about = "Exact checks for the Picard modular surface computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run check suites and emit a JSON report.
    Verify {
        /// Suite name (lattice, curves, tensor, higgs, l2, motives) or `all`.
        suite: Option<String>,
        /// Scenario JSON file.
        #[arg(long)]
        scenario: Option<PathBuf>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Truncation bound for L2 module comparisons.
        #[arg(long)]
        truncation: Option<u32>,
        /// Run suites one after another.
        #[arg(long)]
        sequential: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { suite, scenario, out, truncation, sequential } => {
            match verify(suite, scenario, out, truncation, sequential) {
                Ok(true) => ExitCode::SUCCESS,
                Ok(false) => ExitCode::from(1),
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
    }
}

fn verify(
    suite: Option<String>,
    scenario: Option<PathBuf>,
    out: Option<PathBuf>,
    truncation: Option<u32>,
    sequential: bool,
) -> Result<bool, VerifyError> {
    let mut s = match &scenario {
        Some(p) => Scenario::from_path(p)?,
        None => Scenario::default(),
    };
    if let Some(name) = suite {
        s.suites = Some(vec![name]);
        s.selected_suites()?;
    }
    if let Some(t) = truncation {
        s.truncation_bound = t;
    }
    let exec = if sequential { Execution::Sequential } else { Execution::Parallel };
    let report = run(&s, exec)?;
    let json = report.to_json();
    match out.or_else(|| s.output.as_ref().map(PathBuf::from)) {
        Some(path) => {
            std::fs::write(&path, &json)?;
            let m = &report.summary;
            eprintln!("{} checks: {} pass, {} bounded, {} fail", m.total, m.passed, m.bounded, m.failed);
        }
        None => print!("{json}"),
    }
    Ok(report.ok())
}
