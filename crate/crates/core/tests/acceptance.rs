//! Runs every acceptance criterion with the full profile and prints one
//! line per criterion. Exits non-zero if any criterion does not pass.

use std::process::ExitCode;

use digraph_adjoints::lab::suite::{run_criterion, Profile, CRITERIA};
use digraph_adjoints::lab::{LabConfig, Verdict, DEFAULT_SEED};

fn main() -> ExitCode {
    let cfg = LabConfig::default();
    let mut failed = 0;
    println!("\nrunning {} acceptance criteria", CRITERIA.len());
    for c in &CRITERIA {
        match run_criterion(c.id, Profile::Full, DEFAULT_SEED, &cfg) {
            Ok(outcome) => {
                println!("{}", outcome.line());
                if outcome.verdict != Verdict::Pass {
                    failed += 1;
                    println!("  report: {}", outcome.report.to_json());
                }
            }
            Err(e) => {
                failed += 1;
                println!("[ERROR] criterion {}: {}: {e}", c.id, c.title);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed\n",
        CRITERIA.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
