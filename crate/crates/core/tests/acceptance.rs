//! One PASS/FAIL line per acceptance criterion. Runs without the test
//! harness so the lines are always printed.

use m11_brauer::checks::{registry, run_check, RunConfig, Status};

fn main() {
    let config = RunConfig { seed: 2026, trials: 100 };
    let mut checks: Vec<_> = registry().into_iter().filter(|c| c.criterion.is_some()).collect();
    checks.sort_by_key(|c| c.criterion);
    let mut failed = Vec::new();
    for check in &checks {
        let record = run_check(check, &config);
        let criterion = record.criterion.unwrap();
        let tag = match record.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        println!("criterion {criterion:>2} {tag} {} ({:.2}s): {}", record.name, record.seconds, record.summary);
        if record.status == Status::Fail {
            failed.push(criterion);
        }
    }
    println!("acceptance: {}/{} criteria pass", checks.len() - failed.len(), checks.len());
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
