//! Acceptance run: one line per criterion.
//!
//! Criteria 1–10 are read off the tagged checks of `run_suite("all", seed)`;
//! criterion 11 reruns the suite and compares the serialised reports byte for
//! byte. Exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use d4git::suite::{run_suite, Check, Status};

const SEED: u64 = 42;

const TITLES: [&str; 11] = [
    "weight table reproduces the reference table verbatim",
    "base point residuals, Z° membership, det B identity",
    "isotropy of the base point is Q8; relaxed stabilizer has order 16",
    "preprojective relations on Z x V samples; leg relations off Z",
    "theta oracle agrees with King stability; certificates re-verify",
    "(-theta) oracle, certificates and semi-invariant",
    "chart closure modulo 1 + a2 p2^2 + a3 p3^2",
    "chart correspondence round trips and hat collapse",
    "independence witnesses for E1 and E2",
    "A1..A4 quotient fans and the S3 example",
    "run_suite(all, seed) is byte-deterministic",
];

fn line(n: usize, ok: bool, details: &str) -> bool {
    let st = if ok { "PASS" } else { "FAIL" };
    println!("criterion {n:>2}: {st} — {} ({details})", TITLES[n - 1]);
    ok
}

fn main() -> ExitCode {
    let start = Instant::now();
    let report = run_suite("all", SEED).expect("suite 'all' exists");
    let first = start.elapsed();

    let mut all_ok = true;
    for n in 1..=10u8 {
        let checks: Vec<&Check> = report.checks.iter().filter(|c| c.criterion == Some(n)).collect();
        let failed: Vec<&Check> = checks.iter().copied().filter(|c| c.status == Status::Fail).collect();
        let ok = !checks.is_empty() && failed.is_empty();
        let details = if checks.is_empty() {
            "no checks recorded".to_string()
        } else if failed.is_empty() {
            format!("{} checks", checks.len())
        } else {
            let f: Vec<String> = failed.iter().map(|c| format!("{}: {}", c.id, c.details)).collect();
            format!("{}/{} checks failed: {}", failed.len(), checks.len(), f.join(" | "))
        };
        all_ok &= line(n as usize, ok, &details);
    }

    let a = report.to_json();
    let b = run_suite("all", SEED).expect("suite 'all' exists").to_json();
    let ok = a == b;
    all_ok &= line(11, ok, &format!("{} bytes, seed {SEED}", a.len()));

    let untagged_failures: Vec<&str> = report
        .checks
        .iter()
        .filter(|c| c.criterion.is_none() && c.status == Status::Fail)
        .map(|c| c.id.as_str())
        .collect();
    if !untagged_failures.is_empty() {
        println!("supporting checks failed: {}", untagged_failures.join(", "));
        all_ok = false;
    }
    println!(
        "{} checks, {} passed; one suite run took {:.1}s",
        report.summary.total,
        report.summary.passed,
        first.as_secs_f64()
    );

    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
