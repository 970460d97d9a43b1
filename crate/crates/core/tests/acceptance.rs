//! Runs every acceptance criterion and prints one PASS/FAIL line each.
//! Extra arguments act as filters (criterion number, group or name fragment);
//! libtest flags are ignored.

use std::process::ExitCode;

use mixcay::verify::{run_criterion, VerifyOptions, CRITERIA};

fn main() -> ExitCode {
    let filters: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let opts = VerifyOptions::default();
    let mut failed = 0;
    for c in CRITERIA.iter().filter(|c| filters.is_empty() || filters.iter().any(|f| c.matches(f))) {
        let report = run_criterion(*c, &opts);
        println!("{report}");
        failed += !report.passed as usize;
    }
    println!("acceptance: {failed} failed");
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
