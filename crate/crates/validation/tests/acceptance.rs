//! Prints one PASS/FAIL line per criterion and exits non-zero if any fails.

use std::process::ExitCode;

use horizon_validation::{evaluate, CRITERIA};

fn main() -> ExitCode {
    let mut failed = 0;
    for (i, (name, check)) in CRITERIA.iter().enumerate() {
        let o = evaluate(*check);
        if !o.pass {
            failed += 1;
        }
        println!("{} criterion {}: {name}: {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.detail);
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
