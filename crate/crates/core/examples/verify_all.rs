use std::time::Instant;

use coslambda::verify::{run_suite, Suite, VerifyOptions};

fn main() {
    let opts = VerifyOptions::default();
    for suite in Suite::ALL {
        let start = Instant::now();
        let report = run_suite(suite, &opts).expect("suite errored");
        println!(
            "{:<20} {:<5} {:>7.2}s",
            suite.name(),
            if report.passed { "pass" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
        for c in &report.checks {
            println!(
                "    {:<60} {:>12.3e} <= {:<8.1e} {}",
                c.name,
                c.measured,
                c.tolerance,
                if c.passed { "ok" } else { "FAIL" }
            );
        }
    }
}
