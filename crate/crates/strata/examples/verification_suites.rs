//! Running the named verification suites from the library.
//!
//! Each suite bundles the checks behind one headline claim — gap
//! sequences, invariant degrees, Garside centrality, kernel probes — and
//! reports per-check pass/fail lines. The CLI exposes the same suites as
//! `strata verify-paper <name>`; this example drives a fast subset
//! directly and prints a compact transcript.
//!
//! Run with: `cargo run --example verification_suites`

use strata::report::{self, SuiteConfig, SUITE_NAMES};

fn main() -> strata::Result<()> {
    println!("available suites: {SUITE_NAMES:?}");
    println!();

    // Trim the search budget so the kernel suite stays interactive; the
    // CLI reads the same knob from STRATA_SEARCH_BUDGET.
    let config = SuiteConfig {
        search_budget: 2_000,
        ..SuiteConfig::default()
    };

    for name in ["gaps", "spin", "milnor", "roots", "orbit", "kernel"] {
        let suite = report::run_suite(name, &config)?;
        println!("suite {:<6} pass = {}", suite.name, suite.pass);
        for check in &suite.checks {
            println!(
                "  [{}] {:<28} {}",
                if check.pass { "ok" } else { "FAIL" },
                check.name,
                check.statement,
            );
        }
        assert!(suite.pass);
    }
    Ok(())
}
