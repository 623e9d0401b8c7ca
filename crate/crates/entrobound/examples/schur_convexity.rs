//! Run the randomized Schur-convexity verification in-process: thousands of
//! seeded comparable pairs for the eligible families, then the same sweep
//! for Renyi-2, which is expected to fail.
//!
//! ```bash
//! cargo run --release --example schur_convexity
//! ```

use entrobound::entropy::EntropyFamily;
use entrobound::oracle::{run_suite, RngSeed, Suite, SuiteConfig};

fn main() {
    let config = SuiteConfig {
        trials: Some(500),
        dims: Some(vec![3, 4, 5, 6]),
        eps_values: Some(vec![0.05, 0.2, 0.6]),
        seed: Some(RngSeed(42)),
        ..SuiteConfig::default()
    };
    let report = run_suite(Suite::SchurConvexity, &config).unwrap();
    println!(
        "eligible families: {} checks, {} failures, max violation {:.3e}",
        report.trials,
        report.failures.len(),
        report.max_violation
    );
    assert!(report.passed());

    let hostile = SuiteConfig {
        families: Some(vec![EntropyFamily::renyi(2.0).unwrap()]),
        trials: Some(500),
        dims: Some(vec![4]),
        eps_values: Some(vec![0.05]),
        seed: Some(RngSeed(42)),
        ..SuiteConfig::default()
    };
    let report = run_suite(Suite::SchurConvexity, &hostile).unwrap();
    println!(
        "renyi(2):          {} checks, {} failures, max violation {:.3e}",
        report.trials,
        report.failures.len(),
        report.max_violation
    );
    if let Some(first) = report.failures.first() {
        println!("first violation: {}", first.inputs);
    }
    assert!(
        !report.passed(),
        "the gap for alpha > 1 is not Schur convex"
    );
}
