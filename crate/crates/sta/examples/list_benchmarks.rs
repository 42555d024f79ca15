//! Tour of the built-in benchmark registry.
//!
//! Prints the registry listing (name, dimension, search box, recorded best
//! value), then spot-checks every problem: entries with a recorded minimizer
//! are evaluated there and compared against the recorded best, and entries
//! without one are probed with a seeded uniform sample of their box.
//!
//! Run with:
//!
//! ```text
//! cargo run --example list_benchmarks
//! ```

use sta::benchmarks::{self, SpotCheckOutcome};
use sta::report;

fn main() {
    let benches = benchmarks::registry();

    println!("{}", report::benchmark_listing(&benches));

    println!("spot checks (objective evaluated at the recorded optimum):");
    for bench in &benches {
        match benchmarks::spot_check(bench) {
            SpotCheckOutcome::AtOptimizer {
                value,
                error: Some(error),
            } => {
                println!(
                    "  {:<4} f(x*) = {:<24} |f(x*) - best| = {:.2e}",
                    bench.name(),
                    report::display_value(value),
                    error
                );
            }
            SpotCheckOutcome::AtOptimizer { value, error: None } => {
                println!(
                    "  {:<4} f(x*) = {:<24} (no recorded best to compare)",
                    bench.name(),
                    report::display_value(value)
                );
            }
            SpotCheckOutcome::ProbeBest { value, samples } => {
                println!(
                    "  {:<4} best of {samples} uniform probes = {}",
                    bench.name(),
                    report::display_value(value)
                );
            }
        }
    }
}
