//! Convergence traces: where the two variants differ.
//!
//! Runs both solver variants on the 20-dimensional banana-valley problem
//! (`g11`, minimum 0 at the all-ones point) from the same seed, prints the
//! best-so-far value at selected epochs side by side, reports when each
//! variant first crossed a set of thresholds, and writes both full traces
//! as CSV.
//!
//! The contrast is the point: on this surface the axesion operator and the
//! sawtooth rotation-radius schedule of the `new` variant reach residuals
//! the `original` schedule does not approach within the same budget.
//!
//! Run with:
//!
//! ```text
//! cargo run --release --example convergence_trace
//! ```

use std::error::Error;
use std::fs;

use sta::benchmarks;
use sta::report::{display_value, trace_csv};
use sta::solver::{run, RunConfig, RunResult, StaVariant};

const CHECKPOINTS: [usize; 9] = [1, 2, 5, 10, 50, 100, 250, 500, 1000];
const THRESHOLDS: [f64; 3] = [1e1, 1e-3, 1e-9];

fn first_crossing(result: &RunResult, threshold: f64) -> Option<usize> {
    result
        .trace
        .iter()
        .find(|p| p.best_f <= threshold)
        .map(|p| p.epoch)
}

fn main() -> Result<(), Box<dyn Error>> {
    let bench = benchmarks::find("g11")?;
    let seed = 7;
    println!(
        "minimizing {} ({}-dimensional) for 1000 epochs, seed {seed}\n",
        bench.name(),
        bench.dim()
    );

    let mut results = Vec::new();
    for variant in StaVariant::ALL {
        let config = RunConfig::new(variant, seed);
        results.push((variant, run(&config, &bench)?));
    }

    println!("{:>6}  {:>14}  {:>14}", "epoch", "original", "new");
    for epoch in CHECKPOINTS {
        let row: Vec<String> = results
            .iter()
            .map(|(_, r)| format!("{:>14}", display_value(r.trace[epoch - 1].best_f)))
            .collect();
        println!("{epoch:>6}  {}", row.join("  "));
    }

    println!("\nfirst epoch at or below each threshold:");
    for threshold in THRESHOLDS {
        let row: Vec<String> = results
            .iter()
            .map(|(variant, r)| match first_crossing(r, threshold) {
                Some(epoch) => format!("{variant} at epoch {epoch}"),
                None => format!("{variant} never"),
            })
            .collect();
        println!("  {:>6}: {}", display_value(threshold), row.join(", "));
    }

    let out_dir = std::env::temp_dir().join("sta-convergence-trace");
    fs::create_dir_all(&out_dir)?;
    println!();
    for (variant, result) in &results {
        let path = out_dir.join(format!("trace_{variant}.csv"));
        fs::write(&path, trace_csv(&result.trace))?;
        println!(
            "wrote {} (final best {})",
            path.display(),
            display_value(result.best_f())
        );
    }
    Ok(())
}
