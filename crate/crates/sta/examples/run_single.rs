//! A single optimization run, with both solver variants side by side.
//!
//! Solves the two-dimensional camel-back surface (`g5`, six local minima,
//! two of them global at -1.0316) once per variant from the same seed and
//! prints the final value, the minimizer, and the evaluation budget spent.
//!
//! Run with:
//!
//! ```text
//! cargo run --example run_single
//! ```

use sta::benchmarks;
use sta::report::display_value;
use sta::solver::{run, RunConfig, StaVariant};
use sta::StaError;

fn main() -> Result<(), StaError> {
    let bench = benchmarks::find("g5")?;
    println!(
        "minimizing {} ({}-dimensional, recorded best {})\n",
        bench.name(),
        bench.dim(),
        display_value(bench.theoretical_best().expect("g5 records its best"))
    );

    for variant in StaVariant::ALL {
        let config = RunConfig::new(variant, 42).with_epochs(300);
        let result = run(&config, &bench)?;

        let x: Vec<String> = result.best.x().iter().map(|&v| format!("{v:.6}")).collect();
        println!("variant {variant:<8} (seed {})", result.seed);
        println!("  best f      = {}", display_value(result.best_f()));
        println!("  best x      = ({})", x.join(", "));
        println!("  evaluations = {}", result.evaluations);
        println!(
            "  trace       = {} epochs, first {} then {}",
            result.trace.len(),
            display_value(result.trace[0].best_f),
            display_value(result.trace.last().expect("non-empty trace").best_f),
        );
        println!();
    }

    println!("both variants land on one of the two global minimizers,");
    println!("(+-0.0898, -+0.7127); rerunning reproduces these lines exactly.");
    Ok(())
}
