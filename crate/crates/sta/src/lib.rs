//! State transition algorithm for continuous global optimization.
//!
//! The solver treats optimization as a sequence of state transitions: from
//! the incumbent solution, a stochastic operator generates a batch of
//! candidate states, and a greedy step keeps the strictly best one. Four
//! operators with distinct geometry drive the search:
//!
//! * **rotation** — samples inside a shrinking hypersphere (local search);
//! * **translation** — line search along the latest improvement direction;
//! * **expansion** — multiplicative Gaussian scaling of all coordinates
//!   (global jumps);
//! * **axesion** — multiplicative Gaussian scaling of one random coordinate
//!   (single-dimension deep search).
//!
//! Two drivers are provided: the *original* variant (rotation sweep plus
//! expansion) and the *new* variant, which adds axesion and a sawtooth
//! rotation-radius schedule. A registry of twenty benchmark functions, a
//! seeded multi-run experiment harness with recorded reference results, and
//! deterministic report writers round out the crate.
//!
//! # Quick start
//!
//! ```
//! use sta::benchmarks;
//! use sta::solver::{run, RunConfig, StaVariant};
//!
//! let bench = benchmarks::find("g5")?;
//! let config = RunConfig::new(StaVariant::New, 42).with_epochs(200);
//! let result = run(&config, &bench)?;
//! assert!((result.best_f() + 1.0316).abs() < 1e-3);
//! # Ok::<(), sta::StaError>(())
//! ```
//!
//! Every stochastic element flows through a seeded [`rng::RandomSource`],
//! so runs, experiments, and their report files reproduce bit-for-bit from
//! their seeds. See the `examples/` directory for runnable tours of each
//! capability and the `sta` binary for the command-line interface.

pub mod benchmarks;
pub mod cli;
mod error;
pub mod harness;
pub mod report;
pub mod rng;
pub mod solver;
pub mod transforms;

pub use error::StaError;
