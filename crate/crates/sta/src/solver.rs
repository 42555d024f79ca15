//! The two solver variants built on the candidate-generating operators.
//!
//! Both variants iterate the same greedy scheme: apply an operator to the
//! incumbent, clamp the candidates into the search box, evaluate them all,
//! and keep the strictly best point. Every improvement is chased with one
//! translation along the direction that just paid off. They differ in how
//! the rotation radius `alpha` is scheduled and whether axesion runs:
//!
//! * **original** — each epoch sweeps `alpha` from `alpha_max` down to
//!   `alpha_min` (dividing by `fc` per step) with one rotation pass per
//!   radius, then closes with a single expansion pass;
//! * **new** — each epoch runs one rotation, one expansion, and one axesion
//!   pass at the current `alpha`, then divides `alpha` by `fc`, resetting it
//!   to `alpha_max` once it falls below `alpha_min` (a sawtooth schedule).
//!
//! With the default parameters the original sweep visits 7 radii per epoch
//! and the new schedule repeats every 14 epochs.
//!
//! Runs are deterministic: a run is fully described by its configuration,
//! and the evaluation count always satisfies
//! `evaluations = 1 + se * greedy_steps` (one evaluation for the initial
//! state, `se` per candidate batch).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::benchmarks::Benchmark;
use crate::error::StaError;
use crate::rng::RandomSource;
use crate::transforms::{
    op_axesion, op_expand, op_rotate, op_translate, quarantine, CandidateSet, State,
    TransformParams,
};

/// Which operator schedule a run uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StaVariant {
    /// Rotation sweep plus expansion; no axesion.
    Original,
    /// Rotation, expansion, and axesion under a sawtooth alpha schedule.
    New,
}

impl StaVariant {
    /// The parameter defaults tuned for this variant (`fc` = 4 or 2).
    pub fn default_params(self) -> TransformParams {
        match self {
            StaVariant::Original => TransformParams::original_sta(),
            StaVariant::New => TransformParams::new_sta(),
        }
    }

    /// Both variants, in listing order.
    pub const ALL: [StaVariant; 2] = [StaVariant::Original, StaVariant::New];
}

impl fmt::Display for StaVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StaVariant::Original => "original",
            StaVariant::New => "new",
        })
    }
}

impl FromStr for StaVariant {
    type Err = StaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "original" => Ok(StaVariant::Original),
            "new" => Ok(StaVariant::New),
            other => Err(StaError::Config(format!(
                "unknown variant '{other}' (expected 'original' or 'new')"
            ))),
        }
    }
}

/// Everything that determines a single run; two equal configs produce
/// bit-identical results.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunConfig {
    pub variant: StaVariant,
    pub params: TransformParams,
    pub epochs: usize,
    pub seed: u64,
}

impl RunConfig {
    /// A run with the variant's default parameters and 1000 epochs.
    pub fn new(variant: StaVariant, seed: u64) -> Self {
        Self {
            variant,
            params: variant.default_params(),
            epochs: 1000,
            seed,
        }
    }

    pub fn with_epochs(mut self, epochs: usize) -> Self {
        self.epochs = epochs;
        self
    }

    pub fn with_params(mut self, params: TransformParams) -> Self {
        self.params = params;
        self
    }

    pub fn validate(&self) -> Result<(), StaError> {
        if self.epochs == 0 {
            return Err(StaError::Config(
                "a run needs at least one epoch".to_string(),
            ));
        }
        self.params.validate()
    }
}

/// Best objective value at the end of one epoch.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TracePoint {
    pub epoch: usize,
    pub best_f: f64,
}

/// Outcome of one run.
#[derive(Debug, Clone)]
pub struct RunResult {
    /// Final incumbent; its objective value is always cached.
    pub best: State,
    /// Best-so-far value after each epoch (never increasing).
    pub trace: Vec<TracePoint>,
    /// Total objective evaluations spent.
    pub evaluations: u64,
    /// The seed the run was driven by.
    pub seed: u64,
}

impl RunResult {
    /// The final objective value.
    pub fn best_f(&self) -> f64 {
        self.best
            .objective_value()
            .expect("a finished run always caches its best value")
    }

    /// Checks the structural invariants every run must satisfy: a contiguous
    /// epoch axis, a never-increasing trace, and a final trace entry equal to
    /// the best value.
    pub fn validate(&self) -> Result<(), String> {
        if self.trace.is_empty() {
            return Err("trace is empty".to_string());
        }
        for (i, point) in self.trace.iter().enumerate() {
            if point.epoch != i + 1 {
                return Err(format!(
                    "trace epoch {} at position {i} breaks the 1..=n axis",
                    point.epoch
                ));
            }
        }
        for w in self.trace.windows(2) {
            if w[1].best_f > w[0].best_f {
                return Err(format!(
                    "trace increased from {} to {} at epoch {}",
                    w[0].best_f, w[1].best_f, w[1].epoch
                ));
            }
        }
        let last = self.trace.last().expect("checked non-empty").best_f;
        if last != self.best_f() {
            return Err(format!(
                "final trace value {last} disagrees with best {}",
                self.best_f()
            ));
        }
        if self.evaluations == 0 {
            return Err("a run spends at least the initial evaluation".to_string());
        }
        Ok(())
    }
}

/// Draws a uniform initial state from the benchmark's init box and caches
/// its objective value (NaN quarantined as `+inf`).
///
/// For unconstrained coordinates the init box is the surrogate `[-10, 10]`;
/// the search itself is still free to leave it.
pub fn initial_state(bench: &Benchmark, rng: &mut RandomSource) -> Result<State, StaError> {
    let (lo, hi) = bench.init_bounds();
    let x = lo
        .iter()
        .zip(&hi)
        .map(|(&l, &h)| rng.uniform(l, h))
        .collect::<Result<Vec<f64>, StaError>>()?;
    let mut state = State::new(x)?;
    state.set_objective_value(bench.eval_raw(state.x()));
    Ok(state)
}

/// Evaluates every candidate and returns the strictly best one, or the
/// incumbent when no candidate beats it.
///
/// The incumbent must carry a cached objective value; it is never
/// re-evaluated. Candidates tie-break to the lowest index, equality with
/// the incumbent does not update (so drift across equal values is
/// impossible), and NaN evaluations are quarantined as `+inf`. The counter
/// advances by exactly the candidate count.
pub fn greedy_step<F: Fn(&[f64]) -> f64>(
    incumbent: &State,
    cands: &CandidateSet,
    objective: F,
    evaluations: &mut u64,
) -> (State, bool) {
    let mut best_f = incumbent
        .objective_value()
        .expect("the incumbent must carry a cached objective value");
    let mut best_idx = None;
    for (i, c) in cands.candidates().iter().enumerate() {
        let f = quarantine(objective(c.x()));
        if f < best_f {
            best_f = f;
            best_idx = Some(i);
        }
    }
    *evaluations += cands.len() as u64;
    match best_idx {
        Some(i) => {
            let mut next = cands.candidates()[i].clone();
            next.set_objective_value(best_f);
            (next, true)
        }
        None => (incumbent.clone(), false),
    }
}

/// The radii one original-variant epoch sweeps: `alpha_max, alpha_max / fc,
/// ...` down to the last value still `>= alpha_min`.
fn alpha_sweep(params: &TransformParams) -> Vec<f64> {
    let mut radii = Vec::new();
    let mut alpha = params.alpha_max;
    while alpha >= params.alpha_min {
        radii.push(alpha);
        alpha /= params.fc;
    }
    radii
}

/// One step of the new variant's sawtooth schedule: divide by `fc`, reset
/// to `alpha_max` after falling below `alpha_min`.
fn next_sawtooth_alpha(alpha: f64, params: &TransformParams) -> f64 {
    let next = alpha / params.fc;
    if next < params.alpha_min {
        params.alpha_max
    } else {
        next
    }
}

struct Driver<'a> {
    bench: &'a Benchmark,
    params: TransformParams,
    rng: RandomSource,
    incumbent: State,
    evaluations: u64,
    greedy_steps: u64,
}

impl<'a> Driver<'a> {
    fn new(bench: &'a Benchmark, mut params: TransformParams, seed: u64) -> Result<Self, StaError> {
        params.alpha = params.alpha_max;
        let mut rng = RandomSource::new(seed);
        let incumbent = initial_state(bench, &mut rng)?;
        Ok(Self {
            bench,
            params,
            rng,
            incumbent,
            evaluations: 1,
            greedy_steps: 0,
        })
    }

    /// Clamps, evaluates, and possibly replaces the incumbent; returns the
    /// replaced state on improvement so the caller can translate from it.
    fn greedy(&mut self, mut cands: CandidateSet) -> Option<State> {
        cands.clip_to_box(self.bench.lower(), self.bench.upper());
        self.greedy_steps += 1;
        let bench = self.bench;
        let (next, improved) = greedy_step(
            &self.incumbent,
            &cands,
            |x| bench.eval_raw(x),
            &mut self.evaluations,
        );
        if improved {
            Some(std::mem::replace(&mut self.incumbent, next))
        } else {
            None
        }
    }

    /// One translation pass along the direction `replaced -> incumbent`.
    ///
    /// Runs only right after an improvement, and never chains: a further
    /// improvement found by the translation itself is kept without another
    /// translation.
    fn translate_from(&mut self, replaced: &State) {
        match op_translate(&self.incumbent, replaced, &self.params, &mut self.rng) {
            Ok(cands) => {
                self.greedy(cands);
            }
            // The displacement can underflow to zero even after a strict
            // improvement; there is no direction to walk, so skip.
            Err(StaError::DegenerateDirection) => {}
            Err(e) => unreachable!("translation can only fail as degenerate: {e}"),
        }
    }

    fn rotate_pass(&mut self) {
        match op_rotate(&self.incumbent, &self.params, &mut self.rng) {
            Ok(cands) => {
                if let Some(replaced) = self.greedy(cands) {
                    self.translate_from(&replaced);
                }
            }
            // A zero-norm incumbent has no rotation direction; skip the
            // pass. This genuinely happens when an optimum at the origin is
            // hit exactly.
            Err(StaError::DegenerateState) => {}
            Err(e) => unreachable!("rotation can only fail as degenerate: {e}"),
        }
    }

    fn expand_pass(&mut self) {
        let cands = op_expand(&self.incumbent, &self.params, &mut self.rng);
        if let Some(replaced) = self.greedy(cands) {
            self.translate_from(&replaced);
        }
    }

    fn axesion_pass(&mut self) {
        let cands = op_axesion(&self.incumbent, &self.params, &mut self.rng);
        if let Some(replaced) = self.greedy(cands) {
            self.translate_from(&replaced);
        }
    }

    fn original_epoch(&mut self) {
        for alpha in alpha_sweep(&self.params) {
            self.params.alpha = alpha;
            self.rotate_pass();
        }
        self.expand_pass();
    }

    fn new_epoch(&mut self) {
        self.rotate_pass();
        self.expand_pass();
        self.axesion_pass();
        self.params.alpha = next_sawtooth_alpha(self.params.alpha, &self.params);
    }
}

/// Executes one run of the configured variant on a benchmark.
///
/// The run draws its initial state uniformly from the benchmark's init box,
/// then iterates `config.epochs` epochs of the variant's schedule. All
/// candidates are clamped into the benchmark's box (pass-through for
/// unbounded problems) before evaluation.
pub fn run(config: &RunConfig, bench: &Benchmark) -> Result<RunResult, StaError> {
    config.validate()?;
    let mut driver = Driver::new(bench, config.params, config.seed)?;
    let mut trace = Vec::with_capacity(config.epochs);
    for epoch in 1..=config.epochs {
        match config.variant {
            StaVariant::Original => driver.original_epoch(),
            StaVariant::New => driver.new_epoch(),
        }
        trace.push(TracePoint {
            epoch,
            best_f: driver
                .incumbent
                .objective_value()
                .expect("the incumbent always carries its value"),
        });
    }
    assert_eq!(
        driver.evaluations,
        1 + config.params.se as u64 * driver.greedy_steps,
        "evaluation budget identity violated"
    );
    Ok(RunResult {
        best: driver.incumbent,
        trace,
        evaluations: driver.evaluations,
        seed: config.seed,
    })
}
