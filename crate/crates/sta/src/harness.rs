//! Multi-run experiments: seed fan-out, aggregation, and comparison against
//! recorded reference results.
//!
//! An [`ExperimentSpec`] names benchmarks and variants; the harness fans a
//! master seed out into one derived seed per run (so runs are independent
//! but the whole experiment is reproducible from a single number), executes
//! the runs in parallel, and aggregates each (benchmark, variant) cell into
//! best/average statistics.
//!
//! Reports embed the recorded reference results: per-algorithm best and
//! average values previously reported for these benchmarks by HRO, ARSET,
//! DARSET, RSW, and both solver variants. Rows for the foreign algorithms
//! are display-only context; the rows for the two variants also drive the
//! pass/fail acceptance rules in [`pass_rule`].

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::benchmarks::{self, Benchmark};
use crate::error::StaError;
use crate::rng::derive_run_seed;
use crate::solver::{run, RunConfig, RunResult, StaVariant};
use crate::transforms::TransformParams;

/// Optional parameter overrides layered over a variant's defaults.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ParamOverrides {
    pub se: Option<usize>,
    pub alpha_max: Option<f64>,
    pub alpha_min: Option<f64>,
    pub beta: Option<f64>,
    pub gamma: Option<f64>,
    pub delta: Option<f64>,
    pub fc: Option<f64>,
}

impl ParamOverrides {
    /// Applies the overrides to a parameter set, re-anchoring the live
    /// radius at the (possibly overridden) maximum.
    pub fn apply(&self, mut p: TransformParams) -> TransformParams {
        if let Some(v) = self.se {
            p.se = v;
        }
        if let Some(v) = self.alpha_max {
            p.alpha_max = v;
        }
        if let Some(v) = self.alpha_min {
            p.alpha_min = v;
        }
        if let Some(v) = self.beta {
            p.beta = v;
        }
        if let Some(v) = self.gamma {
            p.gamma = v;
        }
        if let Some(v) = self.delta {
            p.delta = v;
        }
        if let Some(v) = self.fc {
            p.fc = v;
        }
        p.alpha = p.alpha_max;
        p
    }

    pub fn is_empty(&self) -> bool {
        *self == Self::default()
    }
}

/// What to run: the cross product of benchmarks and variants, `runs` times
/// each.
#[derive(Debug, Clone)]
pub struct ExperimentSpec {
    pub benchmarks: Vec<String>,
    pub variants: Vec<StaVariant>,
    pub runs: usize,
    pub epochs: usize,
    pub master_seed: u64,
    pub overrides: ParamOverrides,
}

impl ExperimentSpec {
    /// An experiment with the default budget: 10 runs of 1000 epochs each.
    pub fn new(benchmarks: Vec<String>, variants: Vec<StaVariant>, master_seed: u64) -> Self {
        Self {
            benchmarks,
            variants,
            runs: 10,
            epochs: 1000,
            master_seed,
            overrides: ParamOverrides::default(),
        }
    }

    pub fn validate(&self) -> Result<(), StaError> {
        if self.benchmarks.is_empty() {
            return Err(StaError::Config(
                "an experiment needs at least one benchmark".to_string(),
            ));
        }
        if self.variants.is_empty() {
            return Err(StaError::Config(
                "an experiment needs at least one variant".to_string(),
            ));
        }
        if self.runs == 0 {
            return Err(StaError::Config(
                "an experiment needs at least one run".to_string(),
            ));
        }
        if self.epochs == 0 {
            return Err(StaError::Config(
                "an experiment needs at least one epoch".to_string(),
            ));
        }
        Ok(())
    }
}

/// The raw results of one (benchmark, variant) cell.
#[derive(Debug, Clone)]
pub struct ExperimentRuns {
    pub benchmark: Benchmark,
    pub variant: StaVariant,
    pub results: Vec<RunResult>,
    pub wall: Vec<Duration>,
}

/// One run, summarized for reports.
#[derive(Debug, Clone, Serialize)]
pub struct RunSummary {
    pub run: usize,
    pub seed: u64,
    pub best_f: f64,
    pub best_x: Vec<f64>,
    pub evaluations: u64,
    /// Wall-clock time; informational only and deliberately kept out of
    /// serialized artifacts so reruns reproduce files byte-for-byte.
    #[serde(skip_serializing)]
    pub wall_seconds: f64,
}

/// Aggregates of one (benchmark, variant) cell.
#[derive(Debug, Clone, Serialize)]
pub struct ExperimentEntry {
    pub benchmark: String,
    pub variant: StaVariant,
    /// Best objective value over all runs (ties keep the earliest run).
    pub best_f: f64,
    /// Minimizer of the best run.
    pub best_x: Vec<f64>,
    /// Mean of the per-run best values, accumulated in run order.
    pub average_f: f64,
    pub reference_best: Option<f64>,
    pub reference_average: Option<f64>,
    /// Acceptance verdict against the reference, where a rule exists.
    pub pass: Option<bool>,
    pub runs: Vec<RunSummary>,
}

/// A full experiment, aggregated and ready for serialization.
#[derive(Debug, Clone, Serialize)]
pub struct ExperimentReport {
    pub master_seed: u64,
    pub runs: usize,
    pub epochs: usize,
    pub entries: Vec<ExperimentEntry>,
}

/// Executes every run of the experiment and returns the raw per-cell
/// results (including full traces, which the aggregated report drops).
pub fn collect_runs(spec: &ExperimentSpec) -> Result<Vec<ExperimentRuns>, StaError> {
    spec.validate()?;
    let benches = spec
        .benchmarks
        .iter()
        .map(|name| {
            benchmarks::find(name)
                .map_err(|_| StaError::Config(format!("unknown benchmark name '{name}'")))
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut cells = Vec::with_capacity(benches.len() * spec.variants.len());
    for bench in &benches {
        for &variant in &spec.variants {
            let params = spec.overrides.apply(variant.default_params());
            params.validate()?;
            let timed: Vec<(RunResult, Duration)> = (0..spec.runs)
                .into_par_iter()
                .map(|i| {
                    let config = RunConfig {
                        variant,
                        params,
                        epochs: spec.epochs,
                        seed: derive_run_seed(spec.master_seed, i as u64),
                    };
                    let started = Instant::now();
                    let result = run(&config, bench)?;
                    let wall = started.elapsed();
                    if let Err(broken) = result.validate() {
                        panic!(
                            "run invariant violated ({} {variant} seed {}): {broken}",
                            bench.name(),
                            config.seed
                        );
                    }
                    Ok((result, wall))
                })
                .collect::<Result<_, StaError>>()?;
            let (results, wall) = timed.into_iter().unzip();
            cells.push(ExperimentRuns {
                benchmark: bench.clone(),
                variant,
                results,
                wall,
            });
        }
    }
    Ok(cells)
}

/// Aggregates raw cell results into a report.
pub fn summarize(spec: &ExperimentSpec, cells: &[ExperimentRuns]) -> ExperimentReport {
    let entries = cells
        .iter()
        .map(|cell| {
            let runs: Vec<RunSummary> = cell
                .results
                .iter()
                .zip(&cell.wall)
                .enumerate()
                .map(|(i, (r, w))| RunSummary {
                    run: i,
                    seed: r.seed,
                    best_f: r.best_f(),
                    best_x: r.best.x().to_vec(),
                    evaluations: r.evaluations,
                    wall_seconds: w.as_secs_f64(),
                })
                .collect();
            let best = runs
                .iter()
                .min_by(|a, b| {
                    a.best_f
                        .partial_cmp(&b.best_f)
                        .expect("best values are never NaN")
                })
                .expect("cells contain at least one run");
            let average_f =
                runs.iter().map(|r| r.best_f).sum::<f64>() / runs.len() as f64;
            let name = cell.benchmark.name().to_string();
            let (reference_best, reference_average) = reference_for(&name, cell.variant);
            let pass = pass_rule(&name, cell.variant).map(|rule| rule.check(best.best_f));
            ExperimentEntry {
                benchmark: name,
                variant: cell.variant,
                best_f: best.best_f,
                best_x: best.best_x.clone(),
                average_f,
                reference_best,
                reference_average,
                pass,
                runs,
            }
        })
        .collect();
    ExperimentReport {
        master_seed: spec.master_seed,
        runs: spec.runs,
        epochs: spec.epochs,
        entries,
    }
}

/// Runs the experiment and aggregates it in one call.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<ExperimentReport, StaError> {
    let cells = collect_runs(spec)?;
    Ok(summarize(spec, &cells))
}

/// One row of recorded reference results for a benchmark.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceRow {
    pub algorithm: &'static str,
    pub best: Option<f64>,
    pub average: Option<f64>,
}

const fn row(algorithm: &'static str, best: f64, average: f64) -> ReferenceRow {
    ReferenceRow {
        algorithm,
        best: Some(best),
        average: Some(average),
    }
}

const fn best_only(algorithm: &'static str, best: f64) -> ReferenceRow {
    ReferenceRow {
        algorithm,
        best: Some(best),
        average: None,
    }
}

/// Recorded reference results for a benchmark, in display order.
///
/// The `f` series was recorded as best-only; the `g` series carries best and
/// average over 10 runs. Rows for algorithms other than the two variants
/// here (HRO, ARSET, DARSET, RSW) are context for display and are never
/// asserted against.
pub fn reference_rows(benchmark: &str) -> &'static [ReferenceRow] {
    const ORIG: &str = "STA(original)";
    const NEW: &str = "STA(new)";
    const F1: [ReferenceRow; 5] = [
        best_only("HRO", -3.0),
        best_only("ARSET", -3.0),
        best_only("RSW", -3.0),
        best_only(ORIG, -3.0),
        best_only(NEW, -3.0),
    ];
    const F2: [ReferenceRow; 5] = [
        best_only("HRO", 2.8595e-19),
        best_only("ARSET", 2.21e-43),
        best_only("RSW", 0.0),
        best_only(ORIG, 0.0),
        best_only(NEW, 0.0),
    ];
    const F3: [ReferenceRow; 4] = [
        best_only("ARSET", 5.04e-23),
        best_only("RSW", 3.43e-28),
        best_only(ORIG, 5.8715e-33),
        best_only(NEW, 1.0335e-35),
    ];
    const F4: [ReferenceRow; 4] = [
        best_only("ARSET", 4.02e-16),
        best_only("RSW", 1.97e-31),
        best_only(ORIG, 8.2040e-12),
        best_only(NEW, 3.7678e-12),
    ];
    const F5: [ReferenceRow; 4] = [
        best_only("ARSET", -10.0),
        best_only("RSW", -9.9996),
        best_only(ORIG, -10.0),
        best_only(NEW, -10.0),
    ];
    const G1: [ReferenceRow; 4] = [
        row("DARSET", 0.0, 9.10e-16),
        row("RSW", 0.0, 0.0),
        row(ORIG, 0.0, 5.3147e-12),
        row(NEW, 0.0, 0.0),
    ];
    const G2: [ReferenceRow; 4] = [
        row("DARSET", -16.0917, -16.0917),
        row("RSW", -16.0917, -15.7399),
        row(ORIG, -16.0917, -16.0917),
        row(NEW, -16.0917, -16.0917),
    ];
    const G3: [ReferenceRow; 4] = [
        row("DARSET", 0.998, 1.5885),
        row("RSW", 0.998, 6.3728),
        row(ORIG, 0.9980, 3.9354),
        row(NEW, 0.9980, 0.9980),
    ];
    const G4: [ReferenceRow; 4] = [
        row("DARSET", 0.3979, 0.3979),
        row("RSW", 0.3979, 0.3979),
        row(ORIG, 0.3979, 0.3979),
        row(NEW, 0.3979, 0.3979),
    ];
    const G5: [ReferenceRow; 4] = [
        row("DARSET", -1.0316, -1.0316),
        row("RSW", -1.0316, -1.0316),
        row(ORIG, -1.0316, -1.0316),
        row(NEW, -1.0316, -1.0316),
    ];
    const G6: [ReferenceRow; 4] = [
        row("DARSET", 3.0, 3.0),
        row("RSW", 3.0, 3.0),
        row(ORIG, 3.0, 3.0),
        row(NEW, 3.0, 3.0),
    ];
    const G7: [ReferenceRow; 4] = [
        row("DARSET", -186.7309, -186.7309),
        row("RSW", -186.7309, -186.7309),
        row(ORIG, -186.7309, -186.7309),
        row(NEW, -186.7309, -186.7309),
    ];
    const G8: [ReferenceRow; 4] = [
        row("DARSET", 8.0128, 8.0128),
        row("RSW", 8.0128, 8.0128),
        row(ORIG, 8.0128, 8.0128),
        row(NEW, 8.0128, 8.0128),
    ];
    const G9: [ReferenceRow; 4] = [
        row("DARSET", 3.72e-12, 9.30e-6),
        row("RSW", 1.28e-28, 2.15e-28),
        row(ORIG, 2.8718e-10, 1.1802e-9),
        row(NEW, 8.3086e-11, 1.1344e-9),
    ];
    const G10: [ReferenceRow; 4] = [
        row("DARSET", 2.45e-16, 4.02e-15),
        row("RSW", 0.0, 0.0),
        row(ORIG, 0.0, 0.0),
        row(NEW, 4.9783e-94, 2.7247e-84),
    ];
    const G11: [ReferenceRow; 4] = [
        row("DARSET", 5.93e-12, 26.227),
        row("RSW", 2.36e-32, 3.3927),
        row(ORIG, 7.2021e-11, 1.0417),
        row(NEW, 2.6223e-11, 3.8022e-11),
    ];
    const G12: [ReferenceRow; 4] = [
        row("DARSET", 3.91e-15, 4.28e-14),
        row("RSW", 2.84e-29, 6.07e-28),
        row(ORIG, 8.9683e-14, 3.8771e-12),
        row(NEW, 9.5239e-14, 9.9002e-12),
    ];
    const G13: [ReferenceRow; 4] = [
        row("DARSET", 1.0, 1.0077),
        row("RSW", 1.0091, 1.0091),
        row(ORIG, 1.0, 1.0375),
        row(NEW, 1.0, 1.0225),
    ];
    const G14: [ReferenceRow; 4] = [
        row("DARSET", 1.7442, 1.7442),
        row("RSW", 1.7442, 1.7442),
        row(ORIG, 1.7442, 1.7442),
        row(NEW, 1.7442, 1.7442),
    ];
    const G15: [ReferenceRow; 4] = [
        row("DARSET", 8.17e-9, 1.68e-7),
        row("RSW", 1.02e-11, 1.71e-11),
        row(ORIG, 2.1942e-14, 6.4995e-9),
        row(NEW, 9.9870e-14, 1.0542e-7),
    ];
    match benchmark {
        "f1" => &F1,
        "f2" => &F2,
        "f3" => &F3,
        "f4" => &F4,
        "f5" => &F5,
        "g1" => &G1,
        "g2" => &G2,
        "g3" => &G3,
        "g4" => &G4,
        "g5" => &G5,
        "g6" => &G6,
        "g7" => &G7,
        "g8" => &G8,
        "g9" => &G9,
        "g10" => &G10,
        "g11" => &G11,
        "g12" => &G12,
        "g13" => &G13,
        "g14" => &G14,
        "g15" => &G15,
        _ => &[],
    }
}

/// The recorded (best, average) for one variant on one benchmark.
pub fn reference_for(benchmark: &str, variant: StaVariant) -> (Option<f64>, Option<f64>) {
    let label = match variant {
        StaVariant::Original => "STA(original)",
        StaVariant::New => "STA(new)",
    };
    reference_rows(benchmark)
        .iter()
        .find(|r| r.algorithm == label)
        .map(|r| (r.best, r.average))
        .unwrap_or((None, None))
}

/// How a cell's Best value is judged against the reference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PassRule {
    /// `|best - target| <= tol`.
    MatchesBest { target: f64, tol: f64 },
    /// `best <= bound` (small-residual problems where the tail magnitude is
    /// seed-dependent and only basin identification is judged).
    BestAtMost { bound: f64 },
}

impl PassRule {
    pub fn check(&self, best: f64) -> bool {
        match *self {
            PassRule::MatchesBest { target, tol } => (best - target).abs() <= tol,
            PassRule::BestAtMost { bound } => best <= bound,
        }
    }
}

/// The acceptance rule for a (benchmark, variant) cell, if one is recorded.
///
/// The two multimodal shakedown problems are judged for both variants; the
/// rest of the table judges the axesion-bearing variant only. Cells without
/// a rule (e.g. the original variant on the `g` series) carry reference
/// values for display but no verdict.
pub fn pass_rule(benchmark: &str, variant: StaVariant) -> Option<PassRule> {
    use PassRule::*;
    let rule = match (benchmark, variant) {
        ("f1", _) => MatchesBest {
            target: -3.0,
            tol: 1e-6,
        },
        ("f2", _) => BestAtMost { bound: 1e-20 },
        ("f3", StaVariant::New) => BestAtMost { bound: 1e-15 },
        ("f4", StaVariant::New) => BestAtMost { bound: 1e-8 },
        ("f5", StaVariant::New) => MatchesBest {
            target: -10.0,
            tol: 1e-6,
        },
        ("g1", StaVariant::New) => MatchesBest {
            target: 0.0,
            tol: 1e-3,
        },
        ("g2", StaVariant::New) => MatchesBest {
            target: -16.0917,
            tol: 1e-3,
        },
        ("g3", StaVariant::New) => MatchesBest {
            target: 0.9980,
            tol: 1e-3,
        },
        ("g4", StaVariant::New) => MatchesBest {
            target: 0.3979,
            tol: 1e-3,
        },
        ("g5", StaVariant::New) => MatchesBest {
            target: -1.0316,
            tol: 1e-3,
        },
        ("g6", StaVariant::New) => MatchesBest {
            target: 3.0,
            tol: 1e-3,
        },
        ("g7", StaVariant::New) => MatchesBest {
            target: -186.7309,
            tol: 1e-2,
        },
        ("g8", StaVariant::New) => MatchesBest {
            target: 8.0128,
            tol: 1e-2,
        },
        ("g9", StaVariant::New) => BestAtMost { bound: 1e-6 },
        ("g10", StaVariant::New) => BestAtMost { bound: 1e-12 },
        ("g11", StaVariant::New) => BestAtMost { bound: 1e-6 },
        ("g12", StaVariant::New) => BestAtMost { bound: 1e-8 },
        ("g13", StaVariant::New) => MatchesBest {
            target: 1.0,
            tol: 1e-3,
        },
        ("g14", StaVariant::New) => MatchesBest {
            target: 1.7442,
            tol: 1e-3,
        },
        ("g15", StaVariant::New) => BestAtMost { bound: 1e-8 },
        _ => return None,
    };
    Some(rule)
}

/// A display row pairing measured aggregates with the reference records.
#[derive(Debug, Clone, Serialize)]
pub struct ComparisonRow {
    pub function: String,
    pub variant: StaVariant,
    pub best: f64,
    pub average: f64,
    pub reference_best: Option<f64>,
    pub reference_average: Option<f64>,
    pub pass: Option<bool>,
}

/// Projects a report onto comparison rows, recomputing each verdict from
/// the entry's Best value.
pub fn compare_to_reference(report: &ExperimentReport) -> Vec<ComparisonRow> {
    report
        .entries
        .iter()
        .map(|e| ComparisonRow {
            function: e.benchmark.clone(),
            variant: e.variant,
            best: e.best_f,
            average: e.average_f,
            reference_best: e.reference_best,
            reference_average: e.reference_average,
            pass: pass_rule(&e.benchmark, e.variant).map(|rule| rule.check(e.best_f)),
        })
        .collect()
}
