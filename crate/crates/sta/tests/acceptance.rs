//! Acceptance suite: every reproduction target the library commits to, one
//! test per criterion, each printing a single `[PASS]`/`[FAIL]` verdict
//! line (run with `--nocapture` to see all of them).
//!
//! Stochastic criteria use 10 runs with master seed 42 and the default
//! parameter set unless the criterion states otherwise.

mod common;

use std::sync::OnceLock;

use common::{first_hit, grid_oracle};
use sta::benchmarks::{self, SpotCheckOutcome};
use sta::harness::{collect_runs, run_experiment, ExperimentRuns, ExperimentSpec};
use sta::report::{comparison_csv, report_json, runs_csv};
use sta::rng::{derive_run_seed, RandomSource};
use sta::solver::{RunResult, StaVariant};
use sta::transforms::{op_axesion, op_expand, op_rotate, op_translate, State, TransformParams};

const MASTER_SEED: u64 = 42;
/// Master seeds for the variant-comparison criterion, fixed up front.
const COMPARISON_SEEDS: [u64; 3] = [42, 43, 44];

fn verdict(criterion: u32, pass: bool, description: &str) {
    let tag = if pass { "PASS" } else { "FAIL" };
    println!("[{tag}] criterion {criterion}: {description}");
    assert!(pass, "criterion {criterion} failed: {description}");
}

fn spec(benchmarks: &[&str], variants: &[StaVariant], master: u64) -> ExperimentSpec {
    ExperimentSpec::new(
        benchmarks.iter().map(|s| s.to_string()).collect(),
        variants.to_vec(),
        master,
    )
}

/// f1–f5, both variants, the full budget.
fn group_one() -> &'static [ExperimentRuns] {
    static CELLS: OnceLock<Vec<ExperimentRuns>> = OnceLock::new();
    CELLS.get_or_init(|| {
        collect_runs(&spec(
            &["f1", "f2", "f3", "f4", "f5"],
            &[StaVariant::Original, StaVariant::New],
            MASTER_SEED,
        ))
        .unwrap()
    })
}

/// g1–g15 under the new variant, the full budget.
fn group_two() -> &'static [ExperimentRuns] {
    static CELLS: OnceLock<Vec<ExperimentRuns>> = OnceLock::new();
    CELLS.get_or_init(|| {
        let names: Vec<String> = (1..=15).map(|i| format!("g{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        collect_runs(&spec(&refs, &[StaVariant::New], MASTER_SEED)).unwrap()
    })
}

/// g3 and g11 under both variants for each comparison master seed.
fn comparison_cells() -> &'static [Vec<ExperimentRuns>] {
    static CELLS: OnceLock<Vec<Vec<ExperimentRuns>>> = OnceLock::new();
    CELLS.get_or_init(|| {
        COMPARISON_SEEDS
            .iter()
            .map(|&master| {
                collect_runs(&spec(
                    &["g3", "g11"],
                    &[StaVariant::Original, StaVariant::New],
                    master,
                ))
                .unwrap()
            })
            .collect()
    })
}

fn cell<'a>(
    cells: &'a [ExperimentRuns],
    name: &str,
    variant: StaVariant,
) -> &'a ExperimentRuns {
    cells
        .iter()
        .find(|c| c.benchmark.name() == name && c.variant == variant)
        .unwrap_or_else(|| panic!("missing cell {name}/{variant}"))
}

fn best_run(cell: &ExperimentRuns) -> &RunResult {
    cell.results
        .iter()
        .min_by(|a, b| a.best_f().partial_cmp(&b.best_f()).unwrap())
        .unwrap()
}

fn average(cell: &ExperimentRuns) -> f64 {
    cell.results.iter().map(|r| r.best_f()).sum::<f64>() / cell.results.len() as f64
}

fn earliest_hit(cell: &ExperimentRuns, threshold: f64) -> Option<usize> {
    cell.results
        .iter()
        .filter_map(|r| first_hit(r, threshold))
        .min()
}

#[test]
fn criterion_01_two_minimum_piecewise_problem() {
    let mut pass = true;
    let mut detail = String::new();
    for variant in [StaVariant::Original, StaVariant::New] {
        let cell = cell(group_one(), "f1", variant);
        let best = best_run(cell);
        let f_ok = (best.best_f() + 3.0).abs() <= 1e-6;
        let x_ok = (best.best.x()[0] - 3.0).abs() <= 1e-4;
        let fast = earliest_hit(cell, -3.0 + 1e-6).is_some_and(|e| e <= 10);
        pass &= f_ok && x_ok && fast;
        detail.push_str(&format!(
            " [{variant}: f={:.2e}@x={:.6}, hit epoch {:?}]",
            best.best_f() + 3.0,
            best.best.x()[0],
            earliest_hit(cell, -3.0 + 1e-6)
        ));
    }
    verdict(
        1,
        pass,
        &format!("f1 best reaches -3 (1e-6) at x=3 (1e-4) within 10 epochs, both variants;{detail}"),
    );
}

#[test]
fn criterion_02_oscillatory_flat_minimum() {
    let mut pass = true;
    let mut detail = String::new();
    for variant in [StaVariant::Original, StaVariant::New] {
        let best = best_run(cell(group_one(), "f2", variant)).best_f();
        pass &= best <= 1e-20;
        detail.push_str(&format!(" [{variant}: {best:.3e}]"));
    }
    verdict(2, pass, &format!("f2 best <= 1e-20, both variants;{detail}"));
}

#[test]
fn criterion_03_plateau_ripple_precision_and_basin_speed() {
    let cell = cell(group_one(), "f3", StaVariant::New);
    let best = best_run(cell).best_f();
    let hit = earliest_hit(cell, 1e-6);
    let pass = best <= 1e-15 && hit.is_some_and(|e| e <= 100);
    verdict(
        3,
        pass,
        &format!("f3 best <= 1e-15 (got {best:.3e}), basin within 100 epochs (hit {hit:?})"),
    );
}

#[test]
fn criterion_04_narrow_curved_valley() {
    let best = best_run(cell(group_one(), "f4", StaVariant::New)).best_f();
    verdict(4, best <= 1e-8, &format!("f4 best <= 1e-8 (got {best:.3e})"));
}

#[test]
fn criterion_05_boundary_minimum_with_location() {
    let best = best_run(cell(group_one(), "f5", StaVariant::New));
    let x = best.best.x();
    let pass = (best.best_f() + 10.0).abs() <= 1e-6
        && (x[0] + 10.0).abs() <= 1e-4
        && x[1].abs() <= 1e-4;
    verdict(
        5,
        pass,
        &format!(
            "f5 best = -10 (1e-6) at (-10, 0) (1e-4); got {} at ({}, {})",
            best.best_f(),
            x[0],
            x[1]
        ),
    );
}

#[test]
fn criterion_06_group_two_reference_values() {
    let targets: [(&str, f64, f64); 10] = [
        ("g1", 0.0, 1e-3),
        ("g2", -16.0917, 1e-3),
        ("g3", 0.9980, 1e-3),
        ("g4", 0.3979, 1e-3),
        ("g5", -1.0316, 1e-3),
        ("g6", 3.0, 1e-3),
        ("g7", -186.7309, 1e-2),
        ("g8", 8.0128, 1e-2),
        ("g13", 1.0, 1e-3),
        ("g14", 1.7442, 1e-3),
    ];
    let mut misses = Vec::new();
    for (name, target, tol) in targets {
        let best = best_run(cell(group_two(), name, StaVariant::New)).best_f();
        if (best - target).abs() > tol {
            misses.push(format!("{name}: {best} vs {target}"));
        }
    }
    verdict(
        6,
        misses.is_empty(),
        &format!("group-two reference bests within tolerance; misses: {misses:?}"),
    );
}

#[test]
fn criterion_07_small_residual_functions() {
    let bounds: [(&str, f64); 5] = [
        ("g9", 1e-6),
        ("g10", 1e-12),
        ("g11", 1e-6),
        ("g12", 1e-8),
        ("g15", 1e-8),
    ];
    let mut misses = Vec::new();
    for (name, bound) in bounds {
        let best = best_run(cell(group_two(), name, StaVariant::New)).best_f();
        if best > bound {
            misses.push(format!("{name}: {best:.3e} > {bound:.0e}"));
        }
    }
    verdict(
        7,
        misses.is_empty(),
        &format!("small-residual bests under their bounds; misses: {misses:?}"),
    );
}

#[test]
fn criterion_08_variant_comparison_on_averages() {
    let mut winning_seeds = 0;
    let mut detail = String::new();
    for (cells, master) in comparison_cells().iter().zip(COMPARISON_SEEDS) {
        let g3_new = average(cell(cells, "g3", StaVariant::New));
        let g3_orig = average(cell(cells, "g3", StaVariant::Original));
        let g11_new = average(cell(cells, "g11", StaVariant::New));
        let g11_orig = average(cell(cells, "g11", StaVariant::Original));
        let holds = g3_new < g3_orig && g11_new < g11_orig;
        winning_seeds += holds as u32;
        detail.push_str(&format!(
            " [seed {master}: g3 {g3_new:.4} vs {g3_orig:.4}, g11 {g11_new:.3e} vs {g11_orig:.3e}]"
        ));
    }
    verdict(
        8,
        winning_seeds >= 2,
        &format!("new averages beat original on g3 and g11 for >= 2 of 3 master seeds;{detail}"),
    );
}

#[test]
fn criterion_09_transform_geometry_suite() {
    let mut meta = RandomSource::new(0xACCE_5501);
    let mut violations = Vec::new();
    for case in 0..10_000u64 {
        let dim = 1 + meta.pick_index(8).unwrap();
        let mut x: Vec<f64> = (0..dim)
            .map(|_| meta.uniform(-100.0, 100.0).unwrap())
            .collect();
        // A quarter of the coordinates are exact zeros so the
        // zero-preservation property is genuinely exercised.
        for c in x.iter_mut() {
            if meta.pick_index(4).unwrap() == 0 {
                *c = 0.0;
            }
        }
        let mut p = TransformParams::new_sta();
        p.alpha_max = 2.0;
        p.alpha = meta.uniform(1e-4, 2.0).unwrap();
        p.beta = meta.uniform(0.0, 2.0).unwrap();
        p.gamma = meta.uniform(0.0, 3.0).unwrap();
        p.delta = meta.uniform(0.0, 3.0).unwrap();
        p.se = 1 + meta.pick_index(8).unwrap();
        p.validate().unwrap();
        let op_seed = derive_run_seed(0x9E0_7E57, case);
        let state = State::new(x.clone()).unwrap();

        let norm = |v: &[f64]| v.iter().map(|c| c * c).sum::<f64>().sqrt();
        if norm(&x) > 0.0 {
            let mut rng = RandomSource::new(op_seed);
            let cands = op_rotate(&state, &p, &mut rng).unwrap();
            if cands.len() != p.se {
                violations.push(format!("case {case}: rotation count"));
            }
            for c in cands.candidates() {
                let d: f64 = c
                    .x()
                    .iter()
                    .zip(&x)
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum::<f64>()
                    .sqrt();
                if d > p.alpha * (1.0 + 1e-12) {
                    violations.push(format!("case {case}: rotation ball {d} > {}", p.alpha));
                }
            }
        }

        let shift: Vec<f64> = (0..dim)
            .map(|_| meta.uniform(-5.0, 5.0).unwrap())
            .collect();
        let prev: Vec<f64> = x.iter().zip(&shift).map(|(a, s)| a - s).collect();
        if x.iter().zip(&prev).any(|(a, b)| a != b) {
            let prev = State::new(prev.clone()).unwrap();
            let dir: Vec<f64> = x.iter().zip(prev.x()).map(|(a, b)| a - b).collect();
            let dn = norm(&dir);
            let unit: Vec<f64> = dir.iter().map(|c| c / dn).collect();
            let mut rng = RandomSource::new(op_seed);
            for c in op_translate(&state, &prev, &p, &mut rng)
                .unwrap()
                .candidates()
            {
                let delta: Vec<f64> = c.x().iter().zip(&x).map(|(a, b)| a - b).collect();
                let along: f64 = delta.iter().zip(&unit).map(|(d, u)| d * u).sum();
                if !(-1e-12..=p.beta * (1.0 + 1e-12)).contains(&along) {
                    violations.push(format!("case {case}: translation length {along}"));
                }
                let orth = delta
                    .iter()
                    .zip(&unit)
                    .map(|(d, u)| d - along * u)
                    .map(|r| r * r)
                    .sum::<f64>()
                    .sqrt();
                if orth >= 1e-12 * (1.0 + along.abs()) {
                    violations.push(format!("case {case}: translation residual {orth}"));
                }
            }
        }

        let mut rng = RandomSource::new(op_seed);
        for c in op_expand(&state, &p, &mut rng).candidates() {
            for (i, &orig) in x.iter().enumerate() {
                if orig == 0.0 && c.x()[i] != 0.0 {
                    violations.push(format!("case {case}: expansion moved a zero"));
                }
            }
        }

        let mut rng = RandomSource::new(op_seed);
        for c in op_axesion(&state, &p, &mut rng).candidates() {
            let changed = c.x().iter().zip(&x).filter(|(a, b)| a != b).count();
            if changed > 1 {
                violations.push(format!("case {case}: axesion changed {changed} axes"));
            }
        }

        if violations.len() > 5 {
            break;
        }
    }
    verdict(
        9,
        violations.is_empty(),
        &format!(
            "transform geometry over 10^4 randomized triples, zero violations; found: {violations:?}"
        ),
    );
}

#[test]
fn criterion_10_monotone_traces_everywhere() {
    let mut runs_checked = 0usize;
    let mut pass = true;
    for cells in [group_one(), group_two()] {
        for cell in cells {
            for r in &cell.results {
                pass &= r.validate().is_ok();
                pass &= r.trace.windows(2).all(|w| w[1].best_f <= w[0].best_f);
                runs_checked += 1;
            }
        }
    }
    for cells in comparison_cells() {
        for cell in cells {
            for r in &cell.results {
                pass &= r.validate().is_ok();
                pass &= r.trace.windows(2).all(|w| w[1].best_f <= w[0].best_f);
                runs_checked += 1;
            }
        }
    }
    verdict(
        10,
        pass && runs_checked > 0,
        &format!("monotone non-increasing traces across all {runs_checked} suite runs"),
    );
}

#[test]
fn criterion_11_bit_exact_report_reproduction() {
    let mut spec = spec(&["g5", "f1"], &[StaVariant::Original, StaVariant::New], 7);
    spec.runs = 5;
    spec.epochs = 200;
    let first = run_experiment(&spec).unwrap();
    let second = run_experiment(&spec).unwrap();
    let pass = report_json(&first) == report_json(&second)
        && runs_csv(&first) == runs_csv(&second)
        && comparison_csv(&sta::harness::compare_to_reference(&first))
            == comparison_csv(&sta::harness::compare_to_reference(&second));
    verdict(
        11,
        pass,
        "re-running a seeded experiment reproduces identical report files",
    );
}

#[test]
fn criterion_12_benchmark_self_consistency() {
    let mut failures = Vec::new();
    for bench in benchmarks::registry() {
        match benchmarks::spot_check(&bench) {
            SpotCheckOutcome::AtOptimizer { error, .. } => {
                if let Some(err) = error {
                    if err > 1e-3 {
                        failures.push(format!("{}: optimizer error {err:.2e}", bench.name()));
                    }
                }
            }
            SpotCheckOutcome::ProbeBest { value, .. } => {
                // Unconstrained entry: the probe over the surrogate box must
                // not beat the recorded best (it can only approach it).
                if let Some(best) = bench.theoretical_best() {
                    if value < best - 1e-3 {
                        failures.push(format!("{}: probe {value} beats {best}", bench.name()));
                    }
                }
            }
        }
    }

    for (name, places) in [("g7", 4usize), ("g14", 4usize)] {
        let bench = benchmarks::find(name).unwrap();
        let (x, f) = grid_oracle(&bench, 400, 12);
        let reference = bench.theoretical_best().unwrap();
        let tol = 10f64.powi(-(places as i32)) / 2.0 + 1e-9;
        if (f - reference).abs() > tol {
            failures.push(format!("{name}: oracle best {f} vs reference {reference}"));
        }
        if let Some(opt) = bench.optimizer() {
            let dist: f64 = x
                .iter()
                .zip(opt)
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt();
            // Symmetric surfaces may have several global minimizers; accept
            // the recorded one or confirm the oracle value matches anyway.
            if dist > 1e-2 && (f - reference).abs() > tol {
                failures.push(format!("{name}: oracle minimizer {x:?} far from {opt:?}"));
            }
        }
    }
    verdict(
        12,
        failures.is_empty(),
        &format!("benchmark spot-checks and grid oracle agree; failures: {failures:?}"),
    );
}
