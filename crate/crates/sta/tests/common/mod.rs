//! Helpers shared by the integration tests: a solver-independent grid
//! oracle for locating benchmark optima, a Kolmogorov–Smirnov test, and a
//! normal CDF accurate enough to drive it.

#![allow(dead_code)] // each integration test binary uses a subset

use sta::benchmarks::Benchmark;

/// Standard normal CDF via the Abramowitz–Stegun rational approximation of
/// erf (absolute error below 1.5e-7, far tighter than the KS thresholds
/// used here).
pub fn normal_cdf(z: f64) -> f64 {
    0.5 * (1.0 + erf(z / std::f64::consts::SQRT_2))
}

fn erf(x: f64) -> f64 {
    const A1: f64 = 0.254829592;
    const A2: f64 = -0.284496736;
    const A3: f64 = 1.421413741;
    const A4: f64 = -1.453152027;
    const A5: f64 = 1.061405429;
    const P: f64 = 0.3275911;
    let sign = if x < 0.0 { -1.0 } else { 1.0 };
    let x = x.abs();
    let t = 1.0 / (1.0 + P * x);
    let poly = ((((A5 * t + A4) * t + A3) * t + A2) * t + A1) * t;
    sign * (1.0 - poly * (-x * x).exp())
}

/// Two-sided KS statistic of `samples` against the continuous CDF `cdf`.
pub fn ks_statistic(samples: &mut [f64], cdf: impl Fn(f64) -> f64) -> f64 {
    assert!(!samples.is_empty());
    samples.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = samples.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in samples.iter().enumerate() {
        let f = cdf(x);
        let lo = i as f64 / n;
        let hi = (i + 1) as f64 / n;
        d = d.max((f - lo).abs()).max((f - hi).abs());
    }
    d
}

/// Critical KS value at significance 0.01 (asymptotic form, valid for the
/// sample sizes used here).
pub fn ks_critical_001(n: usize) -> f64 {
    1.62762 / (n as f64).sqrt()
}

/// Brute-force oracle: locate the minimum of `bench` by exhaustive coarse
/// grid search followed by repeated zooming around the best cell. Entirely
/// independent of the stochastic solver, so it can vouch for the recorded
/// reference optima.
pub fn grid_oracle(bench: &Benchmark, coarse: usize, levels: usize) -> (Vec<f64>, f64) {
    assert_eq!(bench.dim(), 2, "the oracle is written for the 2-D problems");
    let (mut lo, mut hi) = (bench.lower().to_vec(), bench.upper().to_vec());
    let mut best_x = vec![0.0; 2];
    let mut best_f = f64::INFINITY;
    let mut cells = coarse;
    for level in 0..levels {
        let step = [
            (hi[0] - lo[0]) / cells as f64,
            (hi[1] - lo[1]) / cells as f64,
        ];
        for i in 0..=cells {
            let x0 = lo[0] + step[0] * i as f64;
            for j in 0..=cells {
                let x1 = lo[1] + step[1] * j as f64;
                let f = bench.evaluate(&[x0, x1]).unwrap();
                if f < best_f {
                    best_f = f;
                    best_x = vec![x0, x1];
                }
            }
        }
        // Zoom: a new box of two old cells' width centred on the best point,
        // clamped to the original domain.
        let shrink = 2.0;
        for d in 0..2 {
            let radius = step[d] * shrink;
            lo[d] = (best_x[d] - radius).max(bench.lower()[d]);
            hi[d] = (best_x[d] + radius).min(bench.upper()[d]);
        }
        if level == 0 {
            cells = 40;
        }
    }
    (best_x, best_f)
}

/// First epoch at which the trace drops to `threshold` or below, if any.
pub fn first_hit(result: &sta::solver::RunResult, threshold: f64) -> Option<usize> {
    result
        .trace
        .iter()
        .find(|p| p.best_f <= threshold)
        .map(|p| p.epoch)
}
