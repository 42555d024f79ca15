//! States, transformation parameters, and the four candidate-generating
//! operators.
//!
//! Each operator maps the incumbent state to a batch of `se` candidate
//! solutions by applying one geometric move with fresh random coefficients
//! per candidate:
//!
//! * **rotation** — adds `(alpha / (n * ||x||)) * R * x` with `R` an `n x n`
//!   matrix of uniform `[-1, 1]` entries, which keeps every candidate inside
//!   the radius-`alpha` ball around the incumbent;
//! * **translation** — walks up to `beta` along the unit direction from the
//!   previous incumbent to the current one;
//! * **expansion** — scales every coordinate by `1 + gamma * g` with
//!   independent standard normals `g`, so it can escape far along any axis;
//! * **axesion** — scales exactly one uniformly chosen coordinate by
//!   `1 + delta * g`, a single-axis search that strengthens one-dimensional
//!   moves.
//!
//! Operators draw from the caller's [`RandomSource`] in a pinned order
//! (documented per operator); together with the seeded source this makes
//! candidate generation bit-for-bit reproducible.

use serde::{Deserialize, Serialize};

use crate::error::StaError;
use crate::rng::RandomSource;

/// A point in the search space with an optionally cached objective value.
#[derive(Debug, Clone, PartialEq)]
pub struct State {
    x: Vec<f64>,
    f: Option<f64>,
}

impl State {
    /// Creates a state from a coordinate vector.
    ///
    /// The vector must be non-empty and contain only finite entries.
    pub fn new(x: Vec<f64>) -> Result<Self, StaError> {
        if x.is_empty() {
            return Err(StaError::Config(
                "a state needs at least one coordinate".to_string(),
            ));
        }
        if let Some(bad) = x.iter().find(|v| !v.is_finite()) {
            return Err(StaError::Config(format!(
                "state coordinates must be finite, got {bad}"
            )));
        }
        Ok(Self { x, f: None })
    }

    /// Builds a state that skips validation; callers guarantee the vector is
    /// non-empty (operators only ever shrink nothing) and rely on clipping
    /// plus objective quarantine to handle any non-finite arithmetic.
    pub(crate) fn unchecked(x: Vec<f64>) -> Self {
        debug_assert!(!x.is_empty());
        Self { x, f: None }
    }

    /// The coordinate vector.
    pub fn x(&self) -> &[f64] {
        &self.x
    }

    /// Number of coordinates.
    pub fn dim(&self) -> usize {
        self.x.len()
    }

    /// The cached objective value, if one has been recorded.
    pub fn objective_value(&self) -> Option<f64> {
        self.f
    }

    /// Records the objective value at this state.
    ///
    /// NaN is quarantined as `+inf` so cached values always order totally;
    /// a NaN objective can then never displace or tie a real incumbent.
    pub fn set_objective_value(&mut self, f: f64) {
        self.f = Some(quarantine(f));
    }

    pub(crate) fn clear_objective_value(&mut self) {
        self.f = None;
    }

    /// Euclidean norm of the coordinate vector.
    pub(crate) fn norm(&self) -> f64 {
        self.x.iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

/// Maps NaN objective values to `+inf` so they lose every comparison.
pub(crate) fn quarantine(f: f64) -> f64 {
    if f.is_nan() {
        f64::INFINITY
    } else {
        f
    }
}

/// Tuning knobs shared by all four operators and both solver variants.
///
/// `alpha` is the live rotation radius; the solvers sweep it between
/// `alpha_max` and `alpha_min` by repeated division by `fc`. The remaining
/// factors scale translation (`beta`), expansion (`gamma`), and axesion
/// (`delta`), and `se` is the number of candidates every operator generates
/// per application.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransformParams {
    pub alpha: f64,
    pub alpha_max: f64,
    pub alpha_min: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
    pub se: usize,
    pub fc: f64,
}

impl TransformParams {
    /// Defaults for the original three-operator solver (`fc = 4`).
    pub fn original_sta() -> Self {
        Self {
            alpha: 1.0,
            alpha_max: 1.0,
            alpha_min: 1e-4,
            beta: 1.0,
            gamma: 1.0,
            delta: 1.0,
            se: 32,
            fc: 4.0,
        }
    }

    /// Defaults for the four-operator solver with axesion (`fc = 2`).
    pub fn new_sta() -> Self {
        Self {
            fc: 2.0,
            ..Self::original_sta()
        }
    }

    /// Checks the parameter invariants.
    ///
    /// The scale factors may be zero (which turns the matching operator into
    /// the identity move), but never negative or non-finite. `alpha_min`
    /// must be strictly positive: the original solver divides `alpha` by
    /// `fc` until it drops below `alpha_min`, which would never terminate at
    /// zero.
    pub fn validate(&self) -> Result<(), StaError> {
        let positive = [
            ("alpha_min", self.alpha_min),
            ("fc", self.fc),
        ];
        for (name, v) in positive {
            if !v.is_finite() || v <= 0.0 {
                return Err(StaError::Config(format!(
                    "{name} must be a positive finite number, got {v}"
                )));
            }
        }
        let non_negative = [
            ("alpha", self.alpha),
            ("alpha_max", self.alpha_max),
            ("beta", self.beta),
            ("gamma", self.gamma),
            ("delta", self.delta),
        ];
        for (name, v) in non_negative {
            if !v.is_finite() || v < 0.0 {
                return Err(StaError::Config(format!(
                    "{name} must be a non-negative finite number, got {v}"
                )));
            }
        }
        if self.alpha_max < self.alpha_min {
            return Err(StaError::Config(format!(
                "alpha_max ({}) must not be below alpha_min ({})",
                self.alpha_max, self.alpha_min
            )));
        }
        if self.alpha < self.alpha_min || self.alpha > self.alpha_max {
            return Err(StaError::Config(format!(
                "alpha ({}) must lie within [alpha_min, alpha_max] = [{}, {}]",
                self.alpha, self.alpha_min, self.alpha_max
            )));
        }
        if self.se == 0 {
            return Err(StaError::Config(
                "se (candidates per operator application) must be at least 1".to_string(),
            ));
        }
        if self.fc <= 1.0 {
            return Err(StaError::Config(format!(
                "fc must exceed 1 so the rotation radius actually shrinks, got {}",
                self.fc
            )));
        }
        Ok(())
    }
}

/// The batch of candidate states one operator application produced, together
/// with the incumbent it started from.
#[derive(Debug, Clone)]
pub struct CandidateSet {
    candidates: Vec<State>,
    origin: State,
}

impl CandidateSet {
    fn new(candidates: Vec<State>, origin: State) -> Self {
        Self { candidates, origin }
    }

    /// Assembles a candidate set by hand, e.g. from a custom operator.
    ///
    /// The set must be non-empty and every candidate must share the origin's
    /// dimension.
    pub fn from_states(candidates: Vec<State>, origin: State) -> Result<Self, StaError> {
        if candidates.is_empty() {
            return Err(StaError::Config(
                "a candidate set needs at least one candidate".to_string(),
            ));
        }
        if let Some(bad) = candidates.iter().find(|c| c.dim() != origin.dim()) {
            return Err(StaError::Config(format!(
                "candidate dimension {} does not match origin dimension {}",
                bad.dim(),
                origin.dim()
            )));
        }
        Ok(Self::new(candidates, origin))
    }

    /// The generated candidates, in generation order.
    pub fn candidates(&self) -> &[State] {
        &self.candidates
    }

    /// The incumbent the operator expanded from.
    pub fn origin(&self) -> &State {
        &self.origin
    }

    /// Number of candidates (always the `se` the operator was given).
    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }

    /// Clamps every candidate into the box `[lo, hi]`; see
    /// [`clip_to_bounds`].
    pub fn clip_to_box(&mut self, lo: &[f64], hi: &[f64]) {
        for c in &mut self.candidates {
            clip_in_place(c, lo, hi);
        }
    }
}

/// Rotation: per candidate, adds `(alpha / (n * ||x||)) * R * x` where `R`
/// is a fresh `n x n` matrix with independent uniform `[-1, 1]` entries.
///
/// Every component of `R * x` is bounded by `n * ||x||`, so candidates stay
/// within Euclidean distance `alpha` of the incumbent — rotation is the
/// local-search move, and the solvers shrink `alpha` to sharpen it.
///
/// Draw order (pinned): candidates in order; within a candidate the matrix
/// entries row-major, i.e. `R[0][0], R[0][1], ..., R[n-1][n-1]`.
///
/// Fails with [`StaError::DegenerateState`] when `||x|| = 0`, where the
/// scaling is undefined; callers are expected to skip the move.
pub fn op_rotate(
    x: &State,
    p: &TransformParams,
    rng: &mut RandomSource,
) -> Result<CandidateSet, StaError> {
    let norm = x.norm();
    if norm == 0.0 {
        return Err(StaError::DegenerateState);
    }
    let n = x.dim();
    let scale = p.alpha / (n as f64 * norm);
    let mut candidates = Vec::with_capacity(p.se);
    for _ in 0..p.se {
        let mut y = vec![0.0; n];
        for yi in y.iter_mut() {
            let mut dot = 0.0;
            for &xj in x.x() {
                let r = rng
                    .uniform(-1.0, 1.0)
                    .expect("[-1, 1] is a valid interval");
                dot += r * xj;
            }
            *yi = scale * dot;
        }
        for (yi, &xi) in y.iter_mut().zip(x.x()) {
            *yi += xi;
        }
        candidates.push(State::unchecked(y));
    }
    Ok(CandidateSet::new(candidates, x.clone()))
}

/// Translation: per candidate, walks a uniform `[0, beta]` distance along
/// the unit vector from `x_prev` to `x`.
///
/// This is the line-search move; the solvers only apply it right after an
/// improvement, continuing along the direction that just paid off.
///
/// Draw order (pinned): one uniform `[0, 1]` scalar per candidate.
///
/// Fails with [`StaError::DegenerateDirection`] when `x == x_prev`, which
/// carries no direction; callers are expected to skip the move.
pub fn op_translate(
    x: &State,
    x_prev: &State,
    p: &TransformParams,
    rng: &mut RandomSource,
) -> Result<CandidateSet, StaError> {
    assert_eq!(
        x.dim(),
        x_prev.dim(),
        "translation endpoints must share a dimension"
    );
    let d: Vec<f64> = x
        .x()
        .iter()
        .zip(x_prev.x())
        .map(|(a, b)| a - b)
        .collect();
    let norm = d.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm == 0.0 {
        return Err(StaError::DegenerateDirection);
    }
    let mut candidates = Vec::with_capacity(p.se);
    for _ in 0..p.se {
        let t = rng.uniform(0.0, 1.0).expect("[0, 1] is a valid interval");
        let step = p.beta * t / norm;
        let y: Vec<f64> = x.x().iter().zip(&d).map(|(xi, di)| xi + step * di).collect();
        candidates.push(State::unchecked(y));
    }
    Ok(CandidateSet::new(candidates, x.clone()))
}

/// Expansion: per candidate, scales every coordinate by `1 + gamma * g`
/// with an independent standard normal `g` per coordinate.
///
/// The heavy multiplicative tails let candidates jump far outside the
/// current neighborhood — this is the global-exploration move. Coordinates
/// that are exactly zero stay zero.
///
/// Draw order (pinned): candidates in order; within a candidate one normal
/// per coordinate, in coordinate order.
pub fn op_expand(x: &State, p: &TransformParams, rng: &mut RandomSource) -> CandidateSet {
    let mut candidates = Vec::with_capacity(p.se);
    for _ in 0..p.se {
        let y: Vec<f64> = x
            .x()
            .iter()
            .map(|xi| xi * (1.0 + p.gamma * rng.gaussian()))
            .collect();
        candidates.push(State::unchecked(y));
    }
    CandidateSet::new(candidates, x.clone())
}

/// Axesion: per candidate, scales exactly one uniformly chosen coordinate
/// by `1 + delta * g` with a standard normal `g`; all other coordinates are
/// copied unchanged.
///
/// The single-axis scaling searches along one coordinate direction at a
/// time, which reaches axis-aligned optima that full-dimensional moves
/// approach only slowly. Zero coordinates stay zero.
///
/// Draw order (pinned): per candidate, first the axis index, then the
/// normal.
pub fn op_axesion(x: &State, p: &TransformParams, rng: &mut RandomSource) -> CandidateSet {
    let n = x.dim();
    let mut candidates = Vec::with_capacity(p.se);
    for _ in 0..p.se {
        let axis = rng
            .pick_index(n)
            .expect("states always have at least one coordinate");
        let g = rng.gaussian();
        let mut y = x.x().to_vec();
        y[axis] *= 1.0 + p.delta * g;
        candidates.push(State::unchecked(y));
    }
    CandidateSet::new(candidates, x.clone())
}

/// Clamps a state into the box `[lo, hi]` component-wise.
///
/// Infinite bounds pass coordinates through untouched, so unbounded
/// problems can reuse the same call path. A state that was already inside
/// the box is returned unchanged, cached objective value included; any
/// clamped coordinate invalidates the cache.
///
/// Bounds must satisfy `lo[i] <= hi[i]` and match the state's dimension.
pub fn clip_to_bounds(mut state: State, lo: &[f64], hi: &[f64]) -> State {
    clip_in_place(&mut state, lo, hi);
    state
}

fn clip_in_place(state: &mut State, lo: &[f64], hi: &[f64]) {
    assert_eq!(state.dim(), lo.len(), "lower bounds must match dimension");
    assert_eq!(state.dim(), hi.len(), "upper bounds must match dimension");
    let mut changed = false;
    for ((v, &l), &h) in state.x.iter_mut().zip(lo).zip(hi) {
        debug_assert!(l <= h, "box bounds are inverted: [{l}, {h}]");
        let clamped = v.clamp(l, h);
        if clamped != *v {
            *v = clamped;
            changed = true;
        }
    }
    if changed {
        state.clear_objective_value();
    }
}
