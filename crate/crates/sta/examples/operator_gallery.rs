//! The four state-transition operators, one candidate cloud each.
//!
//! From a fixed incumbent this example applies rotation, translation,
//! expansion, and axesion once with 500 candidates apiece, prints the
//! geometric signature of every cloud, and writes each cloud as a point CSV
//! for plotting:
//!
//! * rotation stays inside a ball of radius alpha around the incumbent;
//! * translation lies on the ray through the previous improvement;
//! * expansion rescales all coordinates at once (global jumps);
//! * axesion rescales exactly one coordinate per candidate.
//!
//! Run with:
//!
//! ```text
//! cargo run --example operator_gallery
//! ```

use std::error::Error;
use std::fs;
use std::path::Path;

use sta::report::point_cloud_csv;
use sta::rng::RandomSource;
use sta::transforms::{
    op_axesion, op_expand, op_rotate, op_translate, State, TransformParams,
};

fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

fn write_cloud(dir: &Path, name: &str, points: &[State]) -> Result<(), Box<dyn Error>> {
    let path = dir.join(format!("{name}.csv"));
    fs::write(&path, point_cloud_csv(points))?;
    println!("  wrote {}", path.display());
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    let mut params = TransformParams::new_sta();
    params.se = 500;
    params.validate()?;

    let x = State::new(vec![2.0, -1.0, 0.5])?;
    let x_prev = State::new(vec![1.5, -1.0, 0.5])?;
    let mut rng = RandomSource::new(7);

    let out_dir = std::env::temp_dir().join("sta-operator-gallery");
    fs::create_dir_all(&out_dir)?;
    println!(
        "incumbent x = {:?}, {} candidates per operator (seed {})\n",
        x.x(),
        params.se,
        rng.seed()
    );

    // Rotation: every candidate within Euclidean distance alpha of x.
    let rotation = op_rotate(&x, &params, &mut rng)?;
    let max_dist = rotation
        .candidates()
        .iter()
        .map(|c| distance(c.x(), x.x()))
        .fold(0.0, f64::max);
    println!("rotation   max |c - x| = {max_dist:.6} (radius alpha = {})", params.alpha);
    write_cloud(&out_dir, "rotation", rotation.candidates())?;

    // Translation: candidates on the segment from x along (x - x_prev),
    // at distances uniform in [0, beta].
    let translation = op_translate(&x, &x_prev, &params, &mut rng)?;
    let (mut min_along, mut max_along, mut max_orth) = (f64::INFINITY, 0.0f64, 0.0f64);
    for c in translation.candidates() {
        let d: Vec<f64> = c.x().iter().zip(x.x()).map(|(a, b)| a - b).collect();
        min_along = min_along.min(d[0]);
        max_along = max_along.max(d[0]);
        max_orth = max_orth.max(d[1].abs()).max(d[2].abs());
    }
    println!(
        "translation steps in [{min_along:.6}, {max_along:.6}] along the improvement \
         direction, off-ray spread {max_orth:.1e} (beta = {})",
        params.beta
    );
    write_cloud(&out_dir, "translation", translation.candidates())?;

    // Expansion: every coordinate scaled by 1 + gamma * N(0, 1).
    let expansion = op_expand(&x, &params, &mut rng);
    let (mut min_ratio, mut max_ratio) = (f64::INFINITY, f64::NEG_INFINITY);
    for c in expansion.candidates() {
        for (ci, xi) in c.x().iter().zip(x.x()) {
            min_ratio = min_ratio.min(ci / xi);
            max_ratio = max_ratio.max(ci / xi);
        }
    }
    println!(
        "expansion  per-coordinate scale factors span [{min_ratio:.3}, {max_ratio:.3}] \
         (gamma = {})",
        params.gamma
    );
    write_cloud(&out_dir, "expansion", expansion.candidates())?;

    // Axesion: exactly one coordinate moves per candidate; the chosen axis
    // is uniform, so each of the three axes gets roughly a third.
    let axesion = op_axesion(&x, &params, &mut rng);
    let mut per_axis = [0usize; 3];
    for c in axesion.candidates() {
        let moved: Vec<usize> = (0..c.dim()).filter(|&i| c.x()[i] != x.x()[i]).collect();
        assert!(moved.len() <= 1, "axesion moved {} axes", moved.len());
        if let Some(&axis) = moved.first() {
            per_axis[axis] += 1;
        }
    }
    println!(
        "axesion    one axis per candidate; axis counts = {per_axis:?} (delta = {})",
        params.delta
    );
    write_cloud(&out_dir, "axesion", axesion.candidates())?;

    Ok(())
}
