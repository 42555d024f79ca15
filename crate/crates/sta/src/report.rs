//! Serialization of runs, experiments, and listings into the pinned file
//! formats.
//!
//! Two different float formats are used deliberately:
//!
//! * machine-facing CSVs (per-run records, traces, point clouds) print 17
//!   significant digits via [`format_f64`], which round-trips every finite
//!   `f64` bit-for-bit;
//! * human-facing tables (markdown, listings) use [`display_value`], a
//!   compact form with four significant decimals.
//!
//! All writers are pure string builders with no timestamps or environment
//! lookups, so rerunning a seeded experiment reproduces its artifacts
//! byte-for-byte.

use std::fmt::Write as _;

use serde::Serialize;

use crate::benchmarks::Benchmark;
use crate::error::StaError;
use crate::harness::{ComparisonRow, ExperimentReport};
use crate::solver::{RunResult, StaVariant, TracePoint};
use crate::transforms::State;

/// Pinned header of the per-run CSV.
pub const RUNS_CSV_HEADER: &str = "function,variant,run,seed,best_f,evaluations";

/// Formats with 17 significant digits, enough to reconstruct the exact bit
/// pattern of any finite `f64` on parse.
pub fn format_f64(v: f64) -> String {
    format!("{v:.16e}")
}

/// Compact display form: four decimals for ordinary magnitudes, scientific
/// notation for tiny ones, bare `0` for zero.
pub fn display_value(v: f64) -> String {
    if v == 0.0 {
        "0".to_string()
    } else if v.abs() >= 1e-3 {
        format!("{v:.4}")
    } else {
        format!("{v:.4e}")
    }
}

fn display_opt(v: Option<f64>) -> String {
    v.map(display_value).unwrap_or_else(|| "-".to_string())
}

fn display_pass(pass: Option<bool>) -> &'static str {
    match pass {
        Some(true) => "pass",
        Some(false) => "fail",
        None => "-",
    }
}

/// One row of the pinned per-run CSV.
#[derive(Debug, Clone, PartialEq)]
pub struct RunsCsvRow {
    pub function: String,
    pub variant: StaVariant,
    pub run: usize,
    pub seed: u64,
    pub best_f: f64,
    pub evaluations: u64,
}

/// Serializes every run of a report into the pinned CSV schema.
pub fn runs_csv(report: &ExperimentReport) -> String {
    let mut out = String::with_capacity(64 * (1 + report.entries.len() * report.runs));
    out.push_str(RUNS_CSV_HEADER);
    out.push('\n');
    for entry in &report.entries {
        for run in &entry.runs {
            writeln!(
                out,
                "{},{},{},{},{},{}",
                entry.benchmark,
                entry.variant,
                run.run,
                run.seed,
                format_f64(run.best_f),
                run.evaluations
            )
            .expect("writing to a String cannot fail");
        }
    }
    out
}

/// Parses the pinned per-run CSV, reconstructing each `best_f` exactly.
pub fn parse_runs_csv(text: &str) -> Result<Vec<RunsCsvRow>, StaError> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| StaError::Config("runs CSV is empty".to_string()))?;
    if header != RUNS_CSV_HEADER {
        return Err(StaError::Config(format!(
            "unexpected runs CSV header '{header}'"
        )));
    }
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 6 {
            return Err(StaError::Config(format!(
                "runs CSV line {} has {} fields, expected 6",
                i + 2,
                fields.len()
            )));
        }
        let parse_err = |what: &str, value: &str| {
            StaError::Config(format!(
                "runs CSV line {}: invalid {what} '{value}'",
                i + 2
            ))
        };
        rows.push(RunsCsvRow {
            function: fields[0].to_string(),
            variant: fields[1]
                .parse()
                .map_err(|_| parse_err("variant", fields[1]))?,
            run: fields[2].parse().map_err(|_| parse_err("run", fields[2]))?,
            seed: fields[3]
                .parse()
                .map_err(|_| parse_err("seed", fields[3]))?,
            best_f: fields[4]
                .parse()
                .map_err(|_| parse_err("best_f", fields[4]))?,
            evaluations: fields[5]
                .parse()
                .map_err(|_| parse_err("evaluations", fields[5]))?,
        });
    }
    Ok(rows)
}

const COMPARISON_HEADER: [&str; 7] = [
    "Function",
    "Variant",
    "Best",
    "Average",
    "Reference-Best",
    "Reference-Average",
    "Pass",
];

/// Comparison table as CSV. Measured values use the shortest exact float
/// form; missing references and verdicts print as `-`.
pub fn comparison_csv(rows: &[ComparisonRow]) -> String {
    let mut out = String::new();
    out.push_str(&COMPARISON_HEADER.join(","));
    out.push('\n');
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.function,
            r.variant,
            r.best,
            r.average,
            r.reference_best
                .map(|v| v.to_string())
                .unwrap_or_else(|| "-".to_string()),
            r.reference_average
                .map(|v| v.to_string())
                .unwrap_or_else(|| "-".to_string()),
            display_pass(r.pass)
        )
        .expect("writing to a String cannot fail");
    }
    out
}

/// Comparison table as a markdown pipe table with compact value display.
pub fn comparison_markdown(rows: &[ComparisonRow]) -> String {
    let mut out = String::new();
    writeln!(out, "| {} |", COMPARISON_HEADER.join(" | "))
        .expect("writing to a String cannot fail");
    writeln!(out, "|{}", " --- |".repeat(COMPARISON_HEADER.len()))
        .expect("writing to a String cannot fail");
    for r in rows {
        writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} |",
            r.function,
            r.variant,
            display_value(r.best),
            display_value(r.average),
            display_opt(r.reference_best),
            display_opt(r.reference_average),
            display_pass(r.pass)
        )
        .expect("writing to a String cannot fail");
    }
    out
}

/// Full report (aggregates, references, verdicts, and per-run summaries) as
/// pretty-printed JSON.
pub fn report_json(report: &ExperimentReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports always serialize");
    s.push('\n');
    s
}

/// Convergence trace as CSV (`epoch,best_f`), exact floats.
pub fn trace_csv(trace: &[TracePoint]) -> String {
    let mut out = String::from("epoch,best_f\n");
    for p in trace {
        writeln!(out, "{},{}", p.epoch, format_f64(p.best_f))
            .expect("writing to a String cannot fail");
    }
    out
}

/// Point cloud as CSV with header `x1,...,xn`, exact floats.
pub fn point_cloud_csv(points: &[State]) -> String {
    let dim = points.first().map(State::dim).unwrap_or(0);
    let header: Vec<String> = (1..=dim).map(|i| format!("x{i}")).collect();
    let mut out = header.join(",");
    out.push('\n');
    for p in points {
        let row: Vec<String> = p.x().iter().map(|&v| format_f64(v)).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Summary record written next to a single run's trace.
#[derive(Debug, Serialize)]
pub struct RunRecord {
    pub function: String,
    pub variant: StaVariant,
    pub seed: u64,
    pub epochs: usize,
    pub best_f: f64,
    pub best_x: Vec<f64>,
    pub evaluations: u64,
}

impl RunRecord {
    pub fn new(function: &str, variant: StaVariant, epochs: usize, result: &RunResult) -> Self {
        Self {
            function: function.to_string(),
            variant,
            seed: result.seed,
            epochs,
            best_f: result.best_f(),
            best_x: result.best.x().to_vec(),
            evaluations: result.evaluations,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("run records always serialize");
        s.push('\n');
        s
    }
}

/// Plain-text registry listing: name, dimension, box, and recorded best.
pub fn benchmark_listing(benches: &[Benchmark]) -> String {
    fn box_display(b: &Benchmark) -> String {
        if !b.is_bounded() {
            return "unbounded".to_string();
        }
        let uniform = b
            .lower()
            .windows(2)
            .all(|w| w[0] == w[1])
            && b.upper().windows(2).all(|w| w[0] == w[1]);
        if uniform {
            format!("[{}, {}]^{}", b.lower()[0], b.upper()[0], b.dim())
        } else {
            let axes: Vec<String> = b
                .lower()
                .iter()
                .zip(b.upper())
                .map(|(l, h)| format!("[{l}, {h}]"))
                .collect();
            axes.join(" x ")
        }
    }

    let mut out = format!(
        "{:<6} {:>3}  {:<18} {:>12}\n",
        "name", "dim", "box", "best"
    );
    for b in benches {
        writeln!(
            out,
            "{:<6} {:>3}  {:<18} {:>12}",
            b.name(),
            b.dim(),
            box_display(b),
            b.theoretical_best()
                .map(display_value)
                .unwrap_or_else(|| "-".to_string())
        )
        .expect("writing to a String cannot fail");
    }
    out
}
