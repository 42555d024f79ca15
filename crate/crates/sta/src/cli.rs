//! Command-line front end.
//!
//! Subcommands: `list` (registry table), `run` (single optimization with a
//! convergence trace), `experiment` (multi-run suite with comparison
//! reports), `demo-axesion` (point-cloud sample of the axesion operator),
//! and `spot-check` (benchmark self-verification).
//!
//! Seeds resolve in precedence order: `--seed` flag, then the config file
//! (experiments only), then the `STA_SEED` environment variable, then 42.
//! Exit codes: 0 success, 2 usage/config error, 3 I/O error.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::benchmarks::{self, SpotCheckOutcome};
use crate::error::StaError;
use crate::harness::{
    compare_to_reference, run_experiment, ExperimentSpec, ParamOverrides,
};
use crate::report::{
    benchmark_listing, comparison_csv, comparison_markdown, display_value, point_cloud_csv,
    report_json, runs_csv, trace_csv, RunRecord,
};
use crate::rng::RandomSource;
use crate::solver::{self, RunConfig, StaVariant};
use crate::transforms::{op_axesion, State, TransformParams};

#[derive(Parser)]
#[command(
    name = "sta",
    version,
    about = "State transition algorithm optimizer and benchmark harness",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the benchmark registry (name, dimension, box, recorded best).
    List,
    /// Execute one run on a benchmark and write its convergence trace.
    Run(RunArgs),
    /// Run a multi-run suite and write comparison reports.
    Experiment(ExperimentArgs),
    /// Sample independent axesion candidates from a fixed point into a
    /// point-cloud CSV (a cross of axis-aligned lines).
    DemoAxesion(DemoArgs),
    /// Evaluate each benchmark at its recorded minimizer (or probe it).
    SpotCheck(SpotCheckArgs),
}

#[derive(Args)]
struct ParamFlags {
    /// Candidates generated per operator application.
    #[arg(long)]
    se: Option<usize>,
    /// Largest rotation radius.
    #[arg(long)]
    alpha_max: Option<f64>,
    /// Smallest rotation radius.
    #[arg(long)]
    alpha_min: Option<f64>,
    /// Translation factor.
    #[arg(long)]
    beta: Option<f64>,
    /// Expansion factor.
    #[arg(long)]
    gamma: Option<f64>,
    /// Axesion factor.
    #[arg(long)]
    delta: Option<f64>,
    /// Rotation radius divisor.
    #[arg(long)]
    fc: Option<f64>,
}

impl ParamFlags {
    fn layer_onto(&self, mut ov: ParamOverrides) -> ParamOverrides {
        ov.se = self.se.or(ov.se);
        ov.alpha_max = self.alpha_max.or(ov.alpha_max);
        ov.alpha_min = self.alpha_min.or(ov.alpha_min);
        ov.beta = self.beta.or(ov.beta);
        ov.gamma = self.gamma.or(ov.gamma);
        ov.delta = self.delta.or(ov.delta);
        ov.fc = self.fc.or(ov.fc);
        ov
    }
}

#[derive(Args)]
struct RunArgs {
    /// Benchmark name (see `sta list`).
    function: String,
    /// Solver variant.
    #[arg(long, default_value = "new", value_parser = parse_variant)]
    variant: StaVariant,
    /// Number of epochs.
    #[arg(long, default_value_t = 1000)]
    epochs: usize,
    /// Run seed (falls back to STA_SEED, then 42).
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    params: ParamFlags,
    /// Output stem; writes `<out>.trace.csv` and `<out>.summary.json`.
    #[arg(long, default_value = "sta_run")]
    out: PathBuf,
}

#[derive(Args)]
struct ExperimentArgs {
    /// Flat key = value config file (all keys optional).
    #[arg(long)]
    config: Option<PathBuf>,
    /// Benchmarks: comma-separated names, or `all` / `group1` / `group2`.
    #[arg(short = 'f', long = "function")]
    function: Option<String>,
    /// Variant selection: `original`, `new`, or `both`.
    #[arg(long)]
    variant: Option<String>,
    /// Independent runs per (benchmark, variant) cell.
    #[arg(long)]
    runs: Option<usize>,
    /// Epochs per run.
    #[arg(long)]
    epochs: Option<usize>,
    /// Master seed (falls back to the config file, STA_SEED, then 42).
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    params: ParamFlags,
    /// Comparison table path; a `<stem>_runs.csv` is written alongside.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Comparison table format.
    #[arg(long, value_parser = parse_format)]
    format: Option<OutputFormat>,
}

#[derive(Args)]
struct DemoArgs {
    /// Starting point as comma-separated coordinates.
    #[arg(long, default_value = "1,1,1")]
    point: String,
    /// Axesion factor.
    #[arg(long, default_value_t = 1.0)]
    delta: f64,
    /// Number of independent candidates to draw.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    /// Seed (falls back to STA_SEED, then 42).
    #[arg(long)]
    seed: Option<u64>,
    /// Output CSV path.
    #[arg(long, default_value = "axesion_cloud.csv")]
    out: PathBuf,
}

#[derive(Args)]
struct SpotCheckArgs {
    /// Check a single benchmark instead of the whole registry.
    #[arg(short = 'f', long = "function")]
    function: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum OutputFormat {
    Csv,
    Json,
    Md,
}

impl OutputFormat {
    fn extension(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
            OutputFormat::Md => "md",
        }
    }
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    match s {
        "csv" => Ok(OutputFormat::Csv),
        "json" => Ok(OutputFormat::Json),
        "md" => Ok(OutputFormat::Md),
        other => Err(format!("unknown format '{other}' (expected csv, json, or md)")),
    }
}

fn parse_variant(s: &str) -> Result<StaVariant, String> {
    s.parse().map_err(|e: StaError| e.to_string())
}

/// Parses and dispatches; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version land here too, with exit code 0.
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                StaError::Io(_) => 3,
                _ => 2,
            }
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), StaError> {
    match cli.command {
        Command::List => {
            print!("{}", benchmark_listing(&benchmarks::registry()));
            Ok(())
        }
        Command::Run(args) => cmd_run(args),
        Command::Experiment(args) => cmd_experiment(args),
        Command::DemoAxesion(args) => cmd_demo_axesion(args),
        Command::SpotCheck(args) => cmd_spot_check(args),
    }
}

/// Seed precedence: explicit flag, config file value, `STA_SEED`, then 42.
fn resolve_seed(flag: Option<u64>, file: Option<u64>) -> Result<u64, StaError> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    if let Some(seed) = file {
        return Ok(seed);
    }
    match std::env::var("STA_SEED") {
        Ok(raw) => raw.trim().parse().map_err(|_| {
            StaError::Config(format!(
                "STA_SEED must be an unsigned 64-bit integer, got '{raw}'"
            ))
        }),
        Err(_) => Ok(42),
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), StaError> {
    std::fs::write(path, contents)?;
    Ok(())
}

fn cmd_run(args: RunArgs) -> Result<(), StaError> {
    let bench = benchmarks::find(&args.function)?;
    let seed = resolve_seed(args.seed, None)?;
    let params = args
        .params
        .layer_onto(ParamOverrides::default())
        .apply(args.variant.default_params());
    let config = RunConfig {
        variant: args.variant,
        params,
        epochs: args.epochs,
        seed,
    };
    let result = solver::run(&config, &bench)?;

    let trace_path = path_with_suffix(&args.out, ".trace.csv");
    let summary_path = path_with_suffix(&args.out, ".summary.json");
    write_file(&trace_path, &trace_csv(&result.trace))?;
    let record = RunRecord::new(bench.name(), args.variant, args.epochs, &result);
    write_file(&summary_path, &record.to_json())?;

    println!(
        "{} ({}, seed {seed}): best f = {} at {:?} after {} evaluations",
        bench.name(),
        args.variant,
        display_value(result.best_f()),
        result.best.x(),
        result.evaluations
    );
    println!("wrote {} and {}", trace_path.display(), summary_path.display());
    Ok(())
}

/// Appends a suffix to a path's final component: `results/a` + `.trace.csv`
/// becomes `results/a.trace.csv`.
fn path_with_suffix(stem: &Path, suffix: &str) -> PathBuf {
    let mut name = stem
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| "sta_run".to_string());
    name.push_str(suffix);
    stem.with_file_name(name)
}

/// The experiment config file: a flat key = value document. Every key is
/// optional; omitted keys keep the standard defaults.
#[derive(Debug, Default, serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    benchmarks: Option<String>,
    variant: Option<String>,
    runs: Option<usize>,
    epochs: Option<usize>,
    seed: Option<u64>,
    se: Option<usize>,
    alpha_max: Option<f64>,
    alpha_min: Option<f64>,
    beta: Option<f64>,
    gamma: Option<f64>,
    delta: Option<f64>,
    fc: Option<f64>,
    out: Option<String>,
    format: Option<String>,
}

const FILE_CONFIG_KEYS: [&str; 14] = [
    "benchmarks",
    "variant",
    "runs",
    "epochs",
    "seed",
    "se",
    "alpha_max",
    "alpha_min",
    "beta",
    "gamma",
    "delta",
    "fc",
    "out",
    "format",
];

fn load_file_config(path: &Path) -> Result<FileConfig, StaError> {
    let text = std::fs::read_to_string(path)?;
    // Report *all* unknown keys at once before deserializing, so a config
    // with several typos is fixable in one pass.
    let table: toml::Table = text.parse().map_err(|e| {
        StaError::Config(format!("config {} does not parse: {e}", path.display()))
    })?;
    let unknown: Vec<&str> = table
        .keys()
        .map(String::as_str)
        .filter(|k| !FILE_CONFIG_KEYS.contains(k))
        .collect();
    if !unknown.is_empty() {
        return Err(StaError::Config(format!(
            "config {} has unknown keys: {}",
            path.display(),
            unknown.join(", ")
        )));
    }
    table.try_into().map_err(|e| {
        StaError::Config(format!("config {} is malformed: {e}", path.display()))
    })
}

fn parse_benchmark_selection(s: &str) -> Vec<String> {
    match s {
        "all" => benchmarks::registry()
            .iter()
            .map(|b| b.name().to_string())
            .collect(),
        "group1" | "group2" => {
            let prefix = if s == "group1" { 'f' } else { 'g' };
            benchmarks::registry()
                .iter()
                .map(|b| b.name().to_string())
                .filter(|n| n.starts_with(prefix))
                .collect()
        }
        list => list
            .split(',')
            .map(|n| n.trim().to_string())
            .filter(|n| !n.is_empty())
            .collect(),
    }
}

fn parse_variant_selection(s: &str) -> Result<Vec<StaVariant>, StaError> {
    match s {
        "both" => Ok(StaVariant::ALL.to_vec()),
        single => Ok(vec![single.parse()?]),
    }
}

fn cmd_experiment(args: ExperimentArgs) -> Result<(), StaError> {
    let file = match &args.config {
        Some(path) => load_file_config(path)?,
        None => FileConfig::default(),
    };

    let benchmarks_arg = args
        .function
        .or(file.benchmarks)
        .unwrap_or_else(|| "all".to_string());
    let variant_arg = args
        .variant
        .or(file.variant)
        .unwrap_or_else(|| "both".to_string());
    let format = match args.format {
        Some(f) => f,
        None => match &file.format {
            Some(s) => parse_format(s).map_err(StaError::Config)?,
            None => OutputFormat::Md,
        },
    };
    let out = args
        .out
        .or_else(|| file.out.as_ref().map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from(format!("sta_experiment.{}", format.extension())));

    let file_overrides = ParamOverrides {
        se: file.se,
        alpha_max: file.alpha_max,
        alpha_min: file.alpha_min,
        beta: file.beta,
        gamma: file.gamma,
        delta: file.delta,
        fc: file.fc,
    };
    let spec = ExperimentSpec {
        benchmarks: parse_benchmark_selection(&benchmarks_arg),
        variants: parse_variant_selection(&variant_arg)?,
        runs: args.runs.or(file.runs).unwrap_or(10),
        epochs: args.epochs.or(file.epochs).unwrap_or(1000),
        master_seed: resolve_seed(args.seed, file.seed)?,
        overrides: args.params.layer_onto(file_overrides),
    };

    let report = run_experiment(&spec)?;
    let rows = compare_to_reference(&report);

    let table = match format {
        OutputFormat::Csv => comparison_csv(&rows),
        OutputFormat::Json => report_json(&report),
        OutputFormat::Md => comparison_markdown(&rows),
    };
    write_file(&out, &table)?;
    let runs_path = path_with_suffix(&out.with_extension(""), "_runs.csv");
    write_file(&runs_path, &runs_csv(&report))?;

    print!("{}", comparison_markdown(&rows));
    println!("wrote {} and {}", out.display(), runs_path.display());
    Ok(())
}

fn cmd_demo_axesion(args: DemoArgs) -> Result<(), StaError> {
    if args.samples == 0 {
        return Err(StaError::Config(
            "demo-axesion needs at least one sample".to_string(),
        ));
    }
    if !args.delta.is_finite() || args.delta < 0.0 {
        return Err(StaError::Config(format!(
            "delta must be a non-negative finite number, got {}",
            args.delta
        )));
    }
    let coords = args
        .point
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| StaError::Config(format!("invalid coordinate '{t}' in --point")))
        })
        .collect::<Result<Vec<f64>, _>>()?;
    let origin = State::new(coords)?;
    let seed = resolve_seed(args.seed, None)?;

    let params = TransformParams {
        delta: args.delta,
        se: args.samples,
        ..TransformParams::new_sta()
    };
    let mut rng = RandomSource::new(seed);
    let cloud = op_axesion(&origin, &params, &mut rng);
    write_file(&args.out, &point_cloud_csv(cloud.candidates()))?;
    println!(
        "wrote {} axesion candidates from {:?} (delta {}, seed {seed}) to {}",
        args.samples,
        origin.x(),
        args.delta,
        args.out.display()
    );
    Ok(())
}

fn cmd_spot_check(args: SpotCheckArgs) -> Result<(), StaError> {
    let benches = match &args.function {
        Some(name) => vec![benchmarks::find(name)?],
        None => benchmarks::registry(),
    };
    for b in benches {
        let recorded = b
            .theoretical_best()
            .map(display_value)
            .unwrap_or_else(|| "-".to_string());
        match benchmarks::spot_check(&b) {
            SpotCheckOutcome::AtOptimizer { value, error } => {
                let err = error
                    .map(|e| format!("{e:.2e}"))
                    .unwrap_or_else(|| "-".to_string());
                println!(
                    "{:<4} value at recorded minimizer = {} (recorded best {recorded}, |diff| = {err})",
                    b.name(),
                    display_value(value),
                );
            }
            SpotCheckOutcome::ProbeBest { value, samples } => {
                println!(
                    "{:<4} no recorded minimizer; best of {samples} uniform samples = {} (recorded best {recorded})",
                    b.name(),
                    display_value(value),
                );
            }
        }
    }
    Ok(())
}
