//! Command-line surface: `dist`, `cfar`, `ardcp`, `validate` and `replay`.
//!
//! Every command writes CSV files plus a [`RunManifest`] into `--out`.
//! Exit codes: 0 success, 2 configuration, 3 undefined quantity,
//! 4 numerical failure, 5 validation failure.

pub mod config;
pub mod manifest;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::ardcp::{ardcp, CoverageMode};
use crate::cfar::{resolve_cfar, CfarResult};
use crate::error::{Error, Result};
use crate::interference::{campbell_cumulant, mean_guard_radius, InterferenceModel};
use crate::mc::{empirical_ccdf, ks_distance, mc_ardcp_sweep, sample_interference_batch};
use crate::params::{NetworkParams, M2_PER_KM2};
use crate::validation::{self, Level, ValidationConfig};

pub use config::RunConfig;
pub use manifest::RunManifest;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_UNDEFINED: i32 = 3;
pub const EXIT_NUMERICAL: i32 = 4;
pub const EXIT_VALIDATION: i32 = 5;

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvalidParams(_) | Error::Config(_) | Error::Io(_) => EXIT_CONFIG,
        Error::InfiniteMean { .. } | Error::Domain { .. } => EXIT_UNDEFINED,
        Error::GammaPole(_)
        | Error::NoConvergence { .. }
        | Error::Bracket { .. }
        | Error::SamplingBudget { .. }
        | Error::Csv(_) => EXIT_NUMERICAL,
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "isac-sensing",
    version,
    about = "Sensing interference, CFAR thresholds and coverage for cooperative ISAC networks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Interference CCDFs under the stable, truncated-stable and strongest-interferer models.
    Dist(DistArgs),
    /// CFAR threshold chain for a frame-level false-alarm rate.
    Cfar(CfarArgs),
    /// Area radar detection coverage over a parameter sweep.
    Ardcp(ArdcpArgs),
    /// Runs the acceptance checks.
    Validate(ValidateArgs),
    /// Re-runs the command recorded in a manifest.
    Replay(ReplayArgs),
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Flat key = value config file.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Output directory.
    #[arg(long, default_value = "out")]
    pub out: PathBuf,
    /// Seed for every Monte Carlo stream.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Config override, repeatable: `--set h_b=30`.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    pub set: Vec<String>,
    /// BS density in m⁻²; `dist` accepts a comma-separated list.
    #[arg(long, value_delimiter = ',')]
    pub lambda_b: Vec<f64>,
    /// BS density in BSs/km²; `dist` accepts a comma-separated list.
    #[arg(long, value_delimiter = ',', conflicts_with = "lambda_b")]
    pub lambda_b_km2: Vec<f64>,
    #[arg(long)]
    pub n_c: Option<u32>,
    #[arg(long)]
    pub h_b: Option<f64>,
    #[arg(long)]
    pub h_t: Option<f64>,
    #[arg(long)]
    pub alpha_c: Option<f64>,
    #[arg(long)]
    pub p_t: Option<f64>,
    #[arg(long, value_enum)]
    pub guard_mode: Option<GuardArg>,
    /// Enables the Monte Carlo columns with this many trials.
    #[arg(long)]
    pub mc_trials: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GuardArg {
    FixedMean,
    PerRealization,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Stable,
    Tsd,
    Sia,
    All,
}

#[derive(Debug, Clone, Args)]
pub struct DistArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub model: ModelArg,
    /// Lower end of the log-spaced grid; defaults to a quarter of the mean interference.
    #[arg(long)]
    pub x_min: Option<f64>,
    /// Upper end of the log-spaced grid; defaults to four times the mean interference.
    #[arg(long)]
    pub x_max: Option<f64>,
    #[arg(long, default_value_t = 100)]
    pub points: usize,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CfarArgs {
    #[arg(long)]
    pub p_frame: f64,
    #[arg(long, value_enum, default_value = "tsd")]
    pub model: ModelArg,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepAxis {
    LambdaB,
    LambdaBKm2,
    #[value(name = "h-b")]
    HB,
    #[value(name = "n-c")]
    NC,
    #[value(name = "t-r")]
    TR,
}

impl SweepAxis {
    fn name(self) -> &'static str {
        match self {
            SweepAxis::LambdaB => "lambda_b",
            SweepAxis::LambdaBKm2 => "lambda_b_km2",
            SweepAxis::HB => "h_b",
            SweepAxis::NC => "n_c",
            SweepAxis::TR => "t_r",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    LaplaceCorrected,
    AsPrinted,
}

#[derive(Debug, Clone, Args)]
pub struct ArdcpArgs {
    #[arg(long, value_enum)]
    pub sweep: SweepAxis,
    #[arg(long, value_delimiter = ',', required = true)]
    pub values: Vec<f64>,
    /// SIR threshold when the sweep is not over `t-r`.
    #[arg(long, default_value_t = 10.0)]
    pub t_r: f64,
    #[arg(long, value_enum, default_value = "laplace-corrected")]
    pub mode: ModeArg,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ValidateArgs {
    #[arg(long, default_value = "fast")]
    pub level: Level,
    /// Multiplies the reference mean of the cumulant check.
    #[arg(long, hide = true)]
    pub tamper_kappa1: Option<f64>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ReplayArgs {
    pub manifest: PathBuf,
    #[arg(long, default_value = "out")]
    pub out: PathBuf,
}

/// Result of a command that ran to completion.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub outputs: Vec<PathBuf>,
    pub validation_failed: bool,
}

fn resolve_config(common: &CommonArgs) -> Result<RunConfig> {
    let mut cfg = match &common.config {
        Some(path) => RunConfig::from_file(path)?,
        None => RunConfig::default(),
    };
    for kv in &common.set {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("--set {kv:?}: expected KEY=VALUE")))?;
        cfg.set(k.trim(), v.trim())?;
    }
    let p = &mut cfg.params;
    if let Some(v) = common.n_c {
        p.n_c = v;
    }
    if let Some(v) = common.h_b {
        p.h_b = v;
    }
    if let Some(v) = common.h_t {
        p.h_t = v;
    }
    if let Some(v) = common.alpha_c {
        p.alpha_c = v;
    }
    if let Some(v) = common.p_t {
        p.p_t = v;
    }
    if let Some(g) = common.guard_mode {
        cfg.mc.guard_mode = match g {
            GuardArg::FixedMean => crate::mc::GuardMode::FixedMean,
            GuardArg::PerRealization => crate::mc::GuardMode::PerRealization,
        };
    }
    if let Some(t) = common.mc_trials {
        cfg.mc.trials = t;
    }
    if let Some(seed) = common.seed {
        cfg.seed = Some(seed);
        cfg.mc.seed = seed;
    }
    if let Some(&first) = densities(common).first() {
        cfg.params.lambda_b = first;
    }
    Ok(cfg)
}

fn densities(common: &CommonArgs) -> Vec<f64> {
    if !common.lambda_b_km2.is_empty() {
        common.lambda_b_km2.iter().map(|d| d / M2_PER_KM2).collect()
    } else {
        common.lambda_b.clone()
    }
}

fn require_seed(cfg: &RunConfig, what: &str) -> Result<u64> {
    cfg.seed
        .ok_or_else(|| Error::Config(format!("{what} needs --seed (or mc.seed in the config)")))
}

fn single_density(common: &CommonArgs) -> Result<()> {
    if densities(common).len() > 1 {
        return Err(Error::Config("only dist accepts several densities".into()));
    }
    Ok(())
}

fn num(x: f64) -> String {
    format!("{x:e}")
}

fn write_csv(path: &Path, header: &[&str], rows: &[Vec<String>]) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    w.flush()?;
    Ok(())
}

fn log_grid(lo: f64, hi: f64, n: usize) -> Result<Vec<f64>> {
    if !(lo > 0.0 && hi > lo && n >= 2) {
        return Err(Error::Config(format!(
            "grid needs 0 < x_min < x_max and at least 2 points (got {lo}, {hi}, {n})"
        )));
    }
    let (a, b) = (lo.ln(), hi.ln());
    Ok((0..n)
        .map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp())
        .collect())
}

fn wants(model: ModelArg, which: ModelArg) -> bool {
    model == ModelArg::All || model == which
}

fn cmd_dist(args: &DistArgs, out: &Path, cfg: &RunConfig) -> Result<(Vec<String>, Vec<f64>)> {
    let mut lambdas = densities(&args.common);
    if lambdas.is_empty() {
        lambdas.push(cfg.params.lambda_b);
    }
    let mc = args.common.mc_trials.is_some();
    if mc {
        require_seed(cfg, "dist with --mc-trials")?;
    }
    let mut outputs = Vec::new();
    let mut summary = vec![format!("densities = {}", lambdas.len())];
    for (i, &lambda_b) in lambdas.iter().enumerate() {
        let params = NetworkParams {
            lambda_b,
            ..cfg.params.clone()
        };
        params.validate()?;
        let r_c = mean_guard_radius(&params)?;
        let mean = campbell_cumulant(1, &params, r_c)?;
        let grid = log_grid(
            args.x_min.unwrap_or(0.25 * mean),
            args.x_max.unwrap_or(4.0 * mean),
            args.points,
        )?;
        let mut models: Vec<(&str, InterferenceModel)> = Vec::new();
        if wants(args.model, ModelArg::Stable) {
            models.push(("stable", InterferenceModel::noncooperative_stable(&params)?));
        }
        if wants(args.model, ModelArg::Tsd) {
            models.push(("tsd", InterferenceModel::cooperative_tsd(&params, r_c)?));
        }
        if wants(args.model, ModelArg::Sia) {
            models.push(("sia", InterferenceModel::strongest_interferer(&params, r_c)));
        }
        let mut columns: Vec<(String, Vec<f64>)> = Vec::new();
        for (name, model) in &models {
            let ccdf = grid
                .par_iter()
                .map(|&x| model.ccdf(x, &cfg.inversion))
                .collect::<Result<Vec<f64>>>()?;
            columns.push((format!("ccdf_{name}"), ccdf));
        }
        summary.push(format!("lambda_b[{i}] = {}", num(lambda_b)));
        summary.push(format!(
            "lambda_b_per_km2[{i}] = {}",
            num(lambda_b * M2_PER_KM2)
        ));
        if mc {
            let draws = sample_interference_batch(&params, &cfg.mc, true)?;
            let emp = empirical_ccdf(&draws, &grid)?;
            let n = draws.len() as f64;
            let stderr: Vec<f64> = emp.iter().map(|p| (p * (1.0 - p) / n).sqrt()).collect();
            for (name, curve) in &columns {
                let mut model_values = curve.iter();
                let ks = ks_distance(&grid, &emp, |_| {
                    Ok(*model_values.next().unwrap_or(&f64::NAN))
                })?;
                summary.push(format!("ks_{}[{i}] = {}", &name[5..], num(ks)));
            }
            columns.push(("ccdf_mc".into(), emp));
            columns.push(("mc_stderr".into(), stderr));
        }
        let file = format!("dist_{i}.csv");
        let mut header = vec!["x"];
        header.extend(columns.iter().map(|(n, _)| n.as_str()));
        let rows: Vec<Vec<String>> = grid
            .iter()
            .enumerate()
            .map(|(k, &x)| {
                std::iter::once(num(x))
                    .chain(columns.iter().map(|(_, c)| num(c[k])))
                    .collect()
            })
            .collect();
        write_csv(&out.join(&file), &header, &rows)?;
        log::info!("wrote {file} for lambda_b = {lambda_b:e}");
        outputs.push(file);
    }
    fs::write(out.join("summary.txt"), summary.join("\n") + "\n")?;
    outputs.push("summary.txt".into());
    Ok((outputs, lambdas))
}

fn cmd_cfar(args: &CfarArgs, out: &Path, cfg: &RunConfig) -> Result<(Vec<String>, CfarResult)> {
    single_density(&args.common)?;
    let params = &cfg.params;
    params.validate()?;
    let r_c = mean_guard_radius(params)?;
    let model = match args.model {
        ModelArg::Stable => InterferenceModel::noncooperative_stable(params)?,
        ModelArg::Tsd | ModelArg::All => InterferenceModel::cooperative_tsd(params, r_c)?,
        ModelArg::Sia => InterferenceModel::strongest_interferer(params, r_c),
    };
    let res = resolve_cfar(args.p_frame, params, &model, r_c, &cfg.inversion)?;
    println!("model             {}", model.name());
    println!("p_frame           {}", res.p_frame);
    println!("p_bin             {:e}", res.p_bin);
    println!("eta               {:e}", res.eta);
    println!("eta_prime         {:e}", res.eta_prime);
    println!("mean interference {:e}", res.mean_interference);
    println!("T_r               {}", res.t_r);
    let file = "cfar.csv".to_string();
    write_csv(
        &out.join(&file),
        &[
            "model",
            "lambda_b",
            "lambda_b_per_km2",
            "p_frame",
            "p_bin",
            "eta",
            "eta_prime",
            "mean_interference",
            "t_r",
        ],
        &[vec![
            model.name().to_string(),
            num(params.lambda_b),
            num(params.lambda_b * M2_PER_KM2),
            num(res.p_frame),
            num(res.p_bin),
            num(res.eta),
            num(res.eta_prime),
            num(res.mean_interference),
            num(res.t_r),
        ]],
    )?;
    Ok((vec![file], res))
}

fn sweep_point(
    base: &NetworkParams,
    axis: SweepAxis,
    v: f64,
    t_r: f64,
) -> Result<(NetworkParams, f64)> {
    let mut p = base.clone();
    let mut t = t_r;
    match axis {
        SweepAxis::LambdaB => p.lambda_b = v,
        SweepAxis::LambdaBKm2 => p.lambda_b = v / M2_PER_KM2,
        SweepAxis::HB => p.h_b = v,
        SweepAxis::NC => {
            if v < 0.0 || v.fract() != 0.0 || v > f64::from(u32::MAX) {
                return Err(Error::Config(format!("n_c sweep value {v} is not a count")));
            }
            p.n_c = v as u32;
        }
        SweepAxis::TR => t = v,
    }
    p.validate()?;
    Ok((p, t))
}

fn cmd_ardcp(args: &ArdcpArgs, out: &Path, cfg: &RunConfig) -> Result<Vec<String>> {
    single_density(&args.common)?;
    let mc = args.common.mc_trials.is_some();
    if mc {
        require_seed(cfg, "ardcp with --mc-trials")?;
    }
    let mode = match args.mode {
        ModeArg::LaplaceCorrected => CoverageMode::LaplaceCorrected,
        ModeArg::AsPrinted => CoverageMode::AsPrinted,
    };
    let points = args
        .values
        .iter()
        .map(|&v| sweep_point(&cfg.params, args.sweep, v, args.t_r))
        .collect::<Result<Vec<_>>>()?;
    let analytic = points
        .par_iter()
        .map(|(p, t)| ardcp(*t, p, mode))
        .collect::<Result<Vec<f64>>>()?;
    let mut header = vec![
        "sweep_value",
        "lambda_b",
        "lambda_b_per_km2",
        "t_r",
        "ardcp_analytic",
    ];
    if mc {
        header.extend(["ardcp_mc", "mc_stderr", "rel_gap"]);
    }
    let mut rows = Vec::new();
    for (k, ((p, t), a)) in points.iter().zip(&analytic).enumerate() {
        let mut row = vec![
            num(args.values[k]),
            num(p.lambda_b),
            num(p.lambda_b * M2_PER_KM2),
            num(*t),
            num(*a),
        ];
        if mc {
            let e = mc_ardcp_sweep(p, &[*t], &cfg.mc)?[0];
            row.extend([num(e.value), num(e.std_error), num((e.value - a) / a)]);
        }
        rows.push(row);
    }
    let file = format!("ardcp_{}.csv", args.sweep.name());
    write_csv(&out.join(&file), &header, &rows)?;
    Ok(vec![file])
}

fn cmd_validate(args: &ValidateArgs, out: &Path, cfg: &RunConfig) -> Result<(Vec<String>, bool)> {
    let mut vcfg = ValidationConfig {
        level: args.level,
        inversion: cfg.inversion,
        ..Default::default()
    };
    if let Some(seed) = cfg.seed {
        vcfg.seed = seed;
    }
    if let Some(scale) = args.tamper_kappa1 {
        vcfg.tolerances.kappa1_reference_scale = scale;
    }
    let mut lines = vec![
        format!("level = {}", args.level),
        format!("seed = {}", vcfg.seed),
    ];
    let mut all_passed = true;
    for (id, _) in validation::CRITERIA {
        let Some(r) = validation::run_criterion(id, &vcfg) else {
            continue;
        };
        println!("{r}");
        all_passed &= r.passed;
        lines.push(format!("criterion.{id}.name = {}", r.name));
        lines.push(format!("criterion.{id}.passed = {}", r.passed));
        lines.push(format!("criterion.{id}.detail = {}", r.detail));
        lines.push(format!(
            "criterion.{id}.seconds = {:.3}",
            r.elapsed.as_secs_f64()
        ));
    }
    lines.push(format!("passed = {all_passed}"));
    let file = "validation.txt".to_string();
    fs::write(out.join(&file), lines.join("\n") + "\n")?;
    Ok((vec![file], !all_passed))
}

fn recorded_args(argv: &[OsString]) -> Vec<String> {
    let mut out = Vec::new();
    let mut skip = false;
    for a in argv.iter().skip(2) {
        let s = a.to_string_lossy().into_owned();
        if skip {
            skip = false;
            continue;
        }
        if s == "--out" || s == "--config" {
            skip = true;
            continue;
        }
        if s.starts_with("--out=") || s.starts_with("--config=") {
            continue;
        }
        out.push(s);
    }
    out
}

fn common_of(cmd: &Command) -> Option<&CommonArgs> {
    match cmd {
        Command::Dist(a) => Some(&a.common),
        Command::Cfar(a) => Some(&a.common),
        Command::Ardcp(a) => Some(&a.common),
        Command::Validate(a) => Some(&a.common),
        Command::Replay(_) => None,
    }
}

/// Runs a parsed command. `argv` is the original argument list, recorded in the manifest.
pub fn execute(cli: &Cli, argv: &[OsString]) -> Result<Outcome> {
    if let Command::Replay(r) = &cli.command {
        let (command, args) = RunManifest::read_invocation(&r.manifest)?;
        let mut replay: Vec<OsString> = vec!["isac-sensing".into(), command.into()];
        replay.extend(args.into_iter().map(OsString::from));
        replay.extend(["--config".into(), r.manifest.clone().into_os_string()]);
        replay.extend(["--out".into(), r.out.clone().into_os_string()]);
        let inner = Cli::try_parse_from(&replay).map_err(|e| Error::Config(e.to_string()))?;
        if matches!(inner.command, Command::Replay(_)) {
            return Err(Error::Config("a manifest cannot record a replay".into()));
        }
        return execute(&inner, &replay);
    }
    let common = common_of(&cli.command).expect("non-replay command");
    let cfg = resolve_config(common)?;
    fs::create_dir_all(&common.out)?;
    let out = common.out.as_path();
    let mut sweep_axis = None;
    let mut sweep_grid = Vec::new();
    let mut validation_failed = false;
    let (name, outputs) = match &cli.command {
        Command::Dist(a) => {
            let (files, lambdas) = cmd_dist(a, out, &cfg)?;
            sweep_axis = Some("lambda_b".to_string());
            sweep_grid = lambdas;
            ("dist", files)
        }
        Command::Cfar(a) => ("cfar", cmd_cfar(a, out, &cfg)?.0),
        Command::Ardcp(a) => {
            let files = cmd_ardcp(a, out, &cfg)?;
            sweep_axis = Some(a.sweep.name().to_string());
            sweep_grid = a.values.clone();
            ("ardcp", files)
        }
        Command::Validate(a) => {
            let (files, failed) = cmd_validate(a, out, &cfg)?;
            validation_failed = failed;
            ("validate", files)
        }
        Command::Replay(_) => unreachable!(),
    };
    let manifest = RunManifest {
        command: name.to_string(),
        args: recorded_args(argv),
        config: cfg,
        sweep_axis,
        sweep_grid,
        outputs: outputs.clone(),
    };
    manifest.write(out)?;
    let mut paths: Vec<PathBuf> = outputs.iter().map(|f| out.join(f)).collect();
    paths.push(out.join(manifest::MANIFEST_FILE));
    Ok(Outcome {
        outputs: paths,
        validation_failed,
    })
}

/// Parses `argv`, runs the command and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli, &argv) {
        Ok(o) if o.validation_failed => EXIT_VALIDATION,
        Ok(_) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_code_taxonomy() {
        assert_eq!(exit_code(&Error::Config("x".into())), EXIT_CONFIG);
        assert_eq!(
            exit_code(&Error::InfiniteMean { alpha: 0.5 }),
            EXIT_UNDEFINED
        );
        assert_eq!(
            exit_code(&Error::NoConvergence {
                routine: "r",
                detail: String::new()
            }),
            EXIT_NUMERICAL
        );
    }

    #[test]
    fn output_and_config_paths_are_not_recorded() {
        let argv: Vec<OsString> = [
            "bin",
            "cfar",
            "--p-frame",
            "0.1",
            "--out",
            "/tmp/x",
            "--config=c.txt",
            "--seed",
            "3",
        ]
        .iter()
        .map(OsString::from)
        .collect();
        assert_eq!(
            recorded_args(&argv),
            vec!["--p-frame", "0.1", "--seed", "3"]
        );
    }

    #[test]
    fn density_units() {
        let cli = Cli::try_parse_from(["bin", "cfar", "--p-frame", "0.1", "--lambda-b-km2", "10"])
            .unwrap();
        let cfg = resolve_config(common_of(&cli.command).unwrap()).unwrap();
        assert!((cfg.params.lambda_b - 1e-5).abs() < 1e-20);
        assert!(Cli::try_parse_from([
            "bin",
            "cfar",
            "--p-frame",
            "0.1",
            "--lambda-b",
            "1e-5",
            "--lambda-b-km2",
            "10"
        ])
        .is_err());
    }

    #[test]
    fn grid_validation() {
        assert!(log_grid(1.0, 1.0, 10).is_err());
        assert!(log_grid(0.0, 1.0, 10).is_err());
        let g = log_grid(1.0, 100.0, 3).unwrap();
        assert!((g[1] - 10.0).abs() < 1e-12);
    }
}
