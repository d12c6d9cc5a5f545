//! Self-validation suite: each acceptance criterion as a named check that
//! reports the measured quantity next to its threshold.

use std::f64::consts::{LN_10, PI};
use std::fmt;
use std::time::{Duration, Instant};

use num_complex::Complex64;

use crate::ardcp::{ardcp, CoverageMode};
use crate::cfar::{bin_to_frame, frame_to_bin, resolve_cfar};
use crate::error::Result;
use crate::interference::{
    campbell_cumulant, mean_guard_radius, stable_cf, stable_params_noncoop, tsd_cf, tsd_cumulant,
    tsd_params_coop, InterferenceModel,
};
use crate::inversion::{ccdf_from_cf, quantile_from_cf, InversionConfig};
use crate::mc::{
    empirical_ccdf, empirical_cf, ks_distance, mc_ardcp_sweep, mc_false_alarm_rate,
    sample_interference_batch, GuardMode, McConfig,
};
use crate::params::NetworkParams;
use crate::quadrature::Integrator;
use crate::specials::{gamma_fn, gauss_2f1};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Level {
    /// Reduced trial counts.
    #[default]
    Fast,
    /// Full trial counts.
    Full,
}

impl Level {
    pub fn trials(self) -> u64 {
        match self {
            Level::Fast => 200_000,
            Level::Full => 1_000_000,
        }
    }
}

impl std::str::FromStr for Level {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "fast" => Ok(Level::Fast),
            "full" => Ok(Level::Full),
            other => Err(format!("unknown level {other:?}, expected fast or full")),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Fast => "fast",
            Level::Full => "full",
        })
    }
}

/// Pass thresholds. `kappa1_reference_scale` multiplies the reference mean
/// of the cumulant check and exists to confirm the harness can fail.
#[derive(Debug, Clone, PartialEq)]
pub struct Tolerances {
    pub mean_rel: f64,
    pub variance_rel: f64,
    pub cumulant_roundtrip_rel: f64,
    pub stable_cf_sup: f64,
    pub truncation_cf_sup: f64,
    pub dense_ks: f64,
    pub exp_ccdf_abs: f64,
    pub exp_quantile_rel: f64,
    pub false_alarm_sigmas: f64,
    pub frame_roundtrip: f64,
    pub ardcp_rel: f64,
    pub hyp_abs: f64,
    pub gamma_recurrence_rel: f64,
    pub kappa1_reference_scale: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            mean_rel: 0.02,
            variance_rel: 0.05,
            cumulant_roundtrip_rel: 1e-10,
            stable_cf_sup: 0.02,
            truncation_cf_sup: 0.05,
            dense_ks: 0.02,
            exp_ccdf_abs: 1e-6,
            exp_quantile_rel: 1e-6,
            false_alarm_sigmas: 3.0,
            frame_roundtrip: 1e-12,
            ardcp_rel: 0.05,
            hyp_abs: 1e-7,
            gamma_recurrence_rel: 1e-10,
            kappa1_reference_scale: 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationConfig {
    pub level: Level,
    pub seed: u64,
    pub tolerances: Tolerances,
    pub inversion: InversionConfig,
}

impl Default for ValidationConfig {
    fn default() -> Self {
        Self {
            level: Level::Fast,
            seed: 2024,
            tolerances: Tolerances::default(),
            inversion: InversionConfig::default(),
        }
    }
}

impl ValidationConfig {
    fn mc(&self, seed_offset: u64) -> McConfig {
        McConfig {
            trials: self.level.trials(),
            seed: self.seed.wrapping_add(seed_offset),
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:>2} {:<28} {} ({:.1}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

pub const CRITERIA: [(u8, &str); 10] = [
    (1, "cumulant-match"),
    (2, "cumulant-roundtrip"),
    (3, "stable-limit"),
    (4, "truncation-limit"),
    (5, "regime-reproduction"),
    (6, "inversion-oracle"),
    (7, "cfar-chain"),
    (8, "ardcp-vs-mc"),
    (9, "ardcp-trends"),
    (10, "special-functions"),
];

/// Density at which the stable scale is O(1), making the fixed ω grid informative.
pub const NORMALIZED_DENSITY: f64 = 1.0 / PI;

fn omega_grid() -> Vec<f64> {
    log_grid(0.01, 10.0, 200)
}

fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp())
        .collect()
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn sup_gap(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

fn outcome(passed: bool, detail: String) -> Result<(bool, String)> {
    Ok((passed, detail))
}

fn cumulant_match(cfg: &ValidationConfig) -> Result<(bool, String)> {
    let tol = &cfg.tolerances;
    let params = NetworkParams {
        lambda_b: 1e-4,
        ..Default::default()
    };
    let r_c = mean_guard_radius(&params)?;
    let k1 = campbell_cumulant(1, &params, r_c)? * tol.kappa1_reference_scale;
    let k2 = campbell_cumulant(2, &params, r_c)?;
    let draws = sample_interference_batch(&params, &cfg.mc(1), true)?;
    let n = draws.len() as f64;
    let mean = draws.iter().sum::<f64>() / n;
    let var = draws.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    let (em, ev) = (rel(mean, k1), rel(var, k2));
    outcome(
        em < tol.mean_rel && ev < tol.variance_rel,
        format!(
            "mean err {em:.4} (< {}), variance err {ev:.4} (< {})",
            tol.mean_rel, tol.variance_rel
        ),
    )
}

fn cumulant_roundtrip(cfg: &ValidationConfig) -> Result<(bool, String)> {
    let params = NetworkParams {
        lambda_b: 1e-4,
        ..Default::default()
    };
    let r_c = mean_guard_radius(&params)?;
    let tp = tsd_params_coop(&params, r_c)?;
    let mut worst: f64 = 0.0;
    for n in 1..=2 {
        worst = worst.max(rel(
            tsd_cumulant(&tp, n),
            campbell_cumulant(n, &params, r_c)?,
        ));
    }
    let tol = cfg.tolerances.cumulant_roundtrip_rel;
    outcome(
        worst < tol,
        format!("max rel err {worst:.2e} (< {tol:.0e})"),
    )
}

fn stable_limit(cfg: &ValidationConfig) -> Result<(bool, String)> {
    let params = NetworkParams {
        lambda_b: NORMALIZED_DENSITY,
        ..Default::default()
    };
    let sp = stable_params_noncoop(&params)?;
    let omegas = omega_grid();
    let model: Vec<Complex64> = omegas.iter().map(|&w| stable_cf(&sp, w)).collect();
    let mut gaps = Vec::new();
    for window in [1e2, 1e3] {
        let mc = McConfig {
            window_factor: window,
            ..cfg.mc(3)
        };
        let draws = sample_interference_batch(&params, &mc, false)?;
        gaps.push(sup_gap(&empirical_cf(&draws, &omegas), &model));
    }
    let tol = cfg.tolerances.stable_cf_sup;
    outcome(
        gaps[1] < tol && gaps[1] <= gaps[0],
        format!(
            "sup gap {:.5} at 1e2, {:.5} at 1e3 (< {tol}, decreasing)",
            gaps[0], gaps[1]
        ),
    )
}

fn truncation_limit(cfg: &ValidationConfig) -> Result<(bool, String)> {
    let params = NetworkParams {
        lambda_b: NORMALIZED_DENSITY,
        ..Default::default()
    };
    let sp = stable_params_noncoop(&params)?;
    let tp = tsd_params_coop(&params, 1e-3 * params.lambda_b.powf(-0.5))?;
    let gap = omega_grid()
        .into_iter()
        .map(|w| (tsd_cf(&tp, w) - stable_cf(&sp, w)).norm())
        .fold(0.0, f64::max);
    let tol = cfg.tolerances.truncation_cf_sup;
    outcome(gap < tol, format!("sup gap {gap:.4} (< {tol})"))
}

/// (KS of truncated-stable model, KS of strongest-interferer model) against MC.
pub fn regime_ks(lambda_b: f64, cfg: &ValidationConfig, mc: &McConfig) -> Result<(f64, f64)> {
    let params = NetworkParams {
        lambda_b,
        ..Default::default()
    };
    let r_c = mean_guard_radius(&params)?;
    let mut draws = sample_interference_batch(&params, mc, true)?;
    draws.sort_unstable_by(f64::total_cmp);
    let q = |p: f64| draws[((draws.len() - 1) as f64 * p) as usize];
    let grid = log_grid(q(0.001), q(0.999), 120);
    let emp = empirical_ccdf(&draws, &grid)?;
    let tsd = InterferenceModel::cooperative_tsd(&params, r_c)?;
    let sia = InterferenceModel::strongest_interferer(&params, r_c);
    let ks_tsd = ks_distance(&grid, &emp, |x| tsd.ccdf(x, &cfg.inversion))?;
    let ks_sia = ks_distance(&grid, &emp, |x| sia.ccdf(x, &cfg.inversion))?;
    Ok((ks_tsd, ks_sia))
}

fn regime_reproduction(cfg: &ValidationConfig) -> Result<(bool, String)> {
    let (dense_tsd, dense_sia) = regime_ks(1e-4, cfg, &cfg.mc(5))?;
    let (sparse_tsd, sparse_sia) = regime_ks(1e-6, cfg, &cfg.mc(6))?;
    let tol = cfg.tolerances.dense_ks;
    let dense_ok = dense_tsd < dense_sia && dense_tsd < tol;
    let sparse_ok = sparse_sia < sparse_tsd;
    outcome(
        dense_ok && sparse_ok,
        format!(
            "dense KS tsd {dense_tsd:.4} sia {dense_sia:.4} [{}]; sparse KS tsd {sparse_tsd:.4} sia {sparse_sia:.4} [{}]",
            if dense_ok { "ok" } else { "bad" },
            if sparse_ok { "ok" } else { "bad" },
        ),
    )
}

fn inversion_oracle(cfg: &ValidationConfig) -> Result<(bool, String)> {
    let cf = |w: f64| Complex64::new(1.0, -w).inv();
    let ccdf = ccdf_from_cf(&cf, 1.0, &cfg.inversion)?;
    let quantile = quantile_from_cf(&cf, 0.1, &cfg.inversion)?;
    let (e_ccdf, e_q) = ((ccdf - (-1.0f64).exp()).abs(), rel(quantile, LN_10));
    let tol = &cfg.tolerances;
    outcome(
        e_ccdf < tol.exp_ccdf_abs && e_q < tol.exp_quantile_rel,
        format!("ccdf abs err {e_ccdf:.2e}, quantile rel err {e_q:.2e}"),
    )
}

fn cfar_chain(cfg: &ValidationConfig) -> Result<(bool, String)> {
    let params = NetworkParams::default();
    let (n, m) = (params.n_sub, params.m_sym);
    let mut roundtrip: f64 = 0.0;
    for p in [1e-6, 1e-3, 0.01, 0.1, 0.5, 0.9] {
        roundtrip = roundtrip.max((bin_to_frame(frame_to_bin(p, n, m)?, n, m)? - p).abs());
    }
    for p in [1e-9, 1e-6, 1e-4, 1e-3] {
        roundtrip = roundtrip.max((frame_to_bin(bin_to_frame(p, n, m)?, n, m)? - p).abs());
    }
    let target = 1e-2;
    let r_c = mean_guard_radius(&params)?;
    let model = InterferenceModel::cooperative_tsd(&params, r_c)?;
    let res = resolve_cfar(
        bin_to_frame(target, n, m)?,
        &params,
        &model,
        r_c,
        &cfg.inversion,
    )?;
    let est = mc_false_alarm_rate(&params, res.eta, &cfg.mc(7))?;
    let sigma = (target * (1.0 - target) / est.trials as f64).sqrt();
    let z = (est.value - target).abs() / sigma;
    let tol = &cfg.tolerances;
    outcome(
        z <= tol.false_alarm_sigmas && roundtrip <= tol.frame_roundtrip,
        format!(
            "MC false alarm {:.5} ({z:.2} sigma), roundtrip err {roundtrip:.1e}",
            est.value
        ),
    )
}

/// Thresholds of the coverage sweep.
pub const ARDCP_SWEEP: [f64; 5] = [1.0, 10.0, 100.0, 1e3, 1e4];

fn ardcp_vs_mc(cfg: &ValidationConfig) -> Result<(bool, String)> {
    let params = NetworkParams {
        lambda_b: 1e-5,
        ..Default::default()
    };
    let mc = McConfig {
        guard_mode: GuardMode::FixedMean,
        ..cfg.mc(8)
    };
    let est = mc_ardcp_sweep(&params, &ARDCP_SWEEP, &mc)?;
    let mut worst: f64 = 0.0;
    let mut cells = Vec::new();
    for (&t, e) in ARDCP_SWEEP.iter().zip(&est) {
        let a = ardcp(t, &params, CoverageMode::LaplaceCorrected)?;
        let r = rel(e.value, a);
        worst = worst.max(r);
        cells.push(format!("{t:e}:{r:.3}"));
    }
    let tol = cfg.tolerances.ardcp_rel;
    outcome(
        worst < tol,
        format!("max rel gap {worst:.4} (< {tol}) [{}]", cells.join(" ")),
    )
}

/// Threshold at which the coverage trends are checked.
pub const TREND_THRESHOLD: f64 = 1e3;

fn increasing(v: &[f64]) -> bool {
    v.windows(2).all(|w| w[1] > w[0])
}

fn ardcp_trends(cfg: &ValidationConfig) -> Result<(bool, String)> {
    let mut analytic_h = Vec::new();
    let mut mc_h = Vec::new();
    for h_b in [10.0, 30.0, 50.0] {
        let p = NetworkParams {
            lambda_b: 1e-6,
            h_b,
            h_t: 100.0,
            ..Default::default()
        };
        analytic_h.push(ardcp(TREND_THRESHOLD, &p, CoverageMode::LaplaceCorrected)?);
        mc_h.push(mc_ardcp_sweep(&p, &[TREND_THRESHOLD], &cfg.mc(9))?[0].value);
    }
    let mut analytic_n = Vec::new();
    let mut mc_n = Vec::new();
    for n_c in [1, 3, 7] {
        let p = NetworkParams {
            lambda_b: 1e-4,
            n_c,
            ..Default::default()
        };
        analytic_n.push(ardcp(TREND_THRESHOLD, &p, CoverageMode::LaplaceCorrected)?);
        mc_n.push(mc_ardcp_sweep(&p, &[TREND_THRESHOLD], &cfg.mc(10))?[0].value);
    }
    let flags = [
        increasing(&analytic_h),
        increasing(&mc_h),
        increasing(&analytic_n),
        increasing(&mc_n),
    ];
    let fmt = |v: &[f64]| {
        v.iter()
            .map(|x| format!("{x:.3e}"))
            .collect::<Vec<_>>()
            .join(",")
    };
    outcome(
        flags.iter().all(|&f| f),
        format!(
            "h_b analytic [{}] mc [{}]; n_c analytic [{}] mc [{}]",
            fmt(&analytic_h),
            fmt(&mc_h),
            fmt(&analytic_n),
            fmt(&mc_n)
        ),
    )
}

/// ₂F₁(a, b; c; z) from its Euler integral, valid for c > b > 0.
///
/// The substitution t = u^(1/b) removes the endpoint singularity at 0.
pub fn euler_integral_2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    let pre = gamma_fn(c)? / (gamma_fn(b)? * gamma_fn(c - b)?) / b;
    let f = |u: f64| {
        let t = u.powf(1.0 / b);
        (1.0 - t).powf(c - b - 1.0) * (1.0 - z * t).powf(-a)
    };
    let integrator = Integrator {
        abs_tol: 1e-14,
        rel_tol: 1e-12,
        max_subdivisions: 20_000,
    };
    let breaks = [0.0, 1e-3, 1e-2, 0.1, 0.5, 0.9, 0.99, 1.0];
    Ok(pre * integrator.integrate(f, &breaks)?.value)
}

/// Tuples for the hypergeometric check.
pub fn hyp_tuples() -> Vec<(f64, f64, f64, f64)> {
    let mut out = vec![(1.0, 0.5, 1.5, -1.0), (1.0, 0.5, 1.5, -100.0)];
    for alpha in [3.0, 3.5, 4.0, 5.0] {
        let d = 2.0 / alpha;
        for z in [-1e3, -100.0, -10.0, -1.0, -0.6, -0.3, 0.0] {
            out.push((1.0, 1.0 - d, 2.0 - d, z));
        }
    }
    out
}

fn special_functions(cfg: &ValidationConfig) -> Result<(bool, String)> {
    let mut hyp: f64 = 0.0;
    for (a, b, c, z) in hyp_tuples() {
        hyp = hyp.max((gauss_2f1(a, b, c, z)? - euler_integral_2f1(a, b, c, z)?).abs());
    }
    let mut rec: f64 = 0.0;
    for i in 0..=199 {
        let x = 0.1 + 19.9 * f64::from(i) / 199.0;
        rec = rec.max(rel(gamma_fn(x + 1.0)?, x * gamma_fn(x)?));
    }
    let tol = &cfg.tolerances;
    outcome(
        hyp < tol.hyp_abs && rec < tol.gamma_recurrence_rel,
        format!("2F1 max abs err {hyp:.2e}, gamma recurrence rel err {rec:.2e}"),
    )
}

/// Runs one criterion. Errors raised while evaluating count as failures.
pub fn run_criterion(id: u8, cfg: &ValidationConfig) -> Option<CriterionResult> {
    let name = CRITERIA.iter().find(|(i, _)| *i == id)?.1;
    let check: fn(&ValidationConfig) -> Result<(bool, String)> = match id {
        1 => cumulant_match,
        2 => cumulant_roundtrip,
        3 => stable_limit,
        4 => truncation_limit,
        5 => regime_reproduction,
        6 => inversion_oracle,
        7 => cfar_chain,
        8 => ardcp_vs_mc,
        9 => ardcp_trends,
        10 => special_functions,
        _ => return None,
    };
    let start = Instant::now();
    let (passed, detail) = match check(cfg) {
        Ok(v) => v,
        Err(e) => (false, format!("error: {e}")),
    };
    Some(CriterionResult {
        id,
        name,
        passed,
        detail,
        elapsed: start.elapsed(),
    })
}

pub fn run_all(cfg: &ValidationConfig) -> Vec<CriterionResult> {
    CRITERIA
        .iter()
        .filter_map(|(id, _)| run_criterion(*id, cfg))
        .collect()
}
