//! Monte Carlo oracle for the analytical interference, CFAR and coverage
//! expressions.
//!
//! Interferers are drawn exactly from the PPP on the disk of radius
//! `near_field_factor·λ^(−1/2)`. The annulus between that radius and the
//! outer window `window_factor·λ^(−1/2)` holds millions of points per draw
//! whose sum is replaced by a Gaussian with its exact Campbell mean and
//! variance. Trials are split into fixed-size chunks, each with its own
//! derived random streams, so results are identical for any thread count.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::interference::mean_guard_radius;
use crate::params::NetworkParams;
use crate::point_field::{poisson_count, radial_sq, DEFAULT_POINT_CAP};
use crate::rng::{self, SimRng};

/// Inner exclusion radius of non-cooperative draws, in units of λ^(−1/2).
pub const NONCOOP_FLOOR_FACTOR: f64 = 1e-6;

/// Trials per deterministic work unit.
pub const CHUNK_TRIALS: u64 = 8192;

const STREAM_FIELD: u64 = 0;
const STREAM_FAR: u64 = 1;
const STREAM_LINK: u64 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GuardMode {
    /// Guard radius fixed at E[r_{N_c+2}].
    #[default]
    FixedMean,
    /// Guard radius re-drawn per realisation as r_{N_c+2} of that realisation.
    PerRealization,
}

#[derive(Debug, Clone, PartialEq)]
pub struct McConfig {
    pub trials: u64,
    /// Outer window radius in units of λ^(−1/2).
    pub window_factor: f64,
    /// Radius, in units of λ^(−1/2), inside which interferers are simulated point by point.
    pub near_field_factor: f64,
    pub guard_mode: GuardMode,
    pub seed: u64,
}

impl Default for McConfig {
    fn default() -> Self {
        Self {
            trials: 1_000_000,
            window_factor: 1.0e3,
            near_field_factor: 10.0,
            guard_mode: GuardMode::FixedMean,
            seed: 0,
        }
    }
}

impl McConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials < 1_000 {
            return Err(Error::domain("McConfig", "at least 1000 trials required"));
        }
        if !(self.window_factor >= 10.0) {
            return Err(Error::domain(
                "McConfig",
                "window_factor must be at least 10",
            ));
        }
        if !(self.near_field_factor > 0.0) {
            return Err(Error::domain(
                "McConfig",
                "near_field_factor must be positive",
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub value: f64,
    pub std_error: f64,
    pub trials: u64,
    pub seed: u64,
}

impl McEstimate {
    /// Binomial proportion `hits/trials`, scaled by `scale`.
    pub fn binomial(hits: u64, trials: u64, scale: f64, seed: u64) -> Self {
        let n = trials as f64;
        let p = hits as f64 / n;
        Self {
            value: scale * p,
            std_error: scale * (p * (1.0 - p) / n).sqrt(),
            trials,
            seed,
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum Guard {
    Floor,
    Fixed(f64),
    Kth(usize),
}

/// Sampler for one realisation of the aggregated interference.
#[derive(Debug, Clone)]
pub struct ShotNoiseSampler {
    density: f64,
    half_alpha: f64,
    inner_sq: f64,
    near_sq: f64,
    guard: Guard,
    far_mean: f64,
    far_sd: f64,
}

/// ∫_{a}^{b} 2πλ w^(1−nα) dw · Γ(1+n), the n-th cumulant of an annulus.
fn annulus_cumulant(n: u32, density: f64, alpha_c: f64, a: f64, b: f64) -> f64 {
    if b <= a {
        return 0.0;
    }
    let e = 2.0 - f64::from(n) * alpha_c;
    let moment = if n == 1 { 1.0 } else { 2.0 };
    2.0 * PI * density * moment * (a.powf(e) - b.powf(e)) / (-e)
}

impl ShotNoiseSampler {
    pub fn new(params: &NetworkParams, cfg: &McConfig, cooperative: bool) -> Result<Self> {
        let guard = match (cooperative, cfg.guard_mode) {
            (false, _) => Guard::Floor,
            (true, GuardMode::FixedMean) => Guard::Fixed(mean_guard_radius(params)?),
            (true, GuardMode::PerRealization) => Guard::Kth(params.guard_order() as usize),
        };
        Self::build(params, cfg, guard)
    }

    /// Sampler with an explicit deterministic guard radius.
    pub fn with_guard_radius(
        params: &NetworkParams,
        cfg: &McConfig,
        guard_radius: f64,
    ) -> Result<Self> {
        if !(guard_radius > 0.0 && guard_radius.is_finite()) {
            return Err(Error::domain(
                "with_guard_radius",
                "guard radius must be positive",
            ));
        }
        Self::build(params, cfg, Guard::Fixed(guard_radius))
    }

    fn build(params: &NetworkParams, cfg: &McConfig, guard: Guard) -> Result<Self> {
        params.validate()?;
        cfg.validate()?;
        let lam = params.lambda_b;
        let unit = lam.powf(-0.5);
        let outer = cfg.window_factor * unit;
        let inner = NONCOOP_FLOOR_FACTOR * unit;
        let mut near = (cfg.near_field_factor * unit).min(outer);
        if let Guard::Fixed(r) = guard {
            near = near.max(4.0 * r).min(outer.max(4.0 * r));
        }
        let expected = lam * PI * near * near;
        if expected > DEFAULT_POINT_CAP {
            return Err(Error::SamplingBudget {
                expected,
                cap: DEFAULT_POINT_CAP,
            });
        }
        let (far_mean, far_var) = if outer > near {
            (
                annulus_cumulant(1, lam, params.alpha_c, near, outer),
                annulus_cumulant(2, lam, params.alpha_c, near, outer),
            )
        } else {
            (0.0, 0.0)
        };
        Ok(Self {
            density: lam,
            half_alpha: params.alpha_c / 2.0,
            inner_sq: inner * inner,
            near_sq: near * near,
            guard,
            far_mean,
            far_sd: far_var.sqrt(),
        })
    }

    #[inline]
    fn path_gain(&self, w_sq: f64) -> f64 {
        if self.half_alpha == 2.0 {
            1.0 / (w_sq * w_sq)
        } else {
            w_sq.powf(-self.half_alpha)
        }
    }

    /// One interference draw. `field` supplies the point pattern and marks,
    /// `far` the residual beyond the simulated disk.
    pub fn draw(&self, field: &mut SimRng, far: &mut SimRng, scratch: &mut Vec<(f64, f64)>) -> f64 {
        let mean = self.density * PI * (self.near_sq - self.inner_sq);
        let n = poisson_count(mean, field);
        let near_sum = match self.guard {
            Guard::Floor | Guard::Fixed(_) => {
                let guard_sq = match self.guard {
                    Guard::Fixed(r) => r * r,
                    _ => 0.0,
                };
                let mut s = 0.0;
                for _ in 0..n {
                    let w_sq = radial_sq(self.inner_sq, self.near_sq, field);
                    let g: f64 = Exp1.sample(field);
                    if w_sq >= guard_sq {
                        s += g * self.path_gain(w_sq);
                    }
                }
                s
            }
            Guard::Kth(k) => {
                scratch.clear();
                for _ in 0..n {
                    let w_sq = radial_sq(self.inner_sq, self.near_sq, field);
                    let g: f64 = Exp1.sample(field);
                    scratch.push((w_sq, g));
                }
                if scratch.len() < k {
                    // r_{N_c+2} lies beyond the simulated disk
                    0.0
                } else {
                    let (_, kth, _) =
                        scratch.select_nth_unstable_by(k - 1, |a, b| a.0.total_cmp(&b.0));
                    let guard_sq = kth.0;
                    scratch
                        .iter()
                        .filter(|(w_sq, _)| *w_sq >= guard_sq)
                        .map(|&(w_sq, g)| g * self.path_gain(w_sq))
                        .sum()
                }
            }
        };
        let z: f64 = StandardNormal.sample(far);
        near_sum + (self.far_mean + self.far_sd * z).max(0.0)
    }
}

fn chunk_streams(seed: u64, chunk: u64) -> (SimRng, SimRng, SimRng) {
    (
        rng::stream(seed, chunk * 4 + STREAM_FIELD),
        rng::stream(seed, chunk * 4 + STREAM_FAR),
        rng::stream(seed, chunk * 4 + STREAM_LINK),
    )
}

fn chunk_ranges(trials: u64) -> Vec<(u64, u64)> {
    let chunks = trials.div_ceil(CHUNK_TRIALS);
    (0..chunks)
        .map(|c| (c, CHUNK_TRIALS.min(trials - c * CHUNK_TRIALS)))
        .collect()
}

impl ShotNoiseSampler {
    /// `trials` draws from the chunked streams of `seed`, in a fixed order.
    pub fn sample_batch(&self, trials: u64, seed: u64) -> Vec<f64> {
        let parts: Vec<Vec<f64>> = chunk_ranges(trials)
            .into_par_iter()
            .map(|(chunk, len)| {
                let (mut field, mut far, _) = chunk_streams(seed, chunk);
                let mut scratch = Vec::new();
                (0..len)
                    .map(|_| self.draw(&mut field, &mut far, &mut scratch))
                    .collect()
            })
            .collect();
        parts.concat()
    }
}

/// A single interference realisation for the given seed.
pub fn sample_interference(
    params: &NetworkParams,
    cfg: &McConfig,
    cooperative: bool,
    seed: u64,
) -> Result<f64> {
    let sampler = ShotNoiseSampler::new(params, cfg, cooperative)?;
    let (mut field, mut far, _) = chunk_streams(seed, 0);
    Ok(sampler.draw(&mut field, &mut far, &mut Vec::new()))
}

/// `cfg.trials` interference realisations, in a fixed order.
pub fn sample_interference_batch(
    params: &NetworkParams,
    cfg: &McConfig,
    cooperative: bool,
) -> Result<Vec<f64>> {
    let sampler = ShotNoiseSampler::new(params, cfg, cooperative)?;
    Ok(sampler.sample_batch(cfg.trials, cfg.seed))
}

/// Fraction of draws strictly above each grid point.
pub fn empirical_ccdf(draws: &[f64], grid: &[f64]) -> Result<Vec<f64>> {
    if draws.is_empty() {
        return Err(Error::domain("empirical_ccdf", "no draws"));
    }
    let mut sorted = draws.to_vec();
    sorted.sort_unstable_by(f64::total_cmp);
    let n = sorted.len() as f64;
    Ok(grid
        .iter()
        .map(|&x| {
            let at_or_below = sorted.partition_point(|&v| v <= x);
            (sorted.len() - at_or_below) as f64 / n
        })
        .collect())
}

/// Sup-norm gap between an empirical curve and a model CCDF on the same grid.
pub fn ks_distance<F>(grid: &[f64], empirical: &[f64], mut model_ccdf: F) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    if grid.len() != empirical.len() {
        return Err(Error::domain(
            "ks_distance",
            "grid and curve lengths differ",
        ));
    }
    let mut worst: f64 = 0.0;
    for (&x, &e) in grid.iter().zip(empirical) {
        worst = worst.max((e - model_ccdf(x)?).abs());
    }
    Ok(worst)
}

/// Sample mean of e^{jωI} at each frequency.
pub fn empirical_cf(draws: &[f64], omegas: &[f64]) -> Vec<Complex64> {
    let n = draws.len() as f64;
    omegas
        .par_iter()
        .map(|&w| {
            let (mut re, mut im) = (0.0, 0.0);
            for &x in draws {
                let (s, c) = (w * x).sin_cos();
                re += c;
                im += s;
            }
            Complex64::new(re / n, im / n)
        })
        .collect()
}

/// Empirical P{I > η} for cooperative interference.
pub fn mc_false_alarm_rate(params: &NetworkParams, eta: f64, cfg: &McConfig) -> Result<McEstimate> {
    if !(eta > 0.0) {
        return Err(Error::domain("mc_false_alarm_rate", "eta must be positive"));
    }
    let draws = sample_interference_batch(params, cfg, true)?;
    let hits = draws.iter().filter(|&&x| x > eta).count() as u64;
    Ok(McEstimate::binomial(hits, cfg.trials, 1.0, cfg.seed))
}

/// λ_B K P{NM γ_r > T_r}, estimated for several thresholds on one set of trials.
pub fn mc_ardcp_sweep(
    params: &NetworkParams,
    t_rs: &[f64],
    cfg: &McConfig,
) -> Result<Vec<McEstimate>> {
    let sampler = ShotNoiseSampler::new(params, cfg, true)?;
    let lam = params.lambda_b;
    let dh_sq = params.delta_h_r().powi(2);
    let gain = params.processing_gain() * params.sir_constant();
    let per_chunk: Vec<Vec<u64>> = chunk_ranges(cfg.trials)
        .into_par_iter()
        .map(|(chunk, len)| {
            let (mut field, mut far, mut link) = chunk_streams(cfg.seed, chunk);
            let mut scratch = Vec::new();
            let mut hits = vec![0u64; t_rs.len()];
            for _ in 0..len {
                let u: f64 = 1.0 - link.random::<f64>();
                let r1_sq = -u.ln() / (PI * lam);
                let g_rs: f64 = Exp1.sample(&mut link);
                let interference = sampler.draw(&mut field, &mut far, &mut scratch);
                let d_sq = r1_sq + dh_sq;
                let signal = gain * d_sq.powf(-params.alpha_r) * g_rs;
                for (h, &t) in hits.iter_mut().zip(t_rs) {
                    if signal > t * interference {
                        *h += 1;
                    }
                }
            }
            hits
        })
        .collect();
    let scale = lam * f64::from(params.k_targets);
    Ok(t_rs
        .iter()
        .enumerate()
        .map(|(i, _)| {
            let hits = per_chunk.iter().map(|h| h[i]).sum();
            McEstimate::binomial(hits, cfg.trials, scale, cfg.seed)
        })
        .collect())
}

/// Monte Carlo ARDCP at a single threshold.
pub fn mc_ardcp(params: &NetworkParams, t_r: f64, cfg: &McConfig) -> Result<McEstimate> {
    if t_r == 0.0 {
        params.validate()?;
        return Ok(McEstimate {
            value: params.lambda_b * f64::from(params.k_targets),
            std_error: 0.0,
            trials: cfg.trials,
            seed: cfg.seed,
        });
    }
    Ok(mc_ardcp_sweep(params, &[t_r], cfg)?[0])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(trials: u64, seed: u64) -> McConfig {
        McConfig {
            trials,
            seed,
            ..Default::default()
        }
    }

    #[test]
    fn empirical_ccdf_edges() {
        let d = [1.0, 2.0, 3.0];
        assert_eq!(empirical_ccdf(&d, &[0.5, 3.5]).unwrap(), vec![1.0, 0.0]);
        assert_eq!(empirical_ccdf(&d, &[2.0]).unwrap(), vec![1.0 / 3.0]);
        assert!(empirical_ccdf(&[], &[1.0]).is_err());
    }

    #[test]
    fn ks_examples() {
        let grid = [1.0, 2.0, 3.0];
        let curve = [0.9, 0.5, 0.1];
        assert_eq!(
            ks_distance(&grid, &curve, |x| Ok([0.9, 0.5, 0.1][x as usize - 1])).unwrap(),
            0.0
        );
        let shifted = ks_distance(&grid, &curve, |x| Ok(curve[x as usize - 1] - 0.05)).unwrap();
        assert!((shifted - 0.05).abs() < 1e-15);
    }

    #[test]
    fn empty_field_gives_negligible_interference() {
        let p = NetworkParams {
            lambda_b: 1e-14,
            ..Default::default()
        };
        let mut c = cfg(1000, 3);
        c.window_factor = 10.0;
        let draws = sample_interference_batch(&p, &c, true).unwrap();
        // every draw is ~κ₁ ~ πλ²-scale, i.e. numerically nothing
        assert!(draws.iter().all(|&x| x < 1e-20));
    }

    #[test]
    fn batch_is_deterministic() {
        let p = NetworkParams::default();
        let c = cfg(20_000, 99);
        let a = sample_interference_batch(&p, &c, true).unwrap();
        let b = sample_interference_batch(&p, &c, true).unwrap();
        assert_eq!(a, b);
        let single = sample_interference(&p, &c, true, 99).unwrap();
        assert_eq!(single.to_bits(), a[0].to_bits());
    }

    #[test]
    fn deterministic_under_any_thread_count() {
        let p = NetworkParams::default();
        let c = cfg(40_000, 5);
        let base = mc_ardcp(&p, 1e3, &c).unwrap();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(3)
            .build()
            .unwrap();
        let other = pool.install(|| mc_ardcp(&p, 1e3, &c).unwrap());
        assert_eq!(base, other);
    }

    #[test]
    fn zero_threshold_is_exact() {
        let p = NetworkParams::default();
        let e = mc_ardcp(&p, 0.0, &cfg(1000, 1)).unwrap();
        assert_eq!(e.value, p.lambda_b);
        assert_eq!(e.std_error, 0.0);
    }

    #[test]
    fn nested_thresholds_decrease() {
        let p = NetworkParams::default();
        let est = mc_ardcp_sweep(&p, &[1.0, 10.0, 100.0], &cfg(20_000, 8)).unwrap();
        assert!(est[0].value >= est[1].value && est[1].value >= est[2].value);
    }

    #[test]
    fn false_alarm_edges() {
        let p = NetworkParams::default();
        let c = cfg(5_000, 2);
        assert!(mc_false_alarm_rate(&p, 1e-300, &c).unwrap().value > 0.999);
        assert!(mc_false_alarm_rate(&p, 0.0, &c).is_err());
    }

    #[test]
    fn config_limits() {
        let p = NetworkParams::default();
        let mut c = cfg(999, 0);
        assert!(sample_interference_batch(&p, &c, true).is_err());
        c.trials = 1000;
        c.window_factor = 5.0;
        assert!(sample_interference_batch(&p, &c, true).is_err());
    }

    #[test]
    fn far_field_cumulants() {
        // ∫_1^∞ 2π w^{-3} dw = π and ∫_1^∞ 2π·2 w^{-7} dw = 2π/3 at λ = 1, α = 4
        assert!((annulus_cumulant(1, 1.0, 4.0, 1.0, f64::INFINITY) - PI).abs() < 1e-14);
        assert!((annulus_cumulant(2, 1.0, 4.0, 1.0, f64::INFINITY) - 2.0 * PI / 3.0).abs() < 1e-14);
    }
}
