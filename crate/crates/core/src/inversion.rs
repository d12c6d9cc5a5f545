//! Distribution functions recovered from characteristic functions by
//! Gil-Pelaez inversion, and quantiles by bracketed bisection.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quadrature::Integrator;

/// Anything with a characteristic function E[e^{jωX}] of a real law.
pub trait CharacteristicFunction {
    fn cf(&self, omega: f64) -> Complex64;

    /// Rough location of the bulk of the law, used to seed quantile brackets.
    fn typical_scale(&self) -> f64 {
        1.0
    }
}

impl<F: Fn(f64) -> Complex64> CharacteristicFunction for F {
    fn cf(&self, omega: f64) -> Complex64 {
        self(omega)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InversionConfig {
    /// Target accuracy of the returned probability.
    pub quad_rel_tol: f64,
    /// Fixed truncation of the frequency integral; chosen per point when `None`.
    pub omega_max: Option<f64>,
    pub max_subdivisions: usize,
    /// Relative width at which quantile bisection stops.
    pub quantile_tol: f64,
}

impl Default for InversionConfig {
    fn default() -> Self {
        Self {
            quad_rel_tol: 1e-8,
            omega_max: None,
            max_subdivisions: 10_000,
            quantile_tol: 1e-10,
        }
    }
}

/// Periods of e^{−jωx} allowed before the frequency range is cut off for
/// laws whose CF does not decay (point masses).
const MAX_PERIODS: f64 = 4000.0;
/// Smallest frequency, relative to 1/x, at which the integral starts.
const LOW_DECADES: i32 = 14;
/// Excursion outside [0, 1] that is reported rather than silently clamped.
const CLAMP_WARN: f64 = 1e-4;

fn omega_cutoff<C: CharacteristicFunction + ?Sized>(
    model: &C,
    x: f64,
    cfg: &InversionConfig,
) -> f64 {
    if let Some(w) = cfg.omega_max {
        return w;
    }
    let cap = MAX_PERIODS * PI / x;
    let mut w = 1.0 / x;
    while w < cap {
        if model.cf(w).norm() < cfg.quad_rel_tol && model.cf(2.0 * w).norm() < cfg.quad_rel_tol {
            return w;
        }
        w *= 2.0;
    }
    cap
}

fn panel_breaks(x: f64, omega_max: f64) -> Vec<f64> {
    let mut breaks = vec![0.0];
    let unit = 1.0 / x;
    for k in (0..=LOW_DECADES).rev() {
        let b = unit * 10f64.powi(-k);
        if b >= omega_max {
            break;
        }
        breaks.push(b);
    }
    let start = *breaks.last().unwrap();
    let span = omega_max - start;
    if span > 0.0 {
        let n = ((span * x / PI).ceil() as usize).clamp(1, MAX_PERIODS as usize);
        let width = span / n as f64;
        for i in 1..n {
            breaks.push(start + width * i as f64);
        }
        breaks.push(omega_max);
    }
    breaks
}

/// Unclamped Gil-Pelaez value P{X > x} = ½ + (1/π)∫₀^∞ Im[e^{−jωx}φ(ω)]/ω dω.
pub fn gil_pelaez_raw<C: CharacteristicFunction + ?Sized>(
    model: &C,
    x: f64,
    cfg: &InversionConfig,
) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(
            "ccdf_from_cf",
            format!("x = {x} must be positive and finite"),
        ));
    }
    let omega_max = omega_cutoff(model, x, cfg);
    let breaks = panel_breaks(x, omega_max);
    let integrand = |w: f64| {
        if w == 0.0 {
            return 0.0;
        }
        let rot = Complex64::new((w * x).cos(), -(w * x).sin());
        (rot * model.cf(w)).im / w
    };
    let integrator = Integrator {
        abs_tol: cfg.quad_rel_tol * PI,
        rel_tol: cfg.quad_rel_tol,
        max_subdivisions: cfg.max_subdivisions,
    };
    let r = integrator.integrate(integrand, &breaks)?;
    Ok(0.5 + r.value / PI)
}

/// P{X > x}, clamped to [0, 1].
pub fn ccdf_from_cf<C: CharacteristicFunction + ?Sized>(
    model: &C,
    x: f64,
    cfg: &InversionConfig,
) -> Result<f64> {
    let raw = gil_pelaez_raw(model, x, cfg)?;
    if !(-CLAMP_WARN..=1.0 + CLAMP_WARN).contains(&raw) {
        log::warn!("Gil-Pelaez value {raw:.3e} at x = {x:.3e} clamped to [0, 1]");
    }
    Ok(raw.clamp(0.0, 1.0))
}

/// Finds x with `ccdf(x) = p` for a non-increasing `ccdf` on (0, ∞).
pub fn invert_ccdf<F>(ccdf: F, p: f64, start: f64, rel_tol: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::domain(
            "quantile",
            format!("p = {p} must lie in (0, 1)"),
        ));
    }
    let start = if start > 0.0 && start.is_finite() {
        start
    } else {
        1.0
    };
    let mut lo = start;
    let mut hi = start;
    let mut tries = 0;
    while ccdf(hi)? > p {
        hi *= 2.0;
        tries += 1;
        if tries > 400 || !hi.is_finite() {
            return Err(Error::Bracket { p });
        }
    }
    tries = 0;
    while ccdf(lo)? < p {
        lo *= 0.5;
        tries += 1;
        if tries > 400 || lo == 0.0 {
            return Err(Error::Bracket { p });
        }
    }
    if lo == hi {
        // landed exactly on a bracket end
        return Ok(lo);
    }
    while (hi - lo) > rel_tol * hi {
        let mid = (lo * hi).sqrt();
        let mid = if mid <= lo || mid >= hi {
            0.5 * (lo + hi)
        } else {
            mid
        };
        if mid <= lo || mid >= hi {
            break;
        }
        if ccdf(mid)? > p {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Quantile of the upper tail: x with P{X > x} = p.
pub fn quantile_from_cf<C: CharacteristicFunction + ?Sized>(
    model: &C,
    p: f64,
    cfg: &InversionConfig,
) -> Result<f64> {
    invert_ccdf(
        |x| ccdf_from_cf(model, x, cfg),
        p,
        model.typical_scale(),
        cfg.quantile_tol,
    )
}
