//! Area radar detection coverage probability (ARDCP) under a CFAR-derived
//! SIR threshold.

use std::f64::consts::PI;

use crate::error::Result;
use crate::interference::mean_guard_radius;
use crate::params::NetworkParams;
use crate::point_field::nearest_distance_pdf;
use crate::quadrature::Integrator;
use crate::specials::gauss_2f1;

/// How the link-level conditional coverage is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CoverageMode {
    /// The hypergeometric expression exactly as printed, clamped to [0, 1].
    AsPrinted,
    /// exp(−L) with L the PPP Laplace exponent of the guarded shot noise at q,
    /// i.e. P{g > q·I} for an Exp(1) echo gain.
    #[default]
    LaplaceCorrected,
}

/// q = 4π T_r d_1^(2α_r)/(N M N_r ξ).
pub fn q_factor(t_r: f64, d_1: f64, params: &NetworkParams) -> f64 {
    4.0 * PI * t_r * d_1.powf(2.0 * params.alpha_r)
        / (params.processing_gain() * f64::from(params.n_r) * params.xi)
}

/// ₂F₁(1, 1 − 2/α_c; 2 − 2/α_c; −q r̄^(−α_c)) weighted by 2π r̄^(2−α_c)/(α_c − 2).
fn hypergeometric_kernel(q: f64, r_guard: f64, params: &NetworkParams) -> Result<f64> {
    let ac = params.alpha_c;
    let delta = 2.0 / ac;
    let f = gauss_2f1(1.0, 1.0 - delta, 2.0 - delta, -q * r_guard.powf(-ac))?;
    Ok(2.0 * PI * r_guard.powf(2.0 - ac) / (ac - 2.0) * f)
}

/// Conditional coverage given the guard radius `r_guard` and link distance `d_1`.
pub fn coverage_at(
    t_r: f64,
    d_1: f64,
    r_guard: f64,
    params: &NetworkParams,
    mode: CoverageMode,
) -> Result<f64> {
    let q = q_factor(t_r, d_1, params);
    match mode {
        CoverageMode::LaplaceCorrected => {
            if q == 0.0 {
                return Ok(1.0);
            }
            let exponent = params.lambda_b * q * hypergeometric_kernel(q, r_guard, params)?;
            Ok((-exponent).exp())
        }
        CoverageMode::AsPrinted => {
            let raw = hypergeometric_kernel(q, r_guard, params)?;
            if !(0.0..=1.0).contains(&raw) {
                log::warn!("printed conditional coverage {raw:.4e} is not a probability; clamped");
            }
            Ok(raw.clamp(0.0, 1.0))
        }
    }
}

/// P{NM·γ_r > T_r | R_1 = r_1} with the guard radius fixed at E[r_{N_c+2}].
pub fn conditional_coverage(
    t_r: f64,
    r_1: f64,
    params: &NetworkParams,
    mode: CoverageMode,
) -> Result<f64> {
    params.validate()?;
    let r_guard = mean_guard_radius(params)?;
    coverage_at(t_r, params.link_distance(r_1), r_guard, params, mode)
}

/// Survival level of the nearest-distance law at which the integral is cut.
const WEIGHT_FLOOR: f64 = 1e-12;

/// Detected sensing targets per m²: λ_B K ∫ P{cov | r_1} f_{R_1}(r_1) dr_1.
pub fn ardcp(t_r: f64, params: &NetworkParams, mode: CoverageMode) -> Result<f64> {
    params.validate()?;
    let r_guard = mean_guard_radius(params)?;
    ardcp_with_guard(t_r, params, mode, r_guard)
}

pub fn ardcp_with_guard(
    t_r: f64,
    params: &NetworkParams,
    mode: CoverageMode,
    r_guard: f64,
) -> Result<f64> {
    let lam = params.lambda_b;
    let scale = lam * f64::from(params.k_targets);
    if t_r == 0.0 && mode == CoverageMode::LaplaceCorrected {
        return Ok(scale);
    }
    let sigma = 1.0 / (PI * lam).sqrt();
    let r_max = sigma * (-WEIGHT_FLOOR.ln()).sqrt();
    let mut breaks: Vec<f64> = [0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0]
        .iter()
        .map(|f| f * sigma)
        .collect();
    breaks.push(r_max);
    let integrator = Integrator {
        abs_tol: 0.0,
        rel_tol: 1e-7,
        max_subdivisions: 10_000,
    };
    // failures inside the integrand surface as NaN and then as a quadrature error
    let r = integrator.integrate(
        |r1| {
            coverage_at(t_r, params.link_distance(r1), r_guard, params, mode).unwrap_or(f64::NAN)
                * nearest_distance_pdf(r1, lam)
        },
        &breaks,
    )?;
    Ok(scale * r.value)
}
