//! Analytical laws of the aggregated sensing interference
//! I = Σ w_i^(−α_c)·g_i over PPP interferers with Exp(1) marks.
//!
//! * Non-cooperative (no guard): a totally right-skewed stable law.
//! * Cooperative (guard radius r_c): a truncated-stable law whose first two
//!   cumulants match the Campbell cumulants of the guarded shot noise.
//! * Strongest-interferer approximation (SIA): the law of the largest term.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::inversion::{self, CharacteristicFunction, InversionConfig};
use crate::params::NetworkParams;
use crate::point_field::expected_kth_distance;
use crate::specials::{gamma_fn, sinc_n, upper_incomplete_gamma};

/// S(α, β, c, μ) in the (α, β, c, μ) parametrisation with phase correction Φ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StableParams {
    pub alpha: f64,
    pub beta: f64,
    pub c: f64,
    pub mu: f64,
}

impl StableParams {
    pub fn new(alpha: f64, beta: f64, c: f64, mu: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 2.0) {
            return Err(Error::domain(
                "StableParams",
                format!("alpha = {alpha} outside (0, 2]"),
            ));
        }
        if !(-1.0..=1.0).contains(&beta) {
            return Err(Error::domain(
                "StableParams",
                format!("beta = {beta} outside [-1, 1]"),
            ));
        }
        if !(c > 0.0) {
            return Err(Error::domain(
                "StableParams",
                format!("scale c = {c} must be positive"),
            ));
        }
        Ok(Self { alpha, beta, c, mu })
    }

    /// Phase correction Φ(α, ω).
    fn phase(&self, omega: f64) -> f64 {
        if self.alpha == 1.0 {
            -2.0 / PI * omega.abs().ln()
        } else {
            (PI * self.alpha / 2.0).tan()
        }
    }
}

/// Truncated-stable law with exponent α_t, scale c_t and tempering g_t.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TsdParams {
    pub alpha_t: f64,
    pub c_t: f64,
    pub g_t: f64,
}

impl TsdParams {
    pub fn new(alpha_t: f64, c_t: f64, g_t: f64) -> Result<Self> {
        if !(alpha_t > 0.0 && alpha_t < 1.0) {
            return Err(Error::domain(
                "TsdParams",
                format!("alpha_t = {alpha_t} outside (0, 1)"),
            ));
        }
        if !(c_t > 0.0 && g_t > 0.0) {
            return Err(Error::domain("TsdParams", "c_t and g_t must be positive"));
        }
        Ok(Self { alpha_t, c_t, g_t })
    }
}

/// Strongest-interferer model: density, path-loss exponent and guard radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SiaParams {
    pub density: f64,
    pub alpha_c: f64,
    pub guard_radius: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InterferenceModel {
    Stable(StableParams),
    Tsd(TsdParams),
    Sia(SiaParams),
}

/// E[r_{N_c+2}], the deterministic guard radius used by the cooperative models.
pub fn mean_guard_radius(params: &NetworkParams) -> Result<f64> {
    expected_kth_distance(params.lambda_b, params.guard_order())
}

/// n-th cumulant of the guarded shot noise by Campbell's theorem,
/// κ(n) = 2πλ r_c^(2−nα_c) Γ(1+n)/(nα_c − 2).
pub fn campbell_cumulant(n: u32, params: &NetworkParams, r_c: f64) -> Result<f64> {
    let na = f64::from(n) * params.alpha_c;
    if n == 0 || !(na > 2.0) {
        return Err(Error::domain(
            "campbell_cumulant",
            format!("n·alpha_c = {na} must exceed 2 (divergent cumulant)"),
        ));
    }
    if !(r_c > 0.0) {
        return Err(Error::domain(
            "campbell_cumulant",
            format!("r_c = {r_c} must be positive"),
        ));
    }
    let nf = f64::from(n);
    Ok(2.0 * PI * params.lambda_b * r_c.powf(2.0 - na) * gamma_fn(1.0 + nf)? / (na - 2.0))
}

/// Stable law of the unguarded interference: α = 2/α_c, β = 1,
/// c = λπ/sinc(1/α_c), μ = 0.
pub fn stable_params_noncoop(params: &NetworkParams) -> Result<StableParams> {
    params.validate()?;
    let c = params.lambda_b * PI / sinc_n(1.0 / params.alpha_c);
    StableParams::new(params.interference_exponent(), 1.0, c, 0.0)
}

pub fn stable_cf(sp: &StableParams, omega: f64) -> Complex64 {
    if omega == 0.0 {
        return Complex64::new(1.0, 0.0);
    }
    let mag = sp.c * omega.abs().powf(sp.alpha);
    let skew = sp.beta * omega.signum() * sp.phase(omega);
    let exponent = Complex64::new(-mag, omega * sp.mu + mag * skew);
    exponent.exp()
}

/// Truncated-stable parameters from matching κ(1), κ(2) of the guarded
/// interference, with the exponent fixed at 2/α_c.
pub fn tsd_params_coop(params: &NetworkParams, r_c: f64) -> Result<TsdParams> {
    params.validate()?;
    let k1 = campbell_cumulant(1, params, r_c)?;
    let k2 = campbell_cumulant(2, params, r_c)?;
    let alpha = params.interference_exponent();
    let g = k1 * (1.0 - alpha) / k2;
    let c = -k1 / (gamma_fn(-alpha)? * alpha * g.powf(alpha - 1.0));
    TsdParams::new(alpha, c, g)
}

/// (1 − jω/g)^α − 1 without cancellation near ω = 0 (principal branch).
fn tempered_bracket(alpha: f64, g: f64, omega: f64) -> Complex64 {
    let u = omega / g;
    let log_re = 0.5 * (u * u).ln_1p();
    let log_im = (-u).atan();
    let (re, im) = (alpha * log_re, alpha * log_im);
    let e = re.exp();
    let half = 0.5 * im;
    Complex64::new(
        re.exp_m1() * im.cos() - 2.0 * half.sin() * half.sin(),
        e * im.sin(),
    )
}

pub fn tsd_cf(tp: &TsdParams, omega: f64) -> Complex64 {
    if omega == 0.0 {
        return Complex64::new(1.0, 0.0);
    }
    let a = tp.alpha_t;
    // c Γ(−α) [(g − jω)^α − g^α] = c Γ(−α) g^α [(1 − jω/g)^α − 1]
    let pref = tp.c_t * gamma_fn(-a).unwrap_or(f64::NAN) * tp.g_t.powf(a);
    (tempered_bracket(a, tp.g_t, omega) * pref).exp()
}

/// Closed-form n-th cumulant of the truncated-stable law.
pub fn tsd_cumulant(tp: &TsdParams, n: u32) -> f64 {
    let a = tp.alpha_t;
    let falling: f64 = (0..n).map(|i| a - f64::from(i)).product();
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    sign * tp.c_t * gamma_fn(-a).unwrap_or(f64::NAN) * tp.g_t.powf(a - f64::from(n)) * falling
}

/// P{max_i w_i^(−α_c) g_i > η} for PPP interferers beyond the guard radius.
pub fn sia_ccdf(eta: f64, density: f64, alpha_c: f64, r_c: f64) -> Result<f64> {
    if !(eta > 0.0) {
        return Err(Error::domain(
            "sia_ccdf",
            format!("eta = {eta} must be positive"),
        ));
    }
    if eta.is_infinite() {
        return Ok(0.0);
    }
    let delta = 2.0 / alpha_c;
    let tail = upper_incomplete_gamma(delta, eta * r_c.max(0.0).powf(alpha_c))?;
    let mean_exceed = 2.0 * PI * density / alpha_c * eta.powf(-delta) * tail;
    Ok((-(-mean_exceed).exp_m1()).clamp(0.0, 1.0))
}

impl CharacteristicFunction for StableParams {
    fn cf(&self, omega: f64) -> Complex64 {
        stable_cf(self, omega)
    }

    fn typical_scale(&self) -> f64 {
        self.c.powf(1.0 / self.alpha)
    }
}

impl CharacteristicFunction for TsdParams {
    fn cf(&self, omega: f64) -> Complex64 {
        tsd_cf(self, omega)
    }

    fn typical_scale(&self) -> f64 {
        tsd_cumulant(self, 1)
    }
}

impl InterferenceModel {
    /// Truncated-stable model of the cooperative interference at guard radius `r_c`.
    pub fn cooperative_tsd(params: &NetworkParams, r_c: f64) -> Result<Self> {
        Ok(Self::Tsd(tsd_params_coop(params, r_c)?))
    }

    pub fn noncooperative_stable(params: &NetworkParams) -> Result<Self> {
        Ok(Self::Stable(stable_params_noncoop(params)?))
    }

    pub fn strongest_interferer(params: &NetworkParams, r_c: f64) -> Self {
        Self::Sia(SiaParams {
            density: params.lambda_b,
            alpha_c: params.alpha_c,
            guard_radius: r_c,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Stable(_) => "stable",
            Self::Tsd(_) => "tsd",
            Self::Sia(_) => "sia",
        }
    }

    /// P{I > x} under this model.
    pub fn ccdf(&self, x: f64, cfg: &InversionConfig) -> Result<f64> {
        match self {
            Self::Stable(sp) => inversion::ccdf_from_cf(sp, x, cfg),
            Self::Tsd(tp) => inversion::ccdf_from_cf(tp, x, cfg),
            Self::Sia(s) => sia_ccdf(x, s.density, s.alpha_c, s.guard_radius),
        }
    }

    /// Threshold x with P{I > x} = p.
    pub fn upper_quantile(&self, p: f64, cfg: &InversionConfig) -> Result<f64> {
        match self {
            Self::Stable(sp) => inversion::quantile_from_cf(sp, p, cfg),
            Self::Tsd(tp) => inversion::quantile_from_cf(tp, p, cfg),
            Self::Sia(s) => {
                // start from the unguarded closed-form inverse
                let delta = 2.0 / s.alpha_c;
                let l = -(-p).ln_1p();
                let start =
                    (2.0 * PI * s.density / s.alpha_c * gamma_fn(delta)? / l).powf(1.0 / delta);
                inversion::invert_ccdf(
                    |x| sia_ccdf(x, s.density, s.alpha_c, s.guard_radius),
                    p,
                    start,
                    cfg.quantile_tol,
                )
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(lambda_b: f64, alpha_c: f64) -> NetworkParams {
        NetworkParams {
            lambda_b,
            alpha_c,
            ..Default::default()
        }
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn campbell_examples() {
        let p = params(1.0 / (2.0 * PI), 4.0);
        assert!(rel(campbell_cumulant(1, &p, 1.0).unwrap(), 0.5) < 1e-14);
        assert!(rel(campbell_cumulant(2, &p, 1.0).unwrap(), 1.0 / 3.0) < 1e-14);
        assert_eq!(campbell_cumulant(1, &p, f64::INFINITY).unwrap(), 0.0);
        let shallow = params(1e-4, 2.0 + 1e-9);
        assert!(campbell_cumulant(2, &shallow, 1.0).is_ok());
        let mut bad = params(1e-4, 4.0);
        bad.alpha_c = 1.5;
        assert!(campbell_cumulant(1, &bad, 1.0).is_err());
        assert!(campbell_cumulant(1, &p, 0.0).is_err());
    }

    #[test]
    fn stable_params_examples() {
        let sp = stable_params_noncoop(&params(1.0 / PI, 4.0)).unwrap();
        assert_eq!(sp.alpha, 0.5);
        assert_eq!(sp.beta, 1.0);
        assert_eq!(sp.mu, 0.0);
        assert!((sp.c - 1.0 / 0.900_316_316_157_106).abs() < 1e-12);
        assert!((sp.c - 1.110_721).abs() < 1e-6);
        let sp3 = stable_params_noncoop(&params(1e-4, 3.0)).unwrap();
        assert!((sp3.alpha - 2.0 / 3.0).abs() < 1e-15);
        assert!(stable_params_noncoop(&params(1e-4, 2.0)).is_err());
    }

    #[test]
    fn stable_cf_examples() {
        let sp = StableParams::new(0.5, 1.0, 1.0, 0.0).unwrap();
        assert_eq!(stable_cf(&sp, 0.0), Complex64::new(1.0, 0.0));
        let v = stable_cf(&sp, 1.0);
        let e = (-1.0f64).exp();
        assert!((v.re - e * 1f64.cos()).abs() < 1e-12);
        assert!((v.im - e * 1f64.sin()).abs() < 1e-12);
        assert!((v.re - 0.19877).abs() < 1e-5 && (v.im - 0.30956).abs() < 1e-5);
        for w in [0.1, 1.0, 10.0] {
            assert!((stable_cf(&sp, -w) - stable_cf(&sp, w).conj()).norm() < 1e-15);
        }
        let cauchy = StableParams::new(1.0, 0.5, 2.0, 0.3).unwrap();
        for w in [0.1, 1.0, 10.0] {
            assert!((stable_cf(&cauchy, -w) - stable_cf(&cauchy, w).conj()).norm() < 1e-15);
        }
    }

    #[test]
    fn tsd_matching_example() {
        let p = params(1.0 / (2.0 * PI), 4.0);
        let tp = tsd_params_coop(&p, 1.0).unwrap();
        assert_eq!(tp.alpha_t, 0.5);
        assert!(rel(tp.g_t, 0.75) < 1e-14);
        let expect_c = -0.5 / (-2.0 * PI.sqrt() * 0.5 * 0.75f64.powf(-0.5));
        assert!(rel(tp.c_t, expect_c) < 1e-13);
        assert!((tp.c_t - 0.244_301).abs() < 1e-6);
    }

    #[test]
    fn tsd_alpha_fixed_by_path_loss() {
        for (lambda, rc) in [(1e-6, 10.0), (1e-3, 0.5), (2.0, 3.0)] {
            let tp = tsd_params_coop(&params(lambda, 4.0), rc).unwrap();
            assert_eq!(tp.alpha_t, 0.5);
        }
    }

    #[test]
    fn tsd_cumulant_roundtrip() {
        for (lambda, ac, rc) in [
            (1.0 / (2.0 * PI), 4.0, 1.0),
            (1e-4, 3.5, 123.0),
            (1e-6, 5.0, 900.0),
        ] {
            let p = params(lambda, ac);
            let tp = tsd_params_coop(&p, rc).unwrap();
            for n in 1..=2 {
                let k = campbell_cumulant(n, &p, rc).unwrap();
                assert!(rel(tsd_cumulant(&tp, n), k) < 1e-10);
            }
        }
    }

    #[test]
    fn tsd_cf_basics() {
        let tp = tsd_params_coop(&params(1.0 / (2.0 * PI), 4.0), 1.0).unwrap();
        assert_eq!(tsd_cf(&tp, 0.0), Complex64::new(1.0, 0.0));
        for w in [0.1, 1.0, 10.0, 100.0] {
            assert!(tsd_cf(&tp, w).norm() <= 1.0);
        }
    }

    /// Finite-difference oracle for the cumulants: κ(n) = j^(−n) dⁿ/dωⁿ ln φ(0).
    #[test]
    fn tsd_cumulants_match_finite_differences() {
        let tp = tsd_params_coop(&params(1.0 / (2.0 * PI), 4.0), 1.0).unwrap();
        let lnphi = |w: f64| tsd_cf(&tp, w).ln();
        let h = 1e-3;
        let d1 = (lnphi(h) - lnphi(-h)) / (2.0 * h);
        let d2 = (lnphi(h) - 2.0 * lnphi(0.0) + lnphi(-h)) / (h * h);
        let d3 = (lnphi(2.0 * h) - 2.0 * lnphi(h) + 2.0 * lnphi(-h) - lnphi(-2.0 * h))
            / (2.0 * h * h * h);
        // j^(-1) d1 = κ1, j^(-2) d2 = −d2 = κ2, j^(-3) d3 = j·d3 → κ3 = −Im(d3)
        assert!((d1.im - 0.5).abs() < 1e-6);
        assert!((-d2.re - 1.0 / 3.0).abs() < 1e-6);
        let k3 = tsd_cumulant(&tp, 3);
        assert!((-d3.im - k3).abs() / k3 < 1e-4, "{} vs {}", -d3.im, k3);
        // κ(3) = κ(2)(2 − α)/g = (1/3)(1.5)/0.75
        assert!((k3 - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn sia_limits() {
        assert_eq!(sia_ccdf(f64::INFINITY, 1e-4, 4.0, 10.0).unwrap(), 0.0);
        assert!(sia_ccdf(1e30, 1e-4, 4.0, 10.0).unwrap() < 1e-12);
        assert!(sia_ccdf(1e-30, 1e-4, 4.0, 0.0).unwrap() > 1.0 - 1e-9);
        assert!(sia_ccdf(0.0, 1e-4, 4.0, 0.0).is_err());
    }

    #[test]
    fn sia_quantile_roundtrip() {
        let m = InterferenceModel::Sia(SiaParams {
            density: 1e-4,
            alpha_c: 4.0,
            guard_radius: 50.0,
        });
        let cfg = InversionConfig::default();
        let q = m.upper_quantile(0.01, &cfg).unwrap();
        assert!((m.ccdf(q, &cfg).unwrap() - 0.01).abs() < 1e-9);
    }

    proptest::proptest! {
        #[test]
        fn sia_monotone(a in 1e-12f64..1e-6, b in 1e-12f64..1e-6) {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            let f = |x| sia_ccdf(x, 1e-4, 4.0, 60.0).unwrap();
            proptest::prop_assert!(f(lo) >= f(hi));
        }
    }
}
