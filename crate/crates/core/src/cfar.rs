//! False-alarm chain: frame-level CFAR → per-bin CFAR → interference
//! threshold η → SIR threshold T_r = η/E{I}.

use crate::error::{Error, Result};
use crate::interference::{campbell_cumulant, InterferenceModel};
use crate::inversion::InversionConfig;
use crate::params::NetworkParams;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CfarResult {
    pub p_frame: f64,
    pub p_bin: f64,
    /// Threshold on the normalised interference I.
    pub eta: f64,
    /// Threshold on received interference power, W.
    pub eta_prime: f64,
    /// E{I}, the first Campbell cumulant at the guard radius.
    pub mean_interference: f64,
    pub t_r: f64,
}

fn bins(n: u32, m: u32) -> Result<f64> {
    let nm = f64::from(n) * f64::from(m);
    if nm < 1.0 {
        return Err(Error::domain("cfar", "N·M must be at least 1"));
    }
    Ok(nm)
}

/// Per-bin false-alarm probability giving `p_frame` over N·M independent bins.
pub fn frame_to_bin(p_frame: f64, n: u32, m: u32) -> Result<f64> {
    if !(p_frame > 0.0 && p_frame < 1.0) {
        return Err(Error::domain(
            "frame_to_bin",
            format!("p_frame = {p_frame} outside (0, 1)"),
        ));
    }
    let nm = bins(n, m)?;
    Ok(-((-p_frame).ln_1p() / nm).exp_m1())
}

/// Frame-level false-alarm probability 1 − (1 − p_bin)^(NM).
pub fn bin_to_frame(p_bin: f64, n: u32, m: u32) -> Result<f64> {
    if !(0.0..=1.0).contains(&p_bin) {
        return Err(Error::domain(
            "bin_to_frame",
            format!("p_bin = {p_bin} outside [0, 1]"),
        ));
    }
    let nm = bins(n, m)?;
    Ok(-(nm * (-p_bin).ln_1p()).exp_m1())
}

/// Per-bin probability and interference threshold η. Defined for every
/// model, including the untruncated stable law.
pub fn resolve_eta(
    p_frame: f64,
    params: &NetworkParams,
    model: &InterferenceModel,
    cfg: &InversionConfig,
) -> Result<(f64, f64)> {
    let p_bin = frame_to_bin(p_frame, params.n_sub, params.m_sym)?;
    let eta = model.upper_quantile(p_bin, cfg)?;
    Ok((p_bin, eta))
}

/// Full chain for a cooperative model at guard radius `r_c`.
///
/// E{I} is evaluated once from the Campbell mean and reused for T_r. The
/// stable model is refused because its mean is infinite for 2/α_c < 1.
pub fn resolve_cfar(
    p_frame: f64,
    params: &NetworkParams,
    model: &InterferenceModel,
    r_c: f64,
    cfg: &InversionConfig,
) -> Result<CfarResult> {
    params.validate()?;
    if let InterferenceModel::Stable(sp) = model {
        return Err(Error::InfiniteMean { alpha: sp.alpha });
    }
    let mean_interference = campbell_cumulant(1, params, r_c)?;
    let (p_bin, eta) = resolve_eta(p_frame, params, model, cfg)?;
    Ok(CfarResult {
        p_frame,
        p_bin,
        eta,
        eta_prime: eta * params.power_normalization(),
        mean_interference,
        t_r: eta / mean_interference,
    })
}
