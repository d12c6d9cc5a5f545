//! Flat `key = value` configuration. Keys are the `NetworkParams` field
//! names plus the `mc.*` and `inversion.*` namespaces. `#` starts a comment.

use std::fmt::Display;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::inversion::InversionConfig;
use crate::mc::{GuardMode, McConfig};
use crate::params::NetworkParams;

/// Keys the reader skips; manifests carry these alongside the config keys.
pub const MANIFEST_NAMESPACE: &str = "manifest.";

#[derive(Debug, Clone, PartialEq, Default)]
pub struct RunConfig {
    pub params: NetworkParams,
    pub mc: McConfig,
    /// Set only when a seed was given explicitly.
    pub seed: Option<u64>,
    pub inversion: InversionConfig,
}

fn parse<T: FromStr>(key: &str, value: &str) -> Result<T>
where
    T::Err: Display,
{
    value
        .parse()
        .map_err(|e| Error::Config(format!("{key} = {value:?}: {e}")))
}

pub fn guard_mode_name(mode: GuardMode) -> &'static str {
    match mode {
        GuardMode::FixedMean => "fixed_mean",
        GuardMode::PerRealization => "per_realization",
    }
}

pub fn parse_guard_mode(value: &str) -> Result<GuardMode> {
    match value {
        "fixed_mean" | "fixed-mean" => Ok(GuardMode::FixedMean),
        "per_realization" | "per-realization" => Ok(GuardMode::PerRealization),
        other => Err(Error::Config(format!(
            "mc.guard_mode = {other:?}: expected fixed_mean or per_realization"
        ))),
    }
}

impl RunConfig {
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let p = &mut self.params;
        match key {
            "lambda_b" => p.lambda_b = parse(key, value)?,
            "alpha_c" => p.alpha_c = parse(key, value)?,
            "alpha_r" => p.alpha_r = parse(key, value)?,
            "xi" => p.xi = parse(key, value)?,
            "n_t" => p.n_t = parse(key, value)?,
            "n_r" => p.n_r = parse(key, value)?,
            "h_b" => p.h_b = parse(key, value)?,
            "h_u" => p.h_u = parse(key, value)?,
            "h_t" => p.h_t = parse(key, value)?,
            "n_sub" => p.n_sub = parse(key, value)?,
            "m_sym" => p.m_sym = parse(key, value)?,
            "k_targets" => p.k_targets = parse(key, value)?,
            "n_c" => p.n_c = parse(key, value)?,
            "p_t" => p.p_t = parse(key, value)?,
            "f_c" => p.f_c = parse(key, value)?,
            "mc.trials" => self.mc.trials = parse(key, value)?,
            "mc.window_factor" => self.mc.window_factor = parse(key, value)?,
            "mc.near_field_factor" => self.mc.near_field_factor = parse(key, value)?,
            "mc.guard_mode" => self.mc.guard_mode = parse_guard_mode(value)?,
            "mc.seed" => {
                let seed = parse(key, value)?;
                self.mc.seed = seed;
                self.seed = Some(seed);
            }
            "inversion.quad_rel_tol" => self.inversion.quad_rel_tol = parse(key, value)?,
            "inversion.omega_max" => {
                self.inversion.omega_max = match value {
                    "auto" => None,
                    v => Some(parse(key, v)?),
                }
            }
            "inversion.max_subdivisions" => self.inversion.max_subdivisions = parse(key, value)?,
            "inversion.quantile_tol" => self.inversion.quantile_tol = parse(key, value)?,
            other => return Err(Error::Config(format!("unknown key {other:?}"))),
        }
        Ok(())
    }

    pub fn apply_text(&mut self, text: &str) -> Result<()> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!("line {}: expected key = value", lineno + 1))
            })?;
            let key = key.trim();
            if key.starts_with(MANIFEST_NAMESPACE) {
                continue;
            }
            self.set(key, value.trim())?;
        }
        Ok(())
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        let mut cfg = Self::default();
        cfg.apply_text(&text)?;
        Ok(cfg)
    }

    /// Every key with its resolved value, in a fixed order. Floats use the
    /// shortest representation that parses back to the same value.
    pub fn to_pairs(&self) -> Vec<(String, String)> {
        let p = &self.params;
        let mut out: Vec<(&str, String)> = vec![
            ("lambda_b", p.lambda_b.to_string()),
            ("alpha_c", p.alpha_c.to_string()),
            ("alpha_r", p.alpha_r.to_string()),
            ("xi", p.xi.to_string()),
            ("n_t", p.n_t.to_string()),
            ("n_r", p.n_r.to_string()),
            ("h_b", p.h_b.to_string()),
            ("h_u", p.h_u.to_string()),
            ("h_t", p.h_t.to_string()),
            ("n_sub", p.n_sub.to_string()),
            ("m_sym", p.m_sym.to_string()),
            ("k_targets", p.k_targets.to_string()),
            ("n_c", p.n_c.to_string()),
            ("p_t", p.p_t.to_string()),
            ("f_c", p.f_c.to_string()),
            ("mc.trials", self.mc.trials.to_string()),
            ("mc.window_factor", self.mc.window_factor.to_string()),
            (
                "mc.near_field_factor",
                self.mc.near_field_factor.to_string(),
            ),
            (
                "mc.guard_mode",
                guard_mode_name(self.mc.guard_mode).to_string(),
            ),
        ];
        if let Some(seed) = self.seed {
            out.push(("mc.seed", seed.to_string()));
        }
        out.extend([
            (
                "inversion.quad_rel_tol",
                self.inversion.quad_rel_tol.to_string(),
            ),
            (
                "inversion.omega_max",
                self.inversion
                    .omega_max
                    .map_or_else(|| "auto".to_string(), |w| w.to_string()),
            ),
            (
                "inversion.max_subdivisions",
                self.inversion.max_subdivisions.to_string(),
            ),
            (
                "inversion.quantile_tol",
                self.inversion.quantile_tol.to_string(),
            ),
        ]);
        out.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
    }
}
