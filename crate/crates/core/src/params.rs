//! Physical and deployment constants of the sensing network.
//!
//! Everything is stored in SI units (metres, m⁻², Hz, W). Base-station
//! density is converted from BSs/km² only at the command-line boundary.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};

/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Square metres per square kilometre.
pub const M2_PER_KM2: f64 = 1.0e6;

/// Network model constants shared by every analytical and simulated quantity.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkParams {
    /// Base-station density, m⁻².
    pub lambda_b: f64,
    /// Path-loss exponent of the BS-to-BS interference links.
    pub alpha_c: f64,
    /// Path-loss exponent of the sensing link (round trip enters as d^(−2α_r)).
    pub alpha_r: f64,
    /// Radar cross-section, m².
    pub xi: f64,
    pub n_t: u32,
    pub n_r: u32,
    /// BS height, m.
    pub h_b: f64,
    /// Communication-user height, m.
    pub h_u: f64,
    /// Sensing-target height, m.
    pub h_t: f64,
    /// Subcarriers per coherent processing interval.
    pub n_sub: u32,
    /// OFDM symbols per coherent processing interval.
    pub m_sym: u32,
    /// Sensed targets per BS.
    pub k_targets: u32,
    /// Cooperating neighbours; the cluster holds `n_c + 1` BSs.
    pub n_c: u32,
    /// Transmit power, W.
    pub p_t: f64,
    /// Carrier frequency, Hz.
    pub f_c: f64,
}

impl Default for NetworkParams {
    fn default() -> Self {
        Self {
            lambda_b: 1.0e-5,
            alpha_c: 4.0,
            alpha_r: 2.0,
            xi: 1.0,
            n_t: 16,
            n_r: 16,
            h_b: 25.0,
            h_u: 1.5,
            h_t: 100.0,
            n_sub: 64,
            m_sym: 16,
            k_targets: 1,
            n_c: 3,
            p_t: 1.0,
            f_c: 3.5e9,
        }
    }
}

/// One violated invariant, naming the offending field.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub field: &'static str,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

impl NetworkParams {
    /// Returns every violated invariant; an empty list means the parameters are usable.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut push = |field: &'static str, message: &str| {
            out.push(Violation {
                field,
                message: message.to_string(),
            })
        };

        if !(self.alpha_c > 2.0) {
            push("alpha_c", "alpha_c must exceed 2");
        }
        if !(self.alpha_r > 0.0) {
            push("alpha_r", "alpha_r must be positive");
        }
        if !(self.lambda_b > 0.0) || !self.lambda_b.is_finite() {
            push("lambda_b", "density must be positive and finite");
        }
        if !(self.xi > 0.0) {
            push("xi", "radar cross-section must be positive");
        }
        if !(self.p_t > 0.0) {
            push("p_t", "transmit power must be positive");
        }
        if !(self.f_c > 0.0) {
            push("f_c", "carrier frequency must be positive");
        }
        for (field, v) in [
            ("n_t", self.n_t),
            ("n_r", self.n_r),
            ("n_sub", self.n_sub),
            ("m_sym", self.m_sym),
            ("k_targets", self.k_targets),
        ] {
            if v == 0 {
                push(field, "count must be at least 1");
            }
        }
        if !(self.h_u > 0.0) {
            push("h_u", "heights must be positive");
        }
        if !(self.h_b > self.h_u) {
            push("h_b", "h_B > h_U required");
        }
        if !(self.h_t > self.h_b) {
            push("h_t", "h_T > h_B required");
        }
        out
    }

    pub fn validate(&self) -> Result<()> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidParams(v))
        }
    }

    /// Vertical BS-to-target separation Δh_r = h_T − h_B.
    pub fn delta_h_r(&self) -> f64 {
        self.h_t - self.h_b
    }

    /// Carrier wavelength, derived from `f_c`.
    pub fn lambda_c(&self) -> f64 {
        SPEED_OF_LIGHT / self.f_c
    }

    /// Periodogram processing gain N·M.
    pub fn processing_gain(&self) -> f64 {
        f64::from(self.n_sub) * f64::from(self.m_sym)
    }

    /// Deterministic numerator constant of the sensing SIR, ξ·N_r/(4π).
    pub fn sir_constant(&self) -> f64 {
        self.xi * f64::from(self.n_r) / (4.0 * PI)
    }

    /// 3D BS-to-target distance for horizontal separation `r_1`.
    pub fn link_distance(&self, r_1: f64) -> f64 {
        r_1.hypot(self.delta_h_r())
    }

    /// Factor mapping the normalised interference threshold η onto the
    /// received-power threshold η′ = η·P_t·λ_c²/(4π)².
    pub fn power_normalization(&self) -> f64 {
        let lc = self.lambda_c();
        self.p_t * lc * lc / (16.0 * PI * PI)
    }

    pub fn lambda_b_per_km2(&self) -> f64 {
        self.lambda_b * M2_PER_KM2
    }

    /// Guard order N_c + 2: the nearest BS outside the cooperative cluster.
    pub fn guard_order(&self) -> u32 {
        self.n_c + 2
    }

    /// Interference exponent 2/α_c shared by the stable and truncated-stable laws.
    pub fn interference_exponent(&self) -> f64 {
        2.0 / self.alpha_c
    }
}
