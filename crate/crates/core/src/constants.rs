//! Physical constants in SI units (CODATA 2018 recommended values), with an
//! override mechanism for reproducibility pinning.

use std::f64::consts::PI;

use crate::error::Error;

/// Joules per MeV, from the exact SI elementary charge.
pub const JOULES_PER_MEV: f64 = 1.602_176_634e-13;

/// The constant set every computation in this workspace threads through.
///
/// `hbar` and `kappa` are derived quantities and are recomputed from `h`,
/// `newton_g`, and `c` on every call; they are never stored independently.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhysicalConstants {
    /// Speed of light in vacuum (m/s).
    pub c: f64,
    /// Planck constant (J s).
    pub h: f64,
    /// Charge of the electron (C), SIGNED: negative.
    pub e_electron: f64,
    /// Electron rest mass (kg).
    pub m_e: f64,
    /// Newtonian gravitational constant G (m^3 kg^-1 s^-2).
    pub newton_g: f64,
    /// Vacuum permittivity (F/m).
    pub epsilon0: f64,
}

/// CODATA 2018 values.
pub const CODATA: PhysicalConstants = PhysicalConstants {
    c: 299_792_458.0,
    h: 6.626_070_15e-34,
    e_electron: -1.602_176_634e-19,
    m_e: 9.109_383_701_5e-31,
    newton_g: 6.674_30e-11,
    epsilon0: 8.854_187_812_8e-12,
};

impl Default for PhysicalConstants {
    fn default() -> Self {
        CODATA
    }
}

impl PhysicalConstants {
    /// Reduced Planck constant, h / 2pi.
    pub fn hbar(&self) -> f64 {
        self.h / (2.0 * PI)
    }

    /// Einstein gravitational constant, 8 pi G / c^4.
    pub fn kappa(&self) -> f64 {
        8.0 * PI * self.newton_g / self.c.powi(4)
    }

    /// Magnitude of the elementary charge (C).
    pub fn elementary_charge(&self) -> f64 {
        self.e_electron.abs()
    }

    /// Converts a mass quoted in MeV/c^2 into kilograms.
    pub fn mev_to_kg(&self, mass_mev: f64) -> f64 {
        mass_mev * JOULES_PER_MEV / (self.c * self.c)
    }

    /// Converts a mass in kilograms into MeV/c^2.
    pub fn kg_to_mev(&self, mass_kg: f64) -> f64 {
        mass_kg * (self.c * self.c) / JOULES_PER_MEV
    }

    /// Parses a flat key-value override file on top of the CODATA baseline.
    ///
    /// Format: one `key = value` per line; `#` starts a comment. Valid keys
    /// are `c`, `h`, `e_electron`, `m_e`, `G`, `epsilon0`. The derived
    /// constants `hbar` and `kappa` cannot be overridden.
    pub fn with_overrides(text: &str) -> Result<Self, Error> {
        CODATA.apply_overrides(text)
    }

    /// Applies a key-value override file to this constant set.
    pub fn apply_overrides(&self, text: &str) -> Result<Self, Error> {
        let mut out = *self;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content.split_once('=').ok_or(Error::ConstantsOverride {
                line,
                reason: format!("expected `key = value`, got `{content}`"),
            })?;
            let key = key.trim();
            let value: f64 = value.trim().parse().map_err(|e| Error::ConstantsOverride {
                line,
                reason: format!("invalid number `{}`: {e}", value.trim()),
            })?;
            if !value.is_finite() {
                return Err(Error::ConstantsOverride {
                    line,
                    reason: format!("`{key}` must be finite"),
                });
            }
            match key {
                "c" => out.c = value,
                "h" => out.h = value,
                "e_electron" => out.e_electron = value,
                "m_e" => out.m_e = value,
                "G" => out.newton_g = value,
                "epsilon0" => out.epsilon0 = value,
                "hbar" | "kappa" => {
                    return Err(Error::ConstantsOverride {
                        line,
                        reason: format!("`{key}` is derived and cannot be overridden"),
                    })
                }
                other => {
                    return Err(Error::ConstantsOverride {
                        line,
                        reason: format!("unknown constant `{other}`"),
                    })
                }
            }
        }
        Ok(out)
    }
}
