//! Four-dimensional wave mechanics: plane-wave eigenfunctions, finite
//! superpositions, and the finite-difference operator estimates used to
//! verify the eigenstructure numerically.
//!
//! The field is a complex scalar. Every constructed plane wave satisfies the
//! dispersion relation omega = c |k|; states that deliberately violate it
//! (for detuning diagnostics) go through [`PlaneWave::with_omega`].
//! Evolution is exact through phases, so states are evaluated analytically
//! at arbitrary points and no field is ever stored on a grid.

mod composite;
mod residuals;

pub use composite::{boost_composite, composite_rest_mass, composite_state};
pub use residuals::{klein_gordon_residual, schrodinger_residual, wave_equation_residual};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::constants::PhysicalConstants;
use crate::error::Error;
use crate::kinematics::FourMomentum;
use crate::vec4::{Axis, Vector4};

/// A plane-wave eigenfunction amp * exp(i (k.x - omega t)).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlaneWave {
    k: Vector4,
    omega: f64,
    amplitude: Complex64,
}

impl PlaneWave {
    /// Builds a plane wave on the dispersion shell, omega = c |k|.
    pub fn new(
        k: Vector4,
        amplitude: Complex64,
        constants: &PhysicalConstants,
    ) -> Result<Self, Error> {
        if !k.is_finite() {
            return Err(Error::NonFinite {
                what: "wave vector",
            });
        }
        Self::with_omega(k, constants.c * k.norm(), amplitude)
    }

    /// Builds a plane wave with an explicit angular frequency. Off-shell
    /// frequencies are allowed here so residual operators can demonstrate
    /// that they detect dispersion violations.
    pub fn with_omega(k: Vector4, omega: f64, amplitude: Complex64) -> Result<Self, Error> {
        if !k.is_finite() || !omega.is_finite() {
            return Err(Error::NonFinite {
                what: "wave vector",
            });
        }
        if !amplitude.re.is_finite() || !amplitude.im.is_finite() {
            return Err(Error::NonFinite { what: "amplitude" });
        }
        Ok(PlaneWave {
            k,
            omega,
            amplitude,
        })
    }

    pub fn k(&self) -> Vector4 {
        self.k
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn amplitude(&self) -> Complex64 {
        self.amplitude
    }

    /// Momentum four-vector hbar k.
    pub fn momentum(&self, constants: &PhysicalConstants) -> FourMomentum {
        FourMomentum(self.k * constants.hbar())
    }

    /// Energy hbar omega.
    pub fn energy(&self, constants: &PhysicalConstants) -> f64 {
        constants.hbar() * self.omega
    }

    pub fn evaluate(&self, x: Vector4, t: f64) -> Complex64 {
        self.amplitude * Complex64::cis(self.k.dot(x) - self.omega * t)
    }
}

/// A finite superposition of plane waves.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct WaveState {
    components: Vec<PlaneWave>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentRecord {
    k_w: f64,
    k_x: f64,
    k_y: f64,
    k_z: f64,
    amplitude_re: f64,
    amplitude_im: f64,
}

impl WaveState {
    pub fn new(components: Vec<PlaneWave>) -> Self {
        WaveState { components }
    }

    pub fn components(&self) -> &[PlaneWave] {
        &self.components
    }

    /// Sum of the component values at (x, t); linear in the amplitudes.
    pub fn evaluate(&self, x: Vector4, t: f64) -> Complex64 {
        self.components.iter().map(|w| w.evaluate(x, t)).sum()
    }

    /// Total momentum four-vector, hbar times the summed wave vectors.
    pub fn total_momentum(&self, constants: &PhysicalConstants) -> FourMomentum {
        let k_sum = self
            .components
            .iter()
            .fold(Vector4::ZERO, |acc, w| acc + w.k);
        FourMomentum(k_sum * constants.hbar())
    }

    /// Total energy, hbar times the summed frequencies.
    pub fn total_energy(&self, constants: &PhysicalConstants) -> f64 {
        constants.hbar() * self.components.iter().map(|w| w.omega).sum::<f64>()
    }

    /// Largest |k| across components.
    pub fn max_wave_number(&self) -> f64 {
        self.components
            .iter()
            .map(|w| w.k.norm())
            .fold(0.0, f64::max)
    }

    /// Largest |omega| across components.
    pub fn max_frequency(&self) -> f64 {
        self.components
            .iter()
            .map(|w| w.omega.abs())
            .fold(0.0, f64::max)
    }

    /// Sum of amplitude magnitudes; the scale bound on |Psi| anywhere.
    pub fn amplitude_scale(&self) -> f64 {
        self.components.iter().map(|w| w.amplitude.norm()).sum()
    }

    /// Parses a JSON list of `{k_w, k_x, k_y, k_z, amplitude_re, amplitude_im}`
    /// components; frequencies come from the dispersion relation.
    pub fn from_json(text: &str, constants: &PhysicalConstants) -> Result<Self, Error> {
        let records: Vec<ComponentRecord> =
            serde_json::from_str(text).map_err(|e| Error::WaveStateFile(e.to_string()))?;
        let components = records
            .into_iter()
            .map(|r| {
                PlaneWave::new(
                    Vector4::new(r.k_w, r.k_x, r.k_y, r.k_z),
                    Complex64::new(r.amplitude_re, r.amplitude_im),
                    constants,
                )
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(WaveState::new(components))
    }

    pub fn to_json(&self) -> String {
        let records: Vec<ComponentRecord> = self
            .components
            .iter()
            .map(|w| ComponentRecord {
                k_w: w.k.w,
                k_x: w.k.x,
                k_y: w.k.y,
                k_z: w.k.z,
                amplitude_re: w.amplitude.re,
                amplitude_im: w.amplitude.im,
            })
            .collect();
        serde_json::to_string_pretty(&records).expect("component records serialize")
    }
}

/// Sampling lattice for the residual checks: per-axis spacings and counts,
/// a time step, and the corner the lattice grows from.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    /// Spacing along (w, x, y, z), meters.
    pub spacing: [f64; 4],
    /// Time step, seconds.
    pub dt: f64,
    /// Sample counts along (w, x, y, z).
    pub extents: [usize; 4],
    /// Lattice corner.
    pub origin: Vector4,
    /// Sampling time.
    pub t0: f64,
}

impl GridSpec {
    /// Minimum samples per sampled axis.
    pub const MIN_SAMPLES: usize = 5;
    /// Cap on the total sample count (17^4).
    pub const MAX_SAMPLES: usize = 83_521;

    pub fn isotropic(h: f64, dt: f64, samples: usize, origin: Vector4, t0: f64) -> Self {
        GridSpec {
            spacing: [h; 4],
            dt,
            extents: [samples; 4],
            origin,
            t0,
        }
    }

    /// Validates the axes a residual operator will actually sample.
    pub(crate) fn validate_axes(&self, axes: &[Axis], needs_dt: bool) -> Result<(), Error> {
        let mut total: usize = 1;
        for &axis in axes {
            let i = axis as usize;
            // NaN spacings must fail too, hence no `<= 0.0`
            if !(self.spacing[i].is_finite() && self.spacing[i] > 0.0) {
                return Err(Error::NonPositiveSpacing {
                    axis: axis.name(),
                    spacing: self.spacing[i],
                });
            }
            if self.extents[i] < Self::MIN_SAMPLES {
                return Err(Error::GridTooSmall {
                    axis: axis.name(),
                    samples: self.extents[i],
                    min: Self::MIN_SAMPLES,
                });
            }
            total = total.saturating_mul(self.extents[i]);
        }
        if total > Self::MAX_SAMPLES {
            return Err(Error::GridTooLarge {
                samples: total,
                max: Self::MAX_SAMPLES,
            });
        }
        if needs_dt && !(self.dt.is_finite() && self.dt > 0.0) {
            return Err(Error::NonPositiveStep { step: self.dt });
        }
        if !self.origin.is_finite() || !self.t0.is_finite() {
            return Err(Error::NonFinite {
                what: "grid origin",
            });
        }
        Ok(())
    }

    /// Visits every sampled lattice point over the given axes; the other
    /// coordinates stay at the origin.
    pub(crate) fn for_each_point(&self, axes: &[Axis], mut visit: impl FnMut(Vector4)) {
        let counts: Vec<usize> = axes.iter().map(|&a| self.extents[a as usize]).collect();
        let mut idx = vec![0usize; axes.len()];
        loop {
            let mut point = self.origin;
            for (slot, &axis) in axes.iter().enumerate() {
                point = point.offset(axis, idx[slot] as f64 * self.spacing[axis as usize]);
            }
            visit(point);
            // odometer increment
            let mut slot = 0;
            loop {
                if slot == axes.len() {
                    return;
                }
                idx[slot] += 1;
                if idx[slot] < counts[slot] {
                    break;
                }
                idx[slot] = 0;
                slot += 1;
            }
        }
    }
}

/// Central-difference estimate of the momentum operator -i hbar d/dx_j
/// applied to the state at (x, t).
///
/// For a single plane wave the estimate divided by Psi converges to
/// hbar k_j at second order in h.
pub fn apply_momentum_operator(
    state: &WaveState,
    axis: Axis,
    x: Vector4,
    t: f64,
    h: f64,
    constants: &PhysicalConstants,
) -> Result<Complex64, Error> {
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::NonPositiveStep { step: h });
    }
    let plus = state.evaluate(x.offset(axis, h), t);
    let minus = state.evaluate(x.offset(axis, -h), t);
    Ok(-Complex64::i() * constants.hbar() * (plus - minus) / (2.0 * h))
}

/// Central-difference estimate of the energy operator i hbar d/dt applied
/// to the state at (x, t); converges to hbar omega at second order in dt.
pub fn apply_energy_operator(
    state: &WaveState,
    x: Vector4,
    t: f64,
    dt: f64,
    constants: &PhysicalConstants,
) -> Result<Complex64, Error> {
    if !(dt.is_finite() && dt > 0.0) {
        return Err(Error::NonPositiveStep { step: dt });
    }
    let plus = state.evaluate(x, t + dt);
    let minus = state.evaluate(x, t - dt);
    Ok(Complex64::i() * constants.hbar() * (plus - minus) / (2.0 * dt))
}
