//! Two-wave composites: overlapping free waves with opposing momenta, which
//! carry rest mass through their total energy rather than any w-momentum.

use num_complex::Complex64;

use crate::constants::PhysicalConstants;
use crate::error::Error;
use crate::transforms::Boost;
use crate::vec4::{Vec3, Vector4};

use super::{PlaneWave, WaveState};

/// Relative tolerance on |total p3| for a state to count as a rest frame.
const REST_FRAME_REL: f64 = 1e-12;

/// Builds the two-component state with three-space wave vectors +-k3 and
/// k_w = 0. The pair sits in a zero-momentum state of energy 2 hbar c |k3|.
pub fn composite_state(
    k3: Vec3,
    amplitude: Complex64,
    constants: &PhysicalConstants,
) -> Result<WaveState, Error> {
    if !k3.is_finite() {
        return Err(Error::NonFinite {
            what: "wave vector",
        });
    }
    if k3.norm_sqr() == 0.0 {
        return Err(Error::DegenerateComposite);
    }
    let forward = PlaneWave::new(Vector4::from_parts(0.0, k3), amplitude, constants)?;
    let backward = PlaneWave::new(Vector4::from_parts(0.0, -k3), amplitude, constants)?;
    Ok(WaveState::new(vec![forward, backward]))
}

/// Rest mass of a zero-momentum state: total energy / c^2.
///
/// Errors unless the summed three-momentum vanishes (relative to the summed
/// |k3| magnitudes) — mass-from-energy only reads off in the rest frame.
pub fn composite_rest_mass(state: &WaveState, constants: &PhysicalConstants) -> Result<f64, Error> {
    let total_k3 = state
        .components()
        .iter()
        .fold(Vec3::ZERO, |acc, w| acc + w.k().spatial());
    let scale: f64 = state
        .components()
        .iter()
        .map(|w| w.k().spatial().norm())
        .sum();
    if scale > 0.0 {
        let residual = total_k3.norm() / scale;
        if residual > REST_FRAME_REL {
            return Err(Error::NotARestFrame { residual });
        }
    }
    Ok(state.total_energy(constants) / (constants.c * constants.c))
}

/// Applies the Doppler rule to every component: omega and k3 transform by
/// the passive boost, k_w is untouched. Amplitudes are carried over
/// unchanged — observers agree on phases, and treating them as agreeing on
/// amplitudes too is an assumption this library makes throughout.
pub fn boost_composite(
    state: &WaveState,
    v3: Vec3,
    constants: &PhysicalConstants,
) -> Result<WaveState, Error> {
    let boost = Boost::new(v3, constants)?;
    let components = state
        .components()
        .iter()
        .map(|w| {
            let (k_out, omega_out) = boost.wave(w.k(), w.omega());
            PlaneWave::with_omega(k_out, omega_out, w.amplitude())
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(WaveState::new(components))
}
