//! Grid residuals for the wave equation and its massive reductions.
//!
//! Each residual samples the state over a lattice, forms second derivatives
//! by central differences along the sampled axes, handles the w- and
//! t-dependence analytically where the mode structure fixes them, and
//! returns a scale-free maximum:
//!
//! * wave equation and Klein-Gordon residuals are normalized by
//!   max|k|^2 * sum|amp| (the size of the largest term in the equation);
//! * the non-relativistic reduction is normalized by the kinetic scale
//!   hbar^2 max|k3|^2 / (2 m0) * sum|amp|, so the returned number is the
//!   defect relative to the terms the reduced equation keeps.

use num_complex::Complex64;

use crate::constants::PhysicalConstants;
use crate::error::Error;
use crate::tolerances::NONRELATIVISTIC_MAX_RATIO;
use crate::vec4::{Axis, Vector4};

use super::{GridSpec, PlaneWave, WaveState};

/// Relative slack when matching |k_w| against m0 c / hbar.
const AXIAL_MODE_REL: f64 = 1e-12;

fn second_difference(
    state: &WaveState,
    x: Vector4,
    t: f64,
    axis: Axis,
    h: f64,
    center: Complex64,
) -> Complex64 {
    let plus = state.evaluate(x.offset(axis, h), t);
    let minus = state.evaluate(x.offset(axis, -h), t);
    (plus - 2.0 * center + minus) / (h * h)
}

/// Max relative residual of sum_j d2/dx_j^2 Psi - (1/c^2) d2/dt^2 Psi over
/// the grid. Dispersion-true states converge to zero at second order in the
/// step; a detuned omega leaves an O(1) defect.
pub fn wave_equation_residual(
    state: &WaveState,
    grid: &GridSpec,
    constants: &PhysicalConstants,
) -> Result<f64, Error> {
    grid.validate_axes(&Axis::ALL, true)?;
    let kmax = state.max_wave_number();
    let scale = kmax * kmax * state.amplitude_scale();
    if scale == 0.0 {
        // constant (or empty) field: every term vanishes identically
        return Ok(0.0);
    }
    let inv_c2 = 1.0 / (constants.c * constants.c);
    let mut worst: f64 = 0.0;
    grid.for_each_point(&Axis::ALL, |x| {
        let center = state.evaluate(x, grid.t0);
        let mut laplacian = Complex64::ZERO;
        for axis in Axis::ALL {
            laplacian +=
                second_difference(state, x, grid.t0, axis, grid.spacing[axis as usize], center);
        }
        let plus = state.evaluate(x, grid.t0 + grid.dt);
        let minus = state.evaluate(x, grid.t0 - grid.dt);
        let time_curvature = (plus - 2.0 * center + minus) / (grid.dt * grid.dt);
        worst = worst.max((laplacian - inv_c2 * time_curvature).norm());
    });
    Ok(worst / scale)
}

fn check_axial_modes(state: &WaveState, kw_expected: f64) -> Result<(), Error> {
    for (index, wave) in state.components().iter().enumerate() {
        let found = wave.k().w.abs();
        let tol = AXIAL_MODE_REL * kw_expected.max(wave.k().norm());
        if (found - kw_expected).abs() > tol {
            return Err(Error::AxialModeMismatch {
                index,
                found,
                expected: kw_expected,
            });
        }
    }
    Ok(())
}

/// Analytic d2/dt2 of the state at (x, t): sum of -omega_i^2 Psi_i.
fn analytic_time_curvature(state: &WaveState, x: Vector4, t: f64) -> Complex64 {
    state
        .components()
        .iter()
        .map(|w| -(w.omega() * w.omega()) * w.evaluate(x, t))
        .sum()
}

/// Max relative residual of
/// -(1/c^2) d2/dt2 Psi + laplacian_3 Psi - (m0 c / hbar)^2 Psi
/// over the three-space grid.
///
/// Every component must ride the axial shell k_w = +-m0 c / hbar; the w- and
/// t-dependence are evaluated analytically, so the grid is three-dimensional
/// and only the spatial Laplacian is differenced. The resting mode cancels
/// analytically; moving modes converge at second order in the step.
pub fn klein_gordon_residual(
    state: &WaveState,
    rest_mass: f64,
    grid: &GridSpec,
    constants: &PhysicalConstants,
) -> Result<f64, Error> {
    if !rest_mass.is_finite() {
        return Err(Error::NonFinite { what: "rest mass" });
    }
    if rest_mass < 0.0 {
        return Err(Error::NegativeMass { mass: rest_mass });
    }
    grid.validate_axes(&Axis::SPATIAL, false)?;
    let kw_expected = rest_mass * constants.c / constants.hbar();
    check_axial_modes(state, kw_expected)?;

    let kmax = state.max_wave_number();
    let scale = kmax * kmax * state.amplitude_scale();
    if scale == 0.0 {
        return Ok(0.0);
    }
    let inv_c2 = 1.0 / (constants.c * constants.c);
    let mass_term = kw_expected * kw_expected;
    let mut worst: f64 = 0.0;
    grid.for_each_point(&Axis::SPATIAL, |x| {
        let center = state.evaluate(x, grid.t0);
        let mut laplacian = Complex64::ZERO;
        for axis in Axis::SPATIAL {
            laplacian +=
                second_difference(state, x, grid.t0, axis, grid.spacing[axis as usize], center);
        }
        let time_curvature = analytic_time_curvature(state, x, grid.t0);
        worst = worst.max((-inv_c2 * time_curvature + laplacian - mass_term * center).norm());
    });
    Ok(worst / scale)
}

/// Frequency left over once the rest-energy phase is factored out,
/// omega - m0 c^2 / hbar, computed in the cancellation-free form
/// c |k3|^2 / (|k| + m0 c / hbar). Exactly zero for a resting mode.
fn reduced_frequency(wave: &PlaneWave, kw_expected: f64, c: f64) -> f64 {
    let k3_sqr = wave.k().spatial().norm_sqr();
    c * k3_sqr / (wave.k().norm() + kw_expected)
}

/// Max relative residual of the free-particle reduction
/// i hbar d/dt phi + (hbar^2 / 2 m0) laplacian_3 phi
/// where phi = Psi exp(+i m0 c^2 t / hbar).
///
/// Valid on axial-shell states with |k3| hbar / (m0 c) <= 0.1; the residual
/// is the relativistic dispersion defect and shrinks quadratically with
/// that ratio.
pub fn schrodinger_residual(
    state: &WaveState,
    rest_mass: f64,
    grid: &GridSpec,
    constants: &PhysicalConstants,
) -> Result<f64, Error> {
    if !rest_mass.is_finite() {
        return Err(Error::NonFinite { what: "rest mass" });
    }
    if rest_mass <= 0.0 {
        return Err(Error::NonPositiveMass { mass: rest_mass });
    }
    grid.validate_axes(&Axis::SPATIAL, false)?;
    let kw_expected = rest_mass * constants.c / constants.hbar();
    check_axial_modes(state, kw_expected)?;
    let mut kmax3: f64 = 0.0;
    for (index, wave) in state.components().iter().enumerate() {
        let ratio = wave.k().spatial().norm() / kw_expected;
        if ratio > NONRELATIVISTIC_MAX_RATIO * (1.0 + 1e-9) {
            return Err(Error::NonRelativisticDomain {
                index,
                ratio,
                max: NONRELATIVISTIC_MAX_RATIO,
            });
        }
        kmax3 = kmax3.max(wave.k().spatial().norm());
    }
    if kmax3 == 0.0 {
        // spatially constant: the finite differences and the reduced
        // frequencies are all identically zero
        return Ok(0.0);
    }

    let hbar = constants.hbar();
    let kinetic_scale = hbar * hbar * kmax3 * kmax3 / (2.0 * rest_mass) * state.amplitude_scale();
    let deltas: Vec<f64> = state
        .components()
        .iter()
        .map(|w| reduced_frequency(w, kw_expected, constants.c))
        .collect();

    // phi and its analytic time derivative, component by component
    let eval_phi = |x: Vector4, which: usize| -> Complex64 {
        let w = &state.components()[which];
        w.amplitude() * Complex64::cis(w.k().dot(x) - deltas[which] * grid.t0)
    };
    let phi =
        |x: Vector4| -> Complex64 { (0..state.components().len()).map(|i| eval_phi(x, i)).sum() };

    let mut worst: f64 = 0.0;
    grid.for_each_point(&Axis::SPATIAL, |x| {
        let center = phi(x);
        let mut laplacian = Complex64::ZERO;
        for axis in Axis::SPATIAL {
            let h = grid.spacing[axis as usize];
            let plus = phi(x.offset(axis, h));
            let minus = phi(x.offset(axis, -h));
            laplacian += (plus - 2.0 * center + minus) / (h * h);
        }
        let dphi_dt: Complex64 = (0..state.components().len())
            .map(|i| -Complex64::i() * deltas[i] * eval_phi(x, i))
            .sum();
        let residual =
            Complex64::i() * hbar * dphi_dt + hbar * hbar / (2.0 * rest_mass) * laplacian;
        worst = worst.max(residual.norm());
    });
    Ok(worst / kinetic_scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::CODATA;
    use crate::tolerances::{
        ANALYTIC_CANCELLATION, DETUNED_RESIDUAL_FLOOR, GRID_RESIDUAL, RESIDUAL_STEP_FRACTION,
    };
    use crate::vec4::Vec3;

    fn grid_for(kmax: f64, omega_max: f64, fraction: f64) -> GridSpec {
        let h = fraction / kmax;
        let dt = if omega_max > 0.0 {
            fraction / omega_max
        } else {
            1.0
        };
        GridSpec::isotropic(
            h,
            dt,
            5,
            Vector4::new(0.1 / kmax, -0.3 / kmax, 0.07 / kmax, 0.2 / kmax),
            0.15 / omega_max.max(1.0),
        )
    }

    #[test]
    fn plane_wave_satisfies_the_wave_equation() {
        let k = CODATA;
        let kv = Vector4::new(0.3, -1.1, 0.7, 0.4);
        let wave = PlaneWave::new(kv, Complex64::new(1.0, 0.5), &k).unwrap();
        let state = WaveState::new(vec![wave]);
        let grid = grid_for(kv.norm(), wave.omega(), RESIDUAL_STEP_FRACTION);
        let r = wave_equation_residual(&state, &grid, &k).unwrap();
        assert!(r < GRID_RESIDUAL, "residual {r:e}");
    }

    #[test]
    fn detuned_dispersion_is_detected() {
        let k = CODATA;
        let kv = Vector4::new(0.3, -1.1, 0.7, 0.4);
        let omega = 0.5 * k.c * kv.norm();
        let wave = PlaneWave::with_omega(kv, omega, Complex64::ONE).unwrap();
        let state = WaveState::new(vec![wave]);
        let grid = grid_for(kv.norm(), omega, RESIDUAL_STEP_FRACTION);
        let r = wave_equation_residual(&state, &grid, &k).unwrap();
        assert!(r > DETUNED_RESIDUAL_FLOOR, "residual {r}");
        assert!((r - 0.75).abs() < 0.01, "residual {r}");
    }

    #[test]
    fn constant_field_has_zero_residual() {
        let k = CODATA;
        let state = WaveState::new(vec![
            PlaneWave::new(Vector4::ZERO, Complex64::ONE, &k).unwrap()
        ]);
        let grid = GridSpec::isotropic(1.0, 1.0, 5, Vector4::ZERO, 0.0);
        assert_eq!(wave_equation_residual(&state, &grid, &k).unwrap(), 0.0);
    }

    #[test]
    fn grid_validation_errors() {
        let k = CODATA;
        let state = WaveState::new(vec![PlaneWave::new(
            Vector4::new(1.0, 0.0, 0.0, 0.0),
            Complex64::ONE,
            &k,
        )
        .unwrap()]);
        let mut grid = GridSpec::isotropic(1e-3, 1e-12, 4, Vector4::ZERO, 0.0);
        assert!(matches!(
            wave_equation_residual(&state, &grid, &k),
            Err(Error::GridTooSmall { .. })
        ));
        grid.extents = [18, 18, 18, 18];
        assert!(matches!(
            wave_equation_residual(&state, &grid, &k),
            Err(Error::GridTooLarge { .. })
        ));
        grid.extents = [5; 4];
        grid.spacing[1] = 0.0;
        assert!(matches!(
            wave_equation_residual(&state, &grid, &k),
            Err(Error::NonPositiveSpacing { .. })
        ));
        grid.spacing[1] = 1e-3;
        grid.dt = 0.0;
        assert!(matches!(
            wave_equation_residual(&state, &grid, &k),
            Err(Error::NonPositiveStep { .. })
        ));
    }

    fn axial_wave(
        ratio: f64,
        direction: Vec3,
        k: &crate::constants::PhysicalConstants,
    ) -> PlaneWave {
        let kw = k.m_e * k.c / k.hbar();
        let k3 = direction * (ratio * kw / direction.norm().max(f64::MIN_POSITIVE));
        let kv = Vector4::from_parts(kw, if ratio == 0.0 { Vec3::ZERO } else { k3 });
        PlaneWave::new(kv, Complex64::ONE, k).unwrap()
    }

    #[test]
    fn resting_mode_cancels_analytically() {
        let k = CODATA;
        let wave = axial_wave(0.0, Vec3::new(1.0, 0.0, 0.0), &k);
        let state = WaveState::new(vec![wave]);
        let kw = k.m_e * k.c / k.hbar();
        let grid = grid_for(kw, wave.omega(), RESIDUAL_STEP_FRACTION);
        let r = klein_gordon_residual(&state, k.m_e, &grid, &k).unwrap();
        assert!(r < ANALYTIC_CANCELLATION, "residual {r:e}");
    }

    #[test]
    fn moving_mode_residual_is_truncation_bounded() {
        let k = CODATA;
        let wave = axial_wave(1.0, Vec3::new(0.6, -0.48, 0.64), &k);
        let state = WaveState::new(vec![wave]);
        let grid = grid_for(wave.k().norm(), wave.omega(), RESIDUAL_STEP_FRACTION);
        let r = klein_gordon_residual(&state, k.m_e, &grid, &k).unwrap();
        assert!(r < GRID_RESIDUAL, "residual {r:e}");
    }

    #[test]
    fn massless_limit_is_the_wave_equation_on_spatial_modes() {
        let k = CODATA;
        let kv = Vector4::new(0.0, 1.3, -0.4, 0.8);
        let wave = PlaneWave::new(kv, Complex64::new(0.5, 0.5), &k).unwrap();
        let state = WaveState::new(vec![wave]);
        let grid = grid_for(kv.norm(), wave.omega(), RESIDUAL_STEP_FRACTION);
        let r = klein_gordon_residual(&state, 0.0, &grid, &k).unwrap();
        assert!(r < GRID_RESIDUAL, "residual {r:e}");
    }

    #[test]
    fn mixed_axial_magnitudes_are_rejected() {
        let k = CODATA;
        let kw = k.m_e * k.c / k.hbar();
        let good = PlaneWave::new(Vector4::new(kw, 0.0, 0.0, 0.0), Complex64::ONE, &k).unwrap();
        let bad =
            PlaneWave::new(Vector4::new(0.5 * kw, 0.0, 0.0, 0.0), Complex64::ONE, &k).unwrap();
        let state = WaveState::new(vec![good, bad]);
        let grid = grid_for(kw, good.omega(), RESIDUAL_STEP_FRACTION);
        assert!(matches!(
            klein_gordon_residual(&state, k.m_e, &grid, &k),
            Err(Error::AxialModeMismatch { index: 1, .. })
        ));
    }

    #[test]
    fn rest_state_reduction_is_exact() {
        let k = CODATA;
        let wave = axial_wave(0.0, Vec3::new(1.0, 0.0, 0.0), &k);
        let state = WaveState::new(vec![wave]);
        let kw = k.m_e * k.c / k.hbar();
        let grid = grid_for(kw, wave.omega(), RESIDUAL_STEP_FRACTION);
        let r = schrodinger_residual(&state, k.m_e, &grid, &k).unwrap();
        assert!(r < ANALYTIC_CANCELLATION, "residual {r:e}");
    }

    #[test]
    fn reduction_residual_scales_quadratically() {
        let k = CODATA;
        let kw = k.m_e * k.c / k.hbar();
        let mut residuals = Vec::new();
        for ratio in [0.025, 0.05, 0.1] {
            let wave = axial_wave(ratio, Vec3::new(0.0, 0.0, 1.0), &k);
            let state = WaveState::new(vec![wave]);
            let k3 = ratio * kw;
            let grid = GridSpec::isotropic(
                RESIDUAL_STEP_FRACTION / k3,
                1.0,
                5,
                Vector4::new(0.0, 0.01 / k3, 0.01 / k3, 0.01 / k3),
                0.15 / (k.c * k3),
            );
            residuals.push(schrodinger_residual(&state, k.m_e, &grid, &k).unwrap());
        }
        assert!(residuals[2] < 1e-2, "edge residual {:e}", residuals[2]);
        for pair in residuals.windows(2) {
            let exponent = (pair[1] / pair[0]).log2();
            assert!((exponent - 2.0).abs() < 0.2, "exponent {exponent}");
        }
    }

    #[test]
    fn reduction_rejects_relativistic_modes() {
        let k = CODATA;
        let wave = axial_wave(0.3, Vec3::new(1.0, 0.0, 0.0), &k);
        let state = WaveState::new(vec![wave]);
        let kw = k.m_e * k.c / k.hbar();
        let grid = grid_for(kw, wave.omega(), RESIDUAL_STEP_FRACTION);
        let err = schrodinger_residual(&state, k.m_e, &grid, &k).unwrap_err();
        assert!(err.to_string().contains("non-relativistic"), "{err}");
        assert!(schrodinger_residual(&state, 0.0, &grid, &k).is_err());
    }
}
