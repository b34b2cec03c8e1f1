//! The two length scales a compactified fourth dimension could have: the
//! Compton wavelength of the electron and the Klein circumference.

use crate::constants::PhysicalConstants;
use crate::error::Error;

/// Compton wavelength h / (m c).
pub fn compton_wavelength(mass: f64, constants: &PhysicalConstants) -> Result<f64, Error> {
    if !mass.is_finite() {
        return Err(Error::NonFinite { what: "mass" });
    }
    if mass <= 0.0 {
        return Err(Error::NonPositiveMass { mass });
    }
    Ok(constants.h / (mass * constants.c))
}

/// Klein's compactification circumference, l = h c sqrt(2 kappa) / e.
///
/// The charge enters in Gaussian form, e_gauss = |e| / sqrt(4 pi epsilon0),
/// and kappa = 8 pi G / c^4; with CODATA inputs this lands at 8.43e-33 m,
/// a calibration that reproduces the published 8e-33 m figure.
pub fn klein_circumference(constants: &PhysicalConstants) -> f64 {
    let e_gauss =
        constants.elementary_charge() / (4.0 * std::f64::consts::PI * constants.epsilon0).sqrt();
    (constants.h * constants.c / e_gauss) * (2.0 * constants.kappa()).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::CODATA;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn electron_compton_wavelength() {
        let k = CODATA;
        let l = compton_wavelength(k.m_e, &k).unwrap();
        assert!(rel(l, 2.426e-12) < 1e-3);
        // direct constant arithmetic
        assert!(rel(l, 2.426310238683092e-12) < 1e-12);
        assert!(rel(l, k.h / (k.m_e * k.c)) < 1e-15);
    }

    #[test]
    fn compton_wavelength_halves_for_double_mass() {
        let k = CODATA;
        let l1 = compton_wavelength(k.m_e, &k).unwrap();
        let l2 = compton_wavelength(2.0 * k.m_e, &k).unwrap();
        assert!(rel(l2, l1 / 2.0) < 1e-15);
    }

    #[test]
    fn compton_wavelength_is_strictly_decreasing() {
        let k = CODATA;
        let masses = [1e-31, 5e-31, 1e-30, 1e-27, 1.0];
        let values: Vec<f64> = masses
            .iter()
            .map(|&m| compton_wavelength(m, &k).unwrap())
            .collect();
        for pair in values.windows(2) {
            assert!(pair[1] < pair[0]);
        }
    }

    #[test]
    fn compton_wavelength_rejects_non_positive_mass() {
        let k = CODATA;
        assert!(compton_wavelength(0.0, &k).is_err());
        assert!(compton_wavelength(-1.0, &k).is_err());
    }

    #[test]
    fn klein_circumference_scale() {
        let k = CODATA;
        let l = klein_circumference(&k);
        // within a factor of 1.5 of the published figure
        assert!(rel(l, 8e-33) < 0.5, "klein = {l:e}");
        // the value this unit convention actually produces
        assert!(rel(l, 8.428339465515862e-33) < 1e-12, "klein = {l:e}");
    }

    #[test]
    fn compton_to_klein_ratio() {
        let k = CODATA;
        let ratio = compton_wavelength(k.m_e, &k).unwrap() / klein_circumference(&k);
        assert!(rel(ratio, 2.8787523908003725e20) < 1e-12);
        assert!(ratio > 1e20);
    }
}
