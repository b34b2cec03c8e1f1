//! Velocity shifts in three-space and the quantities they leave alone.
//!
//! All boosts here are passive: they re-describe a fixed state from a frame
//! moving at +v3, so a resting particle acquires three-momentum -gamma m0 v3.
//! Boosts act on the (t, x, y, z) sector only; the w-component of every
//! four-vector is carried through unchanged.

use crate::constants::PhysicalConstants;
use crate::error::Error;
use crate::kinematics::FourMomentum;
use crate::vec4::{Vec3, Vector4};

/// Largest accepted boost speed as a fraction of c.
pub const MAX_BETA: f64 = 1.0 - 1e-12;

/// An event: a coordinate time plus a position in four-space.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Event4 {
    /// Coordinate time (s).
    pub t: f64,
    /// Position (w, x, y, z) in meters.
    pub position: Vector4,
}

impl Event4 {
    pub fn new(t: f64, position: Vector4) -> Self {
        Event4 { t, position }
    }
}

/// A validated boost velocity with its Lorentz factor precomputed.
#[derive(Clone, Copy, Debug)]
pub struct Boost {
    v3: Vec3,
    /// Unit direction; zero vector for the identity boost.
    dir: Vec3,
    speed: f64,
    gamma: f64,
    c: f64,
}

impl Boost {
    pub fn new(v3: Vec3, constants: &PhysicalConstants) -> Result<Self, Error> {
        if !v3.is_finite() {
            return Err(Error::NonFinite {
                what: "boost velocity",
            });
        }
        let c = constants.c;
        let speed = v3.norm();
        let beta = speed / c;
        if beta > MAX_BETA {
            return Err(Error::SuperluminalBoost { beta });
        }
        // (1 - beta)(1 + beta) keeps gamma accurate as beta -> 1.
        let gamma = 1.0 / ((1.0 - beta) * (1.0 + beta)).sqrt();
        let dir = if speed > 0.0 {
            v3 * (1.0 / speed)
        } else {
            Vec3::ZERO
        };
        Ok(Boost {
            v3,
            dir,
            speed,
            gamma,
            c,
        })
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn velocity(&self) -> Vec3 {
        self.v3
    }

    /// Transforms an (energy-like, three-vector) pair by the passive rule:
    /// scalar' = gamma (scalar - v . a3), parallel' = gamma (par - v scalar / c^2),
    /// transverse unchanged. Used for (E, p3) and (omega, k3) alike.
    fn scalar_and_vector(&self, scalar: f64, a3: Vec3) -> (f64, Vec3) {
        if self.speed == 0.0 {
            return (scalar, a3);
        }
        let par = self.dir.dot(a3);
        let scalar_out = self.gamma * (scalar - self.speed * par);
        let par_out = self.gamma * (par - self.speed * scalar / (self.c * self.c));
        let a3_out = a3 + self.dir * (par_out - par);
        (scalar_out, a3_out)
    }

    /// Boosts a four-momentum. The energy-momentum pair (E, p3) transforms by
    /// the standard rule; the w-component is returned unchanged.
    pub fn momentum(&self, p: &FourMomentum) -> FourMomentum {
        let energy = p.0.norm() * self.c;
        let (_, p3) = self.scalar_and_vector(energy, p.0.spatial());
        FourMomentum(Vector4::from_parts(p.0.w, p3))
    }

    /// Boosts an event. (t, x, y, z) transform by the standard Lorentz rule;
    /// w is unchanged.
    pub fn event(&self, ev: &Event4) -> Event4 {
        if self.speed == 0.0 {
            return *ev;
        }
        let r3 = ev.position.spatial();
        let par = self.dir.dot(r3);
        let t_out = self.gamma * (ev.t - self.speed * par / (self.c * self.c));
        let par_out = self.gamma * (par - self.speed * ev.t);
        let r3_out = r3 + self.dir * (par_out - par);
        Event4::new(t_out, Vector4::from_parts(ev.position.w, r3_out))
    }

    /// Boosts a plane-wave (omega, k): omega' = gamma (omega - v . k3),
    /// k_parallel' = gamma (k_par - v omega / c^2), k_w unchanged.
    pub fn wave(&self, k: Vector4, omega: f64) -> (Vector4, f64) {
        let (omega_out, k3_out) = self.scalar_and_vector(omega, k.spatial());
        (Vector4::from_parts(k.w, k3_out), omega_out)
    }
}

/// Lorentz factor 1 / sqrt(1 - v^2/c^2).
pub fn gamma(v3: Vec3, constants: &PhysicalConstants) -> Result<f64, Error> {
    Ok(Boost::new(v3, constants)?.gamma())
}

/// Boosted energy of a plane wave: gamma (E - hbar v . k3).
///
/// `k` is the four-wave-vector; only its three-space part enters the dot
/// product. Assumes the dispersion-consistent pairing E = hbar c |k|.
pub fn doppler_shift(
    energy: f64,
    k: Vector4,
    v3: Vec3,
    constants: &PhysicalConstants,
) -> Result<f64, Error> {
    if !k.is_finite() || !energy.is_finite() {
        return Err(Error::NonFinite { what: "plane wave" });
    }
    let boost = Boost::new(v3, constants)?;
    Ok(boost.gamma() * (energy - constants.hbar() * v3.dot(k.spatial())))
}

/// Boosts a four-momentum; see [`Boost::momentum`].
pub fn boost_momentum(
    p: &FourMomentum,
    v3: Vec3,
    constants: &PhysicalConstants,
) -> Result<FourMomentum, Error> {
    Ok(Boost::new(v3, constants)?.momentum(p))
}

/// Relativistic mass m0 / sqrt(1 - v^2/c^2).
pub fn relativistic_mass(
    rest_mass: f64,
    v3: Vec3,
    constants: &PhysicalConstants,
) -> Result<f64, Error> {
    Ok(rest_mass * Boost::new(v3, constants)?.gamma())
}

/// The w-displacement matching a (dt, dx, dy, dz) separation:
/// dw = +sqrt(c^2 dt^2 - dx^2 - dy^2 - dz^2).
///
/// Spacelike separations have no real w-displacement and are rejected.
pub fn spacetime_interval(
    dt: f64,
    dx: f64,
    dy: f64,
    dz: f64,
    constants: &PhysicalConstants,
) -> Result<f64, Error> {
    if ![dt, dx, dy, dz].iter().all(|v| v.is_finite()) {
        return Err(Error::NonFinite {
            what: "separation component",
        });
    }
    let ct = constants.c * dt;
    let radicand = ct * ct - dx * dx - dy * dy - dz * dz;
    if radicand < 0.0 {
        return Err(Error::SpacelikeInterval { radicand });
    }
    Ok(radicand.sqrt())
}

/// Boosts an event; see [`Boost::event`].
pub fn boost_event(ev: &Event4, v3: Vec3, constants: &PhysicalConstants) -> Result<Event4, Error> {
    Ok(Boost::new(v3, constants)?.event(ev))
}

/// Residual of E^2 = p^2 c^2 + m0^2 c^4, normalized by E^2.
pub fn verify_energy_momentum(
    energy: f64,
    p3: Vec3,
    rest_mass: f64,
    constants: &PhysicalConstants,
) -> f64 {
    let c2 = constants.c * constants.c;
    let numerator = energy * energy - (p3.norm_sqr() * c2 + rest_mass * rest_mass * c2 * c2);
    if numerator == 0.0 {
        return 0.0;
    }
    let scale = if energy != 0.0 { energy * energy } else { 1.0 };
    numerator / scale
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::CODATA;
    use crate::kinematics::{four_velocity, momentum_from_velocity, Branch};

    fn c() -> f64 {
        CODATA.c
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn gamma_closed_forms() {
        let k = CODATA;
        assert_eq!(gamma(Vec3::ZERO, &k).unwrap(), 1.0);
        assert!(rel(gamma(Vec3::new(0.6 * c(), 0.0, 0.0), &k).unwrap(), 1.25) < 1e-14);
        let g = gamma(Vec3::new(0.0, 0.8 * c(), 0.0), &k).unwrap();
        assert!(rel(g, 5.0 / 3.0) < 1e-14);
    }

    #[test]
    fn gamma_rejects_lightspeed() {
        let k = CODATA;
        assert!(matches!(
            gamma(Vec3::new(c(), 0.0, 0.0), &k),
            Err(Error::SuperluminalBoost { .. })
        ));
    }

    #[test]
    fn doppler_identity_boost() {
        let k = CODATA;
        let kvec = Vector4::new(0.0, 2.0, 0.0, 0.0);
        let e = k.hbar() * c() * kvec.norm();
        assert_eq!(doppler_shift(e, kvec, Vec3::ZERO, &k).unwrap(), e);
    }

    #[test]
    fn transverse_doppler() {
        let k = CODATA;
        let kvec = Vector4::new(0.0, 0.0, 3.0, 0.0);
        let e = k.hbar() * c() * kvec.norm();
        let v = Vec3::new(0.6 * c(), 0.0, 0.0);
        let shifted = doppler_shift(e, kvec, v, &k).unwrap();
        assert!(rel(shifted, 1.25 * e) < 1e-14);
    }

    #[test]
    fn back_to_back_pair_shift_depends_only_on_speed() {
        let k = CODATA;
        let kvec = Vector4::new(0.0, 1.3, -0.4, 2.2);
        let e = k.hbar() * c() * kvec.norm();
        for dir in [
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(0.0, 1.0, 0.0),
            Vec3::new(0.48, 0.6, 0.64),
        ] {
            let v = dir * (0.6 * c() / dir.norm());
            let sum =
                doppler_shift(e, kvec, v, &k).unwrap() + doppler_shift(e, -kvec, v, &k).unwrap();
            assert!(rel(sum, 2.0 * e / 0.8) < 1e-12);
        }
    }

    #[test]
    fn boost_momentum_identity() {
        let k = CODATA;
        let p = FourMomentum(Vector4::new(1.0, 2.0, 3.0, 4.0));
        let out = boost_momentum(&p, Vec3::ZERO, &k).unwrap();
        assert_eq!(out.0, p.0);
    }

    #[test]
    fn boosted_resting_electron() {
        let k = CODATA;
        let p = FourMomentum(Vector4::new(-k.m_e * c(), 0.0, 0.0, 0.0));
        let out = boost_momentum(&p, Vec3::new(0.6 * c(), 0.0, 0.0), &k).unwrap();
        // w untouched, bit for bit
        assert_eq!(out.0.w.to_bits(), p.0.w.to_bits());
        assert!(rel(out.0.x, -0.75 * k.m_e * c()) < 1e-12);
        assert!(rel(out.energy(&k), 1.25 * k.m_e * c() * c()) < 1e-12);
    }

    #[test]
    fn longitudinal_photon_doppler() {
        let k = CODATA;
        let p = FourMomentum(Vector4::new(0.0, 1e-20, 0.0, 0.0));
        let e = p.energy(&k);
        let out = boost_momentum(&p, Vec3::new(0.6 * c(), 0.0, 0.0), &k).unwrap();
        assert!(rel(out.energy(&k), e / 2.0) < 1e-12);
    }

    #[test]
    fn boost_agrees_with_doppler_energy() {
        let k = CODATA;
        let u = four_velocity(
            Vec3::new(0.2 * c(), -0.1 * c(), 0.3 * c()),
            Branch::Negative,
            &k,
        )
        .unwrap();
        let p = momentum_from_velocity(3.0 * k.m_e, &u).unwrap();
        let v = Vec3::new(0.1 * c(), 0.5 * c(), -0.2 * c());
        let boosted = boost_momentum(&p, v, &k).unwrap();
        // matching wave: k = p / hbar, E = hbar omega = |p| c
        let kvec = p.0 * (1.0 / k.hbar());
        let e_doppler = doppler_shift(p.energy(&k), kvec, v, &k).unwrap();
        assert!(rel(boosted.energy(&k), e_doppler) < 1e-12);
    }

    #[test]
    fn relativistic_mass_closed_forms() {
        let k = CODATA;
        let m0 = 2.5;
        assert_eq!(relativistic_mass(m0, Vec3::ZERO, &k).unwrap(), m0);
        let m = relativistic_mass(m0, Vec3::new(0.0, 0.6 * c(), 0.0), &k).unwrap();
        assert!(rel(m, 1.25 * m0) < 1e-14);
        assert_eq!(
            relativistic_mass(0.0, Vec3::new(0.3 * c(), 0.0, 0.0), &k).unwrap(),
            0.0
        );
    }

    #[test]
    fn interval_examples() {
        let k = CODATA;
        let dw = spacetime_interval(1.0, 0.0, 0.0, 0.0, &k).unwrap();
        assert_eq!(dw, c());
        let lightlike = spacetime_interval(1.0, c(), 0.0, 0.0, &k).unwrap();
        assert_eq!(lightlike, 0.0);
        let dw = spacetime_interval(1.0, 0.6 * c(), 0.0, 0.0, &k).unwrap();
        assert!(rel(dw, 0.8 * c()) < 1e-12);
    }

    #[test]
    fn spacelike_separation_is_rejected() {
        let k = CODATA;
        assert!(matches!(
            spacetime_interval(1.0, 2.0 * c(), 0.0, 0.0, &k),
            Err(Error::SpacelikeInterval { .. })
        ));
    }

    #[test]
    fn boost_event_closed_form() {
        let k = CODATA;
        let ev = Event4::new(1.0, Vector4::new(0.8 * c(), 0.0, 0.0, 0.0));
        let out = boost_event(&ev, Vec3::new(0.6 * c(), 0.0, 0.0), &k).unwrap();
        assert!(rel(out.t, 1.25) < 1e-12);
        assert!(rel(out.position.x, -0.75 * c()) < 1e-12);
        assert_eq!(out.position.w.to_bits(), ev.position.w.to_bits());
    }

    #[test]
    fn boost_event_identity() {
        let k = CODATA;
        let ev = Event4::new(2.0, Vector4::new(1.0, 2.0, 3.0, 4.0));
        assert_eq!(boost_event(&ev, Vec3::ZERO, &k).unwrap(), ev);
    }

    #[test]
    fn light_sphere_membership_is_preserved() {
        let k = CODATA;
        // events with w^2 + x^2 + y^2 + z^2 = c^2 t^2
        let spatial = Vec3::new(0.3 * c(), -0.2 * c(), 0.1 * c());
        let w = (c() * c() - spatial.norm_sqr()).sqrt();
        let ev = Event4::new(1.0, Vector4::from_parts(w, spatial));
        for v in [
            Vec3::new(0.5 * c(), 0.0, 0.0),
            Vec3::new(-0.1 * c(), 0.7 * c(), 0.2 * c()),
        ] {
            let out = boost_event(&ev, v, &k).unwrap();
            let lhs = out.position.norm_sqr();
            let rhs = (c() * out.t) * (c() * out.t);
            assert!(rel(lhs, rhs) < 1e-12);
        }
    }

    #[test]
    fn energy_momentum_residuals() {
        let k = CODATA;
        let m0 = 1.5;
        let rest = verify_energy_momentum(m0 * c() * c(), Vec3::ZERO, m0, &k);
        assert!(rest.abs() < 1e-15);
        let photon = verify_energy_momentum(2.0 * c(), Vec3::new(2.0, 0.0, 0.0), 0.0, &k);
        assert!(photon.abs() < 1e-15);
        // boosted electron state from the worked example
        let p = FourMomentum(Vector4::new(-k.m_e * c(), 0.0, 0.0, 0.0));
        let out = boost_momentum(&p, Vec3::new(0.6 * c(), 0.0, 0.0), &k).unwrap();
        let r = verify_energy_momentum(out.energy(&k), out.0.spatial(), k.m_e, &k);
        assert!(r.abs() < 1e-10);
    }
}
