//! Single-particle kinematics in Euclidean four-space.
//!
//! Every free particle moves through (w, x, y, z) at constant four-speed c;
//! the w-velocity is c times the proper-time rate, with a sign (the branch)
//! that is tied to charge for charged leptons. Momentum is relativistic mass
//! times four-velocity, energy is c times the momentum norm, and the
//! w-momentum of a particle is set by its charge alone.

use crate::constants::PhysicalConstants;
use crate::error::Error;
use crate::vec4::{Vec3, Vector4};

/// The sign choice for the w-velocity of a massive particle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Positive,
    Negative,
}

impl Branch {
    pub fn sign(self) -> f64 {
        match self {
            Branch::Positive => 1.0,
            Branch::Negative => -1.0,
        }
    }
}

/// A four-velocity with |u| = c. Constructed only through [`four_velocity`],
/// which enforces the constant-speed constraint.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FourVelocity {
    vec: Vector4,
    branch: i8,
}

impl FourVelocity {
    pub fn vector(&self) -> Vector4 {
        self.vec
    }

    /// Sign of the w-component: +1, -1, or 0 for lightlike motion.
    pub fn branch(&self) -> i8 {
        self.branch
    }
}

/// A momentum four-vector in kg m/s.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct FourMomentum(pub Vector4);

impl FourMomentum {
    pub const ZERO: FourMomentum = FourMomentum(Vector4::ZERO);

    /// Energy |p| c in joules; non-negative by construction.
    pub fn energy(&self, constants: &PhysicalConstants) -> f64 {
        self.0.norm() * constants.c
    }

    /// Relativistic mass equivalent E / c^2.
    pub fn mass_equivalent(&self, constants: &PhysicalConstants) -> f64 {
        self.0.norm() / constants.c
    }
}

fn speed_fraction(v3: Vec3, constants: &PhysicalConstants) -> Result<f64, Error> {
    if !v3.is_finite() {
        return Err(Error::NonFinite {
            what: "three-velocity",
        });
    }
    let beta = v3.norm() / constants.c;
    if beta > 1.0 {
        return Err(Error::Superluminal { speed: v3.norm() });
    }
    Ok(beta)
}

/// Rate of proper time against coordinate time, sqrt(1 - v^2/c^2).
///
/// Accepts |v3| up to and including c (where the rate is exactly zero).
pub fn proper_time_rate(v3: Vec3, constants: &PhysicalConstants) -> Result<f64, Error> {
    let beta = speed_fraction(v3, constants)?;
    // (1 - beta)(1 + beta) keeps precision as beta -> 1.
    Ok(((1.0 - beta) * (1.0 + beta)).sqrt())
}

/// Builds the four-velocity for a three-velocity and a branch sign.
///
/// The w-component is branch * c * sqrt(1 - v^2/c^2); at |v3| = c it is
/// forced to exactly zero and the branch argument is ignored.
pub fn four_velocity(
    v3: Vec3,
    branch: Branch,
    constants: &PhysicalConstants,
) -> Result<FourVelocity, Error> {
    let rate = proper_time_rate(v3, constants)?;
    let w = branch.sign() * constants.c * rate;
    let stored_branch = if w == 0.0 { 0 } else { branch.sign() as i8 };
    Ok(FourVelocity {
        vec: Vector4::from_parts(w, v3),
        branch: stored_branch,
    })
}

/// Momentum p = m u, with m the relativistic mass.
pub fn momentum_from_velocity(mass: f64, u: &FourVelocity) -> Result<FourMomentum, Error> {
    if !mass.is_finite() {
        return Err(Error::NonFinite { what: "mass" });
    }
    if mass < 0.0 {
        return Err(Error::NegativeMass { mass });
    }
    Ok(FourMomentum(u.vector() * mass))
}

/// Energy of a four-momentum, E = |p| c.
pub fn energy_of(p: &FourMomentum, constants: &PhysicalConstants) -> f64 {
    p.energy(constants)
}

/// w-momentum of a simple particle: branch * m0 c.
pub fn w_momentum_simple(
    rest_mass: f64,
    branch: Branch,
    constants: &PhysicalConstants,
) -> Result<f64, Error> {
    if !rest_mass.is_finite() {
        return Err(Error::NonFinite { what: "rest mass" });
    }
    if rest_mass < 0.0 {
        return Err(Error::NegativeMass { mass: rest_mass });
    }
    Ok(branch.sign() * (rest_mass * constants.c))
}

/// w-momentum of any particle from its charge: -q m_e c / e, with e the
/// signed electron charge. An electron (q = e) gives -m_e c, a positron
/// (q = -e) gives +m_e c.
///
/// Evaluated as -(q/e) * (m_e c) so that charges which are exact multiples
/// of e reproduce the simple-particle values bit for bit.
pub fn w_momentum_from_charge(charge: f64, constants: &PhysicalConstants) -> f64 {
    let multiples = charge / constants.e_electron;
    -multiples * (constants.m_e * constants.c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::CODATA;

    fn c() -> f64 {
        CODATA.c
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
    }

    #[test]
    fn proper_time_rate_limits() {
        let k = CODATA;
        assert_eq!(proper_time_rate(Vec3::ZERO, &k).unwrap(), 1.0);
        assert_eq!(proper_time_rate(Vec3::new(c(), 0.0, 0.0), &k).unwrap(), 0.0);
        let r = proper_time_rate(Vec3::new(0.6 * c(), 0.0, 0.0), &k).unwrap();
        assert!(rel(r, 0.8) < 1e-15);
    }

    #[test]
    fn proper_time_rate_rejects_superluminal() {
        let k = CODATA;
        assert!(matches!(
            proper_time_rate(Vec3::new(1.01 * c(), 0.0, 0.0), &k),
            Err(Error::Superluminal { .. })
        ));
    }

    #[test]
    fn resting_particle_moves_only_in_w() {
        let k = CODATA;
        let u = four_velocity(Vec3::ZERO, Branch::Negative, &k).unwrap();
        assert_eq!(u.vector(), Vector4::new(-c(), 0.0, 0.0, 0.0));
        assert_eq!(u.branch(), -1);
    }

    #[test]
    fn lightlike_motion_has_zero_w_velocity() {
        let k = CODATA;
        let u = four_velocity(Vec3::new(c(), 0.0, 0.0), Branch::Positive, &k).unwrap();
        assert_eq!(u.vector().w, 0.0);
        assert_eq!(u.branch(), 0);
    }

    #[test]
    fn four_velocity_closed_form() {
        let k = CODATA;
        let u = four_velocity(Vec3::new(0.6 * c(), 0.0, 0.0), Branch::Positive, &k).unwrap();
        assert!(rel(u.vector().w, 0.8 * c()) < 1e-12);
        assert!(rel(u.vector().x, 0.6 * c()) < 1e-15);
        assert!(rel(u.vector().norm(), c()) < 1e-12);
    }

    #[test]
    fn zero_mass_gives_zero_momentum() {
        let k = CODATA;
        let u = four_velocity(Vec3::new(0.3 * c(), 0.0, 0.0), Branch::Positive, &k).unwrap();
        let p = momentum_from_velocity(0.0, &u).unwrap();
        assert_eq!(p.0, Vector4::ZERO);
    }

    #[test]
    fn resting_electron_momentum() {
        let k = CODATA;
        let u = four_velocity(Vec3::ZERO, Branch::Negative, &k).unwrap();
        let p = momentum_from_velocity(k.m_e, &u).unwrap();
        assert_eq!(p.0.w, -k.m_e * c());
        assert!(rel(p.energy(&k), k.m_e * c() * c()) < 1e-12);
    }

    #[test]
    fn momentum_is_componentwise_product() {
        let k = CODATA;
        let u = four_velocity(Vec3::new(0.6 * c(), 0.0, 0.0), Branch::Positive, &k).unwrap();
        let p = momentum_from_velocity(2.0, &u).unwrap();
        assert!(rel(p.0.w, 1.6 * c()) < 1e-12);
        assert!(rel(p.0.x, 1.2 * c()) < 1e-15);
    }

    #[test]
    fn negative_mass_is_rejected() {
        let k = CODATA;
        let u = four_velocity(Vec3::ZERO, Branch::Positive, &k).unwrap();
        assert!(matches!(
            momentum_from_velocity(-1.0, &u),
            Err(Error::NegativeMass { .. })
        ));
    }

    #[test]
    fn energy_examples() {
        let k = CODATA;
        assert_eq!(energy_of(&FourMomentum::ZERO, &k), 0.0);
        for sign in [1.0, -1.0] {
            let p = FourMomentum(Vector4::new(sign * k.m_e * c(), 0.0, 0.0, 0.0));
            assert!(rel(energy_of(&p, &k), k.m_e * c() * c()) < 1e-15);
        }
        // 3-4-5 Euclidean norm
        let p = FourMomentum(Vector4::new(3.0, 4.0, 0.0, 0.0));
        assert!(rel(energy_of(&p, &k), 5.0 * c()) < 1e-15);
        assert!(rel(p.mass_equivalent(&k), 5.0 / c()) < 1e-15);
    }

    #[test]
    fn w_momentum_simple_examples() {
        let k = CODATA;
        assert_eq!(w_momentum_simple(0.0, Branch::Positive, &k).unwrap(), 0.0);
        assert_eq!(
            w_momentum_simple(k.m_e, Branch::Negative, &k).unwrap(),
            -(k.m_e * c())
        );
        assert_eq!(
            w_momentum_simple(k.m_e, Branch::Positive, &k).unwrap(),
            k.m_e * c()
        );
        assert!(w_momentum_simple(-1.0, Branch::Positive, &k).is_err());
    }

    #[test]
    fn w_momentum_from_charge_matches_simple_form_exactly() {
        let k = CODATA;
        assert_eq!(w_momentum_from_charge(0.0, &k), 0.0);
        // electron and positron reproduce branch * m_e c bit for bit
        assert_eq!(
            w_momentum_from_charge(k.e_electron, &k),
            w_momentum_simple(k.m_e, Branch::Negative, &k).unwrap()
        );
        assert_eq!(
            w_momentum_from_charge(-k.e_electron, &k),
            w_momentum_simple(k.m_e, Branch::Positive, &k).unwrap()
        );
    }
}
