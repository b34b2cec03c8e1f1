//! A verification-grade library for special-relativistic kinematics recast in
//! a Euclidean four-space (w, x, y, z), where every free particle moves at
//! the speed of light and the fourth momentum component doubles as charge.
//!
//! The crate covers four areas:
//!
//! * [`kinematics`]: constant-speed four-velocities, four-momenta, and the
//!   charge/w-momentum correspondence, plus the [`scales`] length comparison.
//! * [`transforms`]: passive three-space boosts, Doppler shifts, and the
//!   invariants they leave behind (the w-component and the interval).
//! * [`reactions`]: a particle table and a conservation ledger that tallies
//!   charge, w-momentum, and rest-mass sums across real reactions.
//! * [`wavemech`]: 4D plane-wave mechanics with finite-difference operator
//!   and residual verification down to the free-particle reductions.
//!
//! Everything is a pure function over immutable values; any number of
//! threads may share the types freely.

pub mod constants;
pub mod error;
pub mod kinematics;
pub mod reactions;
pub mod scales;
pub mod tolerances;
pub mod transforms;
pub mod vec4;
pub mod wavemech;

pub use constants::{PhysicalConstants, CODATA};
pub use error::Error;
pub use kinematics::{
    energy_of, four_velocity, momentum_from_velocity, proper_time_rate, w_momentum_from_charge,
    w_momentum_simple, Branch, FourMomentum, FourVelocity,
};
pub use reactions::{
    bundled_particle_table, bundled_reactions, check_reaction, run_reaction_suite,
    species_w_momentum, ConservationReport, ParticleSpecies, ParticleTable, Reaction, SuiteReport,
    SuiteSummary, Verdict,
};
pub use scales::{compton_wavelength, klein_circumference};
pub use transforms::{
    boost_event, boost_momentum, doppler_shift, gamma, relativistic_mass, spacetime_interval,
    verify_energy_momentum, Boost, Event4,
};
pub use vec4::{euclid_inner, Axis, Vec3, Vector4};
pub use wavemech::{
    apply_energy_operator, apply_momentum_operator, boost_composite, composite_rest_mass,
    composite_state, klein_gordon_residual, schrodinger_residual, wave_equation_residual, GridSpec,
    PlaneWave, WaveState,
};
