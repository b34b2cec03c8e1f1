//! The tolerances and reference values every check in this workspace pins
//! against, kept in one place so the acceptance suite, the CLI defaults, and
//! the docs all cite the same numbers.

/// Closed-form algebraic identities (four-speed constraint, energy-momentum
/// closure, conservation sums). A handful of f64 roundings deep, so 1e-12
/// leaves four orders of headroom over machine epsilon.
pub const IDENTITY_REL: f64 = 1e-12;

/// Identities reached through a boost, where gamma amplifies rounding.
pub const BOOST_REL: f64 = 1e-10;

/// Grid residual bound for dispersion-true states sampled at h|k| = 1e-3.
/// Second-order truncation predicts ~(h|k|)^2/6 ~ 2e-7; 1e-6 adds margin.
pub const GRID_RESIDUAL: f64 = 1e-6;

/// Dimensionless step h|k| at which residual bounds are asserted.
pub const RESIDUAL_STEP_FRACTION: f64 = 1e-3;

/// Dimensionless step for convergence-order measurements. Larger than
/// `RESIDUAL_STEP_FRACTION` so truncation dominates the FD roundoff floor
/// (at h|k| = 1e-3 the second difference loses ~10 digits to cancellation).
pub const ORDER_STEP_FRACTION: f64 = 1e-2;

/// Band around the theoretical order 2.0 of central second differences.
pub const ORDER_BAND: f64 = 0.1;

/// Band for the quadratic scaling exponent of the non-relativistic
/// reduction residual.
pub const SCALING_EXPONENT_BAND: f64 = 0.2;

/// Residuals that cancel analytically and leave only rounding noise.
pub const ANALYTIC_CANCELLATION: f64 = 1e-10;

/// A deliberately detuned dispersion (omega = 0.5 c |k|) produces a relative
/// residual of exactly 0.75; anything above this floor flags the violation.
pub const DETUNED_RESIDUAL_FLOOR: f64 = 0.5;

/// Non-relativistic reduction residual at the domain edge
/// |k3| hbar / (m0 c) = 0.1 (the analytic value is ~epsilon^2/4 = 2.5e-3).
pub const NONRELATIVISTIC_EDGE_RESIDUAL: f64 = 1e-2;

/// Largest |k3| hbar / (m0 c) the non-relativistic reduction accepts.
pub const NONRELATIVISTIC_MAX_RATIO: f64 = 0.1;

/// Default relative tolerance for the conservation ledger.
pub const CONSERVATION_REL: f64 = 1e-12;

/// Published electron Compton wavelength (m) and its check tolerance.
pub const COMPTON_ELECTRON_PUBLISHED: f64 = 2.426e-12;
pub const COMPTON_REL: f64 = 1e-3;

/// Published Klein circumference (m); the unit convention is only pinned to
/// within a factor of order one, so the band is 50%.
pub const KLEIN_PUBLISHED: f64 = 8e-33;
pub const KLEIN_PUBLISHED_REL: f64 = 0.5;

/// The Klein circumference this library's documented unit convention
/// actually produces from CODATA constants, and its band.
pub const KLEIN_DERIVED: f64 = 8.428339465515862e-33;
pub const KLEIN_DERIVED_REL: f64 = 1e-2;

/// Lower bound on the Compton-to-Klein length ratio.
pub const SCALE_RATIO_FLOOR: f64 = 1e20;

/// Electron-capture rest-mass deficit from the bundled table (MeV/c^2).
pub const CAPTURE_DEFICIT_MEV: f64 = 0.78;
pub const CAPTURE_DEFICIT_BAND_MEV: f64 = 0.01;
