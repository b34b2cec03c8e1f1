use thiserror::Error;

/// Errors raised by kinematics, transforms, the conservation ledger, and the
/// wave-mechanics residual checks.
#[derive(Debug, Error)]
pub enum Error {
    #[error("non-finite value in {what}")]
    NonFinite { what: &'static str },

    #[error("three-speed {speed:.9e} m/s exceeds the speed of light")]
    Superluminal { speed: f64 },

    #[error("boost speed beta = {beta:.15} is outside the accepted range (beta <= 1 - 1e-12)")]
    SuperluminalBoost { beta: f64 },

    #[error("mass must be non-negative, got {mass:.9e} kg")]
    NegativeMass { mass: f64 },

    #[error("mass must be strictly positive, got {mass:.9e} kg")]
    NonPositiveMass { mass: f64 },

    #[error(
        "spacelike separation: c^2 dt^2 - dx^2 - dy^2 - dz^2 = {radicand:.9e} m^2 is negative, \
         so there is no real w-displacement"
    )]
    SpacelikeInterval { radicand: f64 },

    #[error("finite-difference step must be positive, got {step:.9e}")]
    NonPositiveStep { step: f64 },

    #[error("grid spacing along {axis} must be positive, got {spacing:.9e}")]
    NonPositiveSpacing { axis: &'static str, spacing: f64 },

    #[error("grid has {samples} samples along {axis}, central stencils need at least {min}")]
    GridTooSmall {
        axis: &'static str,
        samples: usize,
        min: usize,
    },

    #[error("grid has {samples} samples, exceeding the cap of {max}")]
    GridTooLarge { samples: usize, max: usize },

    #[error(
        "wave component {index} has |k_w| = {found:.9e} rad/m but the reduction requires \
         |k_w| = m0 c / hbar = {expected:.9e} rad/m"
    )]
    AxialModeMismatch {
        index: usize,
        found: f64,
        expected: f64,
    },

    #[error(
        "wave component {index} has |k3| hbar / (m0 c) = {ratio:.4}, outside the \
         non-relativistic domain (ratio <= {max}) where the free-particle reduction is valid"
    )]
    NonRelativisticDomain { index: usize, ratio: f64, max: f64 },

    #[error("degenerate composite: the three-space wave vector must be nonzero")]
    DegenerateComposite,

    #[error("state is not in a rest frame: |total three-momentum| / scale = {residual:.3e}")]
    NotARestFrame { residual: f64 },

    #[error("particle table: {0}")]
    Table(String),

    #[error("particle table row {row} ({name}): {reason}")]
    TableRow {
        row: usize,
        name: String,
        reason: String,
    },

    #[error("unknown species '{name}' in reaction '{reaction}'")]
    UnknownSpecies { name: String, reaction: String },

    #[error("reaction '{label}': {side} side is empty")]
    EmptyReactionSide { label: String, side: &'static str },

    #[error("reaction file: {0}")]
    ReactionFile(String),

    #[error("wave-state file: {0}")]
    WaveStateFile(String),

    #[error("constants override line {line}: {reason}")]
    ConstantsOverride { line: usize, reason: String },
}
