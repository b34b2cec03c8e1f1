//! Input builders shared by the benchmarks.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fourspace::constants::{PhysicalConstants, CODATA};
use fourspace::vec4::{Vec3, Vector4};
use fourspace::wavemech::{GridSpec, PlaneWave, WaveState};

pub fn constants() -> PhysicalConstants {
    CODATA
}

/// A seeded superposition with |k| components of order one.
pub fn superposition(count: usize, seed: u64) -> WaveState {
    let k = constants();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    WaveState::new(
        (0..count)
            .map(|_| {
                let kv = Vector4::new(
                    rng.random_range(-1.5..1.5),
                    rng.random_range(-1.5..1.5),
                    rng.random_range(-1.5..1.5),
                    rng.random_range(-1.5..1.5),
                );
                let amp = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
                PlaneWave::new(kv, amp, &k).expect("finite wave")
            })
            .collect(),
    )
}

/// The lattice the residual benchmarks sample (5^4 points, h|k| = 1e-3).
pub fn residual_grid(state: &WaveState) -> GridSpec {
    let kmax = state.max_wave_number();
    let omega_max = state.max_frequency().max(1.0);
    GridSpec::isotropic(
        1e-3 / kmax,
        1e-3 / omega_max,
        5,
        Vector4::new(0.1 / kmax, -0.3 / kmax, 0.07 / kmax, 0.2 / kmax),
        0.15 / omega_max,
    )
}

/// A batch of seeded sub-light velocities.
pub fn velocities(count: usize, seed: u64) -> Vec<Vec3> {
    let k = constants();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let v = Vec3::new(
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
            );
            let n = v.norm().max(1e-3);
            v * (rng.random_range(0.0..0.95) * k.c / n)
        })
        .collect()
}
