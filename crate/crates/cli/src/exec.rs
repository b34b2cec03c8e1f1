//! Scenario execution: dispatches each kind to the physics modules and
//! assembles a [`RunReport`]. Randomness is confined to a ChaCha stream
//! seeded from the scenario, so a given scenario + constants + seed always
//! produces the same report bytes (timing aside).

use std::time::Instant;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, UnitSphere};

use fourspace::constants::PhysicalConstants;
use fourspace::reactions::{bundled_particle_table, bundled_reactions, ParticleTable, Reaction};
use fourspace::tolerances::{
    ANALYTIC_CANCELLATION, BOOST_REL, COMPTON_ELECTRON_PUBLISHED, COMPTON_REL,
    DETUNED_RESIDUAL_FLOOR, GRID_RESIDUAL, IDENTITY_REL, KLEIN_DERIVED, KLEIN_DERIVED_REL,
    KLEIN_PUBLISHED, KLEIN_PUBLISHED_REL, NONRELATIVISTIC_EDGE_RESIDUAL, ORDER_BAND,
    ORDER_STEP_FRACTION, SCALE_RATIO_FLOOR, SCALING_EXPONENT_BAND,
};
use fourspace::transforms::{verify_energy_momentum, Boost};
use fourspace::vec4::{Vec3, Vector4};
use fourspace::wavemech::{
    boost_composite, composite_rest_mass, composite_state, klein_gordon_residual,
    schrodinger_residual, wave_equation_residual, GridSpec, PlaneWave, WaveState,
};
use fourspace::{compton_wavelength, klein_circumference, run_reaction_suite};

use crate::report::{CheckResult, RunReport};
use crate::scenario::{
    BoostParams, CompositeParams, KgResidualParams, ReactionSuiteParams, Scenario, ScenarioParams,
    SchrodingerParams, WaveResidualParams,
};
use crate::CliError;

/// Inputs shared across scenarios: the constant set and the CLI overrides.
#[derive(Debug, Default, Clone)]
pub struct ExecContext {
    pub constants: PhysicalConstants,
    /// `--table` override; takes precedence over the scenario's table.
    pub table: Option<std::path::PathBuf>,
    /// `--tolerance` override for the conservation ledger.
    pub tolerance: Option<f64>,
}

/// Runs a scenario to a report. Input problems (unreadable files, species
/// that do not resolve, parameters outside the physical domain) surface as
/// errors; physics findings surface as failed checks.
pub fn execute(scenario: &Scenario, ctx: &ExecContext) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let checks = match &scenario.params {
        ScenarioParams::Scales(_) => run_scales(&ctx.constants),
        ScenarioParams::ReactionSuite(p) => run_reactions(scenario, p, ctx)?,
        ScenarioParams::Boost(p) => run_boost(scenario, p, ctx)?,
        ScenarioParams::Composite(p) => run_composite(scenario, p, ctx)?,
        ScenarioParams::WaveResidual(p) => run_wave_residual(scenario, p, ctx)?,
        ScenarioParams::KgResidual(p) => run_kg_residual(scenario, p, ctx)?,
        ScenarioParams::SchrodingerResidual(p) => run_schrodinger(scenario, p, ctx)?,
    };
    let timing_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(RunReport::new(
        &scenario.label,
        scenario.kind().name(),
        scenario.seed,
        checks,
        timing_ms,
    ))
}

fn physics(label: &str) -> impl Fn(fourspace::Error) -> CliError + '_ {
    move |source| CliError::Physics {
        label: label.to_string(),
        source,
    }
}

/// A non-negative deviation that must sit within `bound` of zero.
fn residual_check(name: &str, value: f64, bound: f64) -> CheckResult {
    CheckResult::within_abs(name, value, 0.0, bound)
}

fn invalid(label: &str, reason: impl Into<String>) -> CliError {
    CliError::Invalid {
        label: label.to_string(),
        reason: reason.into(),
    }
}

fn run_scales(constants: &PhysicalConstants) -> Vec<CheckResult> {
    let compton = compton_wavelength(constants.m_e, constants).expect("electron mass is positive");
    let klein = klein_circumference(constants);
    vec![
        CheckResult::within_rel(
            "electron_compton_wavelength",
            compton,
            COMPTON_ELECTRON_PUBLISHED,
            COMPTON_REL,
        ),
        CheckResult::within_rel(
            "klein_circumference_published",
            klein,
            KLEIN_PUBLISHED,
            KLEIN_PUBLISHED_REL,
        ),
        CheckResult::within_rel(
            "klein_circumference_derived",
            klein,
            KLEIN_DERIVED,
            KLEIN_DERIVED_REL,
        ),
        CheckResult::at_least("compton_klein_ratio", compton / klein, SCALE_RATIO_FLOOR),
    ]
}

fn run_reactions(
    scenario: &Scenario,
    params: &ReactionSuiteParams,
    ctx: &ExecContext,
) -> Result<Vec<CheckResult>, CliError> {
    let constants = &ctx.constants;
    let table = match ctx.table.as_ref().or(params.table.as_ref()) {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
                path: path.clone(),
                source,
            })?;
            ParticleTable::parse_csv(&text, constants).map_err(|source| CliError::Table {
                path: path.clone(),
                source,
            })?
        }
        None => bundled_particle_table(constants),
    };
    let reactions = match &params.reactions {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
                path: path.clone(),
                source,
            })?;
            Reaction::list_from_json(&text).map_err(|source| CliError::Reactions {
                path: path.clone(),
                source,
            })?
        }
        None => bundled_reactions(),
    };
    let tol = ctx.tolerance.unwrap_or(params.tolerance);

    let suite = run_reaction_suite(&reactions, &table, tol, constants);
    let mut checks = Vec::with_capacity(reactions.len() * 3);
    for outcome in suite.outcomes {
        let report = outcome.map_err(physics(&scenario.label))?;
        checks.push(residual_check(
            &format!("{}/charge", report.label),
            report.charge.residual,
            tol,
        ));
        checks.push(residual_check(
            &format!("{}/w_momentum", report.label),
            report.w_momentum.residual,
            tol,
        ));
        checks.push(
            residual_check(
                &format!("{}/rest_mass", report.label),
                report.rest_mass.residual,
                tol,
            )
            .reported_only(),
        );
    }
    Ok(checks)
}

fn unit_direction(rng: &mut ChaCha8Rng) -> Vec3 {
    let [x, y, z]: [f64; 3] = UnitSphere.sample(rng);
    Vec3::new(x, y, z)
}

fn run_boost(
    scenario: &Scenario,
    params: &BoostParams,
    ctx: &ExecContext,
) -> Result<Vec<CheckResult>, CliError> {
    let constants = &ctx.constants;
    let label = &scenario.label;
    if params.directions == 0 {
        return Err(invalid(label, "directions must be at least 1"));
    }
    let state = composite_state(
        Vec3::new(0.0, 0.0, params.wave_number),
        Complex64::ONE,
        constants,
    )
    .map_err(physics(label))?;
    let energy0 = state.total_energy(constants);

    let mut rng = ChaCha8Rng::seed_from_u64(scenario.seed);
    let mut ratios = Vec::with_capacity(params.directions as usize);
    for _ in 0..params.directions {
        let v = unit_direction(&mut rng) * (params.beta * constants.c);
        let boosted = boost_composite(&state, v, constants).map_err(physics(label))?;
        ratios.push(boosted.total_energy(constants) / energy0);
    }
    let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
    let spread = ratios.iter().cloned().fold(f64::MIN, f64::max)
        - ratios.iter().cloned().fold(f64::MAX, f64::min);
    let gamma_expected = Boost::new(Vec3::new(params.beta * constants.c, 0.0, 0.0), constants)
        .map_err(physics(label))?
        .gamma();

    let mut checks = vec![
        CheckResult::within_rel("energy_ratio_mean", mean, gamma_expected, BOOST_REL),
        residual_check("energy_ratio_spread", spread, BOOST_REL),
    ];
    for &beta in &params.mass_betas {
        let v = unit_direction(&mut rng) * (beta * constants.c);
        let boosted = boost_composite(&state, v, constants).map_err(physics(label))?;
        let factor = boosted.total_energy(constants) / energy0;
        let expected = 1.0 / ((1.0 - beta) * (1.0 + beta)).sqrt();
        checks.push(CheckResult::within_rel(
            &format!("mass_factor_beta_{beta}"),
            factor,
            expected,
            BOOST_REL,
        ));
    }
    Ok(checks)
}

fn run_composite(
    scenario: &Scenario,
    params: &CompositeParams,
    ctx: &ExecContext,
) -> Result<Vec<CheckResult>, CliError> {
    let constants = &ctx.constants;
    let label = &scenario.label;
    if params.directions == 0 {
        return Err(invalid(label, "directions must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(scenario.seed);
    let k3 = unit_direction(&mut rng) * params.wave_number;
    let state = composite_state(k3, Complex64::ONE, constants).map_err(physics(label))?;

    let hbar = constants.hbar();
    let momentum_scale = 2.0 * hbar * k3.norm();
    let momentum_residual = state.total_momentum(constants).0.spatial().norm() / momentum_scale;
    let energy = state.total_energy(constants);
    let energy_expected = 2.0 * hbar * constants.c * k3.norm();
    let mass = composite_rest_mass(&state, constants).map_err(physics(label))?;
    let mass_expected = 2.0 * hbar * k3.norm() / constants.c;

    let mut ratio_min = f64::MAX;
    let mut ratio_max = f64::MIN;
    let mut worst_closure: f64 = 0.0;
    let mut worst_mass_dev: f64 = 0.0;
    let c2 = constants.c * constants.c;
    for _ in 0..params.directions {
        let v = unit_direction(&mut rng) * (params.beta * constants.c);
        let boosted = boost_composite(&state, v, constants).map_err(physics(label))?;
        let boosted_energy = boosted.total_energy(constants);
        let p3 = boosted.total_momentum(constants).0.spatial();
        let ratio = boosted_energy / energy;
        ratio_min = ratio_min.min(ratio);
        ratio_max = ratio_max.max(ratio);
        worst_closure =
            worst_closure.max(verify_energy_momentum(boosted_energy, p3, mass, constants).abs());
        let invariant_mass = (boosted_energy * boosted_energy - p3.norm_sqr() * c2).sqrt() / c2;
        worst_mass_dev = worst_mass_dev.max((invariant_mass - mass).abs() / mass);
    }

    Ok(vec![
        residual_check("momentum_residual", momentum_residual, IDENTITY_REL),
        CheckResult::within_rel("total_energy", energy, energy_expected, IDENTITY_REL),
        CheckResult::within_rel("rest_mass", mass, mass_expected, IDENTITY_REL),
        residual_check(
            "boost_energy_ratio_spread",
            ratio_max - ratio_min,
            BOOST_REL,
        ),
        residual_check("boost_closure_residual", worst_closure, BOOST_REL),
        residual_check("boosted_mass_invariance", worst_mass_dev, BOOST_REL),
    ])
}

/// A lattice sized so the dimensionless step h |k| (and omega dt) equals
/// `fraction`, anchored away from coordinate zeros.
fn residual_grid(state: &WaveState, fraction: f64, extent: usize) -> GridSpec {
    let kmax = state.max_wave_number().max(f64::MIN_POSITIVE);
    let omega_max = state.max_frequency().max(f64::MIN_POSITIVE);
    GridSpec {
        spacing: [fraction / kmax; 4],
        dt: fraction / omega_max,
        extents: [extent; 4],
        origin: Vector4::new(0.1 / kmax, -0.3 / kmax, 0.07 / kmax, 0.2 / kmax),
        t0: 0.15 / omega_max,
    }
}

fn random_superposition(
    count: usize,
    rng: &mut ChaCha8Rng,
    constants: &PhysicalConstants,
) -> WaveState {
    use rand::Rng;
    let components = (0..count)
        .map(|_| {
            let k = Vector4::new(
                rng.random_range(-1.5..1.5),
                rng.random_range(-1.5..1.5),
                rng.random_range(-1.5..1.5),
                rng.random_range(-1.5..1.5),
            );
            let amp = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            PlaneWave::new(k, amp, constants).expect("finite random wave")
        })
        .collect();
    WaveState::new(components)
}

fn run_wave_residual(
    scenario: &Scenario,
    params: &WaveResidualParams,
    ctx: &ExecContext,
) -> Result<Vec<CheckResult>, CliError> {
    let constants = &ctx.constants;
    let label = &scenario.label;
    let superposition = match &params.waves {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
                path: path.clone(),
                source,
            })?;
            WaveState::from_json(&text, constants).map_err(|source| CliError::Waves {
                path: path.clone(),
                source,
            })?
        }
        None => {
            if params.random_components == 0 {
                return Err(invalid(label, "random_components must be at least 1"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(scenario.seed);
            random_superposition(params.random_components, &mut rng, constants)
        }
    };

    let single_k = Vector4::new(0.3, -1.1, 0.7, 0.4);
    let single = WaveState::new(vec![PlaneWave::new(
        single_k,
        Complex64::new(1.0, 0.5),
        constants,
    )
    .map_err(physics(label))?]);
    let detuned = WaveState::new(vec![PlaneWave::with_omega(
        single_k,
        0.5 * constants.c * single_k.norm(),
        Complex64::ONE,
    )
    .map_err(physics(label))?]);

    let residual = |state: &WaveState, fraction: f64| -> Result<f64, CliError> {
        wave_equation_residual(
            state,
            &residual_grid(state, fraction, params.extent),
            constants,
        )
        .map_err(physics(label))
    };

    let plane_wave_residual = residual(&single, params.step_fraction)?;
    let superposition_residual = residual(&superposition, params.step_fraction)?;
    let coarse = residual(&superposition, ORDER_STEP_FRACTION)?;
    let fine = residual(&superposition, ORDER_STEP_FRACTION / 2.0)?;
    let order = (coarse / fine).log2();
    let detuned_residual = residual(&detuned, params.step_fraction)?;

    Ok(vec![
        residual_check("plane_wave_residual", plane_wave_residual, GRID_RESIDUAL),
        residual_check(
            "superposition_residual",
            superposition_residual,
            GRID_RESIDUAL,
        ),
        CheckResult::within_abs("convergence_order", order, 2.0, ORDER_BAND),
        CheckResult::at_least("detuned_residual", detuned_residual, DETUNED_RESIDUAL_FLOOR),
    ])
}

/// Grid for the three-space residuals; the w axis is handled analytically.
fn spatial_grid(k_scale: f64, fraction: f64, extent: usize, t0: f64) -> GridSpec {
    GridSpec {
        spacing: [fraction / k_scale; 4],
        dt: 1.0,
        extents: [extent; 4],
        origin: Vector4::new(0.0, 0.01 / k_scale, 0.01 / k_scale, 0.01 / k_scale),
        t0,
    }
}

fn run_kg_residual(
    scenario: &Scenario,
    params: &KgResidualParams,
    ctx: &ExecContext,
) -> Result<Vec<CheckResult>, CliError> {
    let constants = &ctx.constants;
    let label = &scenario.label;
    if params.mass_mev <= 0.0 {
        return Err(invalid(label, "mass_mev must be positive"));
    }
    if params.k3_ratio <= 0.0 {
        return Err(invalid(label, "k3_ratio must be positive"));
    }
    let m0 = constants.mev_to_kg(params.mass_mev);
    let kw = m0 * constants.c / constants.hbar();

    let resting = WaveState::new(vec![PlaneWave::new(
        Vector4::new(kw, 0.0, 0.0, 0.0),
        Complex64::ONE,
        constants,
    )
    .map_err(physics(label))?]);
    let dir = Vec3::new(0.6, -0.48, 0.64);
    let k3 = dir * (params.k3_ratio * kw / dir.norm());
    let moving = WaveState::new(vec![PlaneWave::new(
        Vector4::from_parts(kw, k3),
        Complex64::ONE,
        constants,
    )
    .map_err(physics(label))?]);
    let massless = WaveState::new(vec![PlaneWave::new(
        Vector4::new(0.0, 1.3, -0.4, 0.8),
        Complex64::new(0.5, 0.5),
        constants,
    )
    .map_err(physics(label))?]);

    let residual = |state: &WaveState, mass: f64, fraction: f64| -> Result<f64, CliError> {
        let k_scale = state.max_wave_number();
        klein_gordon_residual(
            state,
            mass,
            &spatial_grid(k_scale, fraction, params.extent, 1e-22),
            constants,
        )
        .map_err(physics(label))
    };

    let resting_residual = residual(&resting, m0, params.step_fraction)?;
    let moving_residual = residual(&moving, m0, params.step_fraction)?;
    let coarse = residual(&moving, m0, ORDER_STEP_FRACTION)?;
    let fine = residual(&moving, m0, ORDER_STEP_FRACTION / 2.0)?;
    let order = (coarse / fine).log2();
    let massless_residual = residual(&massless, 0.0, params.step_fraction)?;

    Ok(vec![
        residual_check(
            "resting_mode_residual",
            resting_residual,
            ANALYTIC_CANCELLATION,
        ),
        residual_check("moving_mode_residual", moving_residual, GRID_RESIDUAL),
        CheckResult::within_abs("convergence_order", order, 2.0, ORDER_BAND),
        residual_check(
            "massless_reduction_residual",
            massless_residual,
            GRID_RESIDUAL,
        ),
    ])
}

fn run_schrodinger(
    scenario: &Scenario,
    params: &SchrodingerParams,
    ctx: &ExecContext,
) -> Result<Vec<CheckResult>, CliError> {
    let constants = &ctx.constants;
    let label = &scenario.label;
    if params.mass_mev <= 0.0 {
        return Err(invalid(label, "mass_mev must be positive"));
    }
    if params.ratios.len() < 2 {
        return Err(invalid(label, "ratios needs at least two sweep points"));
    }
    if params.ratios.windows(2).any(|pair| pair[0] >= pair[1]) {
        return Err(invalid(label, "ratios must be strictly increasing"));
    }
    let m0 = constants.mev_to_kg(params.mass_mev);
    let kw = m0 * constants.c / constants.hbar();

    let resting = WaveState::new(vec![PlaneWave::new(
        Vector4::new(kw, 0.0, 0.0, 0.0),
        Complex64::ONE,
        constants,
    )
    .map_err(physics(label))?]);
    let rest_grid = spatial_grid(kw, params.step_fraction, params.extent, 0.0);
    let rest_residual =
        schrodinger_residual(&resting, m0, &rest_grid, constants).map_err(physics(label))?;

    let mut residuals = Vec::with_capacity(params.ratios.len());
    for &ratio in &params.ratios {
        let k3 = ratio * kw;
        let state = WaveState::new(vec![PlaneWave::new(
            Vector4::new(kw, 0.0, 0.0, k3),
            Complex64::ONE,
            constants,
        )
        .map_err(physics(label))?]);
        let grid = spatial_grid(
            k3,
            params.step_fraction,
            params.extent,
            0.15 / (constants.c * k3),
        );
        residuals.push(schrodinger_residual(&state, m0, &grid, constants).map_err(physics(label))?);
    }
    let edge_residual = *residuals.last().expect("at least two sweep points");

    // least-squares slope of ln(residual) against ln(ratio)
    let logs: Vec<(f64, f64)> = params
        .ratios
        .iter()
        .zip(&residuals)
        .map(|(&r, &res)| (r.ln(), res.ln()))
        .collect();
    let n = logs.len() as f64;
    let mean_x = logs.iter().map(|(x, _)| x).sum::<f64>() / n;
    let mean_y = logs.iter().map(|(_, y)| y).sum::<f64>() / n;
    let slope = logs
        .iter()
        .map(|(x, y)| (x - mean_x) * (y - mean_y))
        .sum::<f64>()
        / logs.iter().map(|(x, _)| (x - mean_x).powi(2)).sum::<f64>();

    Ok(vec![
        residual_check("rest_state_residual", rest_residual, ANALYTIC_CANCELLATION),
        residual_check(
            "edge_residual",
            edge_residual,
            NONRELATIVISTIC_EDGE_RESIDUAL,
        ),
        CheckResult::within_abs("scaling_exponent", slope, 2.0, SCALING_EXPONENT_BAND),
    ])
}
