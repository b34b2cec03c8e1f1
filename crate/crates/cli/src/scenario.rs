//! Scenario files: one JSON document per run, with a `kind`, an optional
//! `label`, `seed`, and `output` block, and kind-specific `params`.
//! Unknown keys are rejected everywhere.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use fourspace::tolerances;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScenarioKind {
    ReactionSuite,
    Boost,
    WaveResidual,
    KgResidual,
    SchrodingerResidual,
    Composite,
    Scales,
}

impl ScenarioKind {
    pub const ALL: [ScenarioKind; 7] = [
        ScenarioKind::ReactionSuite,
        ScenarioKind::Boost,
        ScenarioKind::WaveResidual,
        ScenarioKind::KgResidual,
        ScenarioKind::SchrodingerResidual,
        ScenarioKind::Composite,
        ScenarioKind::Scales,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ScenarioKind::ReactionSuite => "reaction-suite",
            ScenarioKind::Boost => "boost",
            ScenarioKind::WaveResidual => "wave-residual",
            ScenarioKind::KgResidual => "kg-residual",
            ScenarioKind::SchrodingerResidual => "schrodinger-residual",
            ScenarioKind::Composite => "composite",
            ScenarioKind::Scales => "scales",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

/// Where and how the report goes; stdout when no path is given.
#[derive(Clone, Debug, Default)]
pub struct OutputSpec {
    pub format: OutputFormat,
    pub path: Option<PathBuf>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOutput {
    #[serde(default)]
    format: Option<OutputFormat>,
    #[serde(default)]
    path: Option<PathBuf>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    kind: String,
    #[serde(default)]
    label: Option<String>,
    #[serde(default)]
    seed: Option<u64>,
    #[serde(default)]
    output: Option<RawOutput>,
    #[serde(default)]
    params: Option<serde_json::Value>,
}

fn default_conservation_tolerance() -> f64 {
    tolerances::CONSERVATION_REL
}
fn default_step_fraction() -> f64 {
    tolerances::RESIDUAL_STEP_FRACTION
}
fn default_extent() -> usize {
    5
}
fn default_beta() -> f64 {
    0.6
}
fn default_directions() -> u32 {
    100
}
fn default_wave_number() -> f64 {
    2.0e10
}
fn default_mass_betas() -> Vec<f64> {
    vec![0.1, 0.5, 0.9, 0.99]
}
fn default_random_components() -> usize {
    10
}
fn default_electron_mass_mev() -> f64 {
    0.511
}
fn default_k3_ratio() -> f64 {
    1.0
}
fn default_ratios() -> Vec<f64> {
    vec![0.0125, 0.025, 0.05, 0.1]
}

/// Conservation ledger over a reaction list (bundled fixtures by default).
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReactionSuiteParams {
    #[serde(default)]
    pub table: Option<PathBuf>,
    #[serde(default)]
    pub reactions: Option<PathBuf>,
    #[serde(default = "default_conservation_tolerance")]
    pub tolerance: f64,
}

/// Zero-momentum composite boosted through seeded random directions, plus
/// closed-form mass-factor checks.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoostParams {
    #[serde(default = "default_beta")]
    pub beta: f64,
    #[serde(default = "default_directions")]
    pub directions: u32,
    #[serde(default = "default_wave_number")]
    pub wave_number: f64,
    #[serde(default = "default_mass_betas")]
    pub mass_betas: Vec<f64>,
}

/// Wave-equation residual and convergence checks; components may come from
/// a wave-state file or a seeded random superposition.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WaveResidualParams {
    #[serde(default)]
    pub waves: Option<PathBuf>,
    #[serde(default = "default_random_components")]
    pub random_components: usize,
    #[serde(default = "default_step_fraction")]
    pub step_fraction: f64,
    #[serde(default = "default_extent")]
    pub extent: usize,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KgResidualParams {
    #[serde(default = "default_electron_mass_mev")]
    pub mass_mev: f64,
    /// |k3| in units of m0 c / hbar for the moving mode.
    #[serde(default = "default_k3_ratio")]
    pub k3_ratio: f64,
    #[serde(default = "default_step_fraction")]
    pub step_fraction: f64,
    #[serde(default = "default_extent")]
    pub extent: usize,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchrodingerParams {
    #[serde(default = "default_electron_mass_mev")]
    pub mass_mev: f64,
    /// Sweep of |k3| hbar / (m0 c) values, ascending.
    #[serde(default = "default_ratios")]
    pub ratios: Vec<f64>,
    #[serde(default = "default_step_fraction")]
    pub step_fraction: f64,
    #[serde(default = "default_extent")]
    pub extent: usize,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompositeParams {
    #[serde(default = "default_wave_number")]
    pub wave_number: f64,
    #[serde(default = "default_beta")]
    pub beta: f64,
    #[serde(default = "default_directions")]
    pub directions: u32,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScalesParams {}

#[derive(Clone, Debug)]
pub enum ScenarioParams {
    ReactionSuite(ReactionSuiteParams),
    Boost(BoostParams),
    WaveResidual(WaveResidualParams),
    KgResidual(KgResidualParams),
    SchrodingerResidual(SchrodingerParams),
    Composite(CompositeParams),
    Scales(ScalesParams),
}

/// A validated scenario, ready to execute.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub label: String,
    pub seed: u64,
    pub output: OutputSpec,
    pub params: ScenarioParams,
}

impl Scenario {
    pub fn kind(&self) -> ScenarioKind {
        match &self.params {
            ScenarioParams::ReactionSuite(_) => ScenarioKind::ReactionSuite,
            ScenarioParams::Boost(_) => ScenarioKind::Boost,
            ScenarioParams::WaveResidual(_) => ScenarioKind::WaveResidual,
            ScenarioParams::KgResidual(_) => ScenarioKind::KgResidual,
            ScenarioParams::SchrodingerResidual(_) => ScenarioKind::SchrodingerResidual,
            ScenarioParams::Composite(_) => ScenarioKind::Composite,
            ScenarioParams::Scales(_) => ScenarioKind::Scales,
        }
    }

    /// Parses a scenario document from JSON text.
    pub fn parse_str(text: &str) -> Result<Scenario, CliError> {
        let raw: RawScenario = serde_json::from_str(text)?;
        let kind = ScenarioKind::from_name(&raw.kind).ok_or_else(|| CliError::UnknownKind {
            kind: raw.kind.clone(),
            known: ScenarioKind::ALL
                .iter()
                .map(|k| k.name())
                .collect::<Vec<_>>()
                .join(", "),
        })?;
        let params_value = raw
            .params
            .unwrap_or_else(|| serde_json::Value::Object(Default::default()));
        let params = parse_params(kind, params_value)?;
        let output = match raw.output {
            Some(o) => OutputSpec {
                format: o.format.unwrap_or_default(),
                path: o.path,
            },
            None => OutputSpec::default(),
        };
        Ok(Scenario {
            label: raw.label.unwrap_or_else(|| kind.name().to_string()),
            seed: raw.seed.unwrap_or(0),
            output,
            params,
        })
    }

    /// Reads and parses a scenario file.
    pub fn from_file(path: &Path) -> Result<Scenario, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
            path: path.to_path_buf(),
            source,
        })?;
        Scenario::parse_str(&text)
    }

    /// The all-defaults scenario for a kind, as the bare subcommands use.
    pub fn default_for(kind: ScenarioKind) -> Scenario {
        let params = parse_params(kind, serde_json::Value::Object(Default::default()))
            .expect("defaults deserialize");
        Scenario {
            label: kind.name().to_string(),
            seed: 0,
            output: OutputSpec::default(),
            params,
        }
    }
}

fn parse_params(kind: ScenarioKind, value: serde_json::Value) -> Result<ScenarioParams, CliError> {
    let wrap = |source| CliError::Params {
        kind: kind.name(),
        source,
    };
    Ok(match kind {
        ScenarioKind::ReactionSuite => {
            ScenarioParams::ReactionSuite(serde_json::from_value(value).map_err(wrap)?)
        }
        ScenarioKind::Boost => ScenarioParams::Boost(serde_json::from_value(value).map_err(wrap)?),
        ScenarioKind::WaveResidual => {
            ScenarioParams::WaveResidual(serde_json::from_value(value).map_err(wrap)?)
        }
        ScenarioKind::KgResidual => {
            ScenarioParams::KgResidual(serde_json::from_value(value).map_err(wrap)?)
        }
        ScenarioKind::SchrodingerResidual => {
            ScenarioParams::SchrodingerResidual(serde_json::from_value(value).map_err(wrap)?)
        }
        ScenarioKind::Composite => {
            ScenarioParams::Composite(serde_json::from_value(value).map_err(wrap)?)
        }
        ScenarioKind::Scales => {
            ScenarioParams::Scales(serde_json::from_value(value).map_err(wrap)?)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_scales_scenario_is_valid() {
        let s = Scenario::parse_str(r#"{"kind": "scales"}"#).unwrap();
        assert_eq!(s.kind(), ScenarioKind::Scales);
        assert_eq!(s.label, "scales");
        assert_eq!(s.seed, 0);
        assert!(s.output.path.is_none());
    }

    #[test]
    fn unknown_kind_is_rejected_with_the_known_list() {
        let err = Scenario::parse_str(r#"{"kind": "warp"}"#).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("warp"));
        assert!(msg.contains("reaction-suite"));
        assert!(msg.contains("scales"));
    }

    #[test]
    fn unknown_top_level_key_is_rejected() {
        let err = Scenario::parse_str(r#"{"kind": "scales", "warp_factor": 9}"#).unwrap_err();
        assert!(err.to_string().contains("warp_factor"));
    }

    #[test]
    fn unknown_params_key_is_rejected() {
        let err = Scenario::parse_str(r#"{"kind": "boost", "params": {"beta": 0.5, "warp": 1}}"#)
            .unwrap_err();
        assert!(err.to_string().contains("warp"));
    }

    #[test]
    fn malformed_json_reports_line_and_column() {
        let err = Scenario::parse_str("{\n  \"kind\": \"scales\",,\n}").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line"), "{msg}");
        assert!(msg.contains("column"), "{msg}");
    }

    #[test]
    fn boost_params_take_defaults() {
        let s = Scenario::parse_str(r#"{"kind": "boost", "seed": 3}"#).unwrap();
        assert_eq!(s.seed, 3);
        match s.params {
            ScenarioParams::Boost(p) => {
                assert_eq!(p.beta, 0.6);
                assert_eq!(p.directions, 100);
                assert_eq!(p.mass_betas, vec![0.1, 0.5, 0.9, 0.99]);
            }
            other => panic!("wrong params {other:?}"),
        }
    }

    #[test]
    fn output_block_parses() {
        let s = Scenario::parse_str(
            r#"{"kind": "scales", "output": {"format": "csv", "path": "out.csv"}}"#,
        )
        .unwrap();
        assert_eq!(s.output.format, OutputFormat::Csv);
        assert_eq!(s.output.path.as_deref(), Some(Path::new("out.csv")));
    }

    #[test]
    fn every_kind_has_a_default_scenario() {
        for kind in ScenarioKind::ALL {
            let s = Scenario::default_for(kind);
            assert_eq!(s.kind(), kind);
            assert_eq!(ScenarioKind::from_name(kind.name()), Some(kind));
        }
    }
}
