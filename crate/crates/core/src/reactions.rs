//! Particle-table ingestion and the conservation ledger.
//!
//! The ledger tallies charge, w-momentum, and summed rest mass across each
//! side of a reaction. Charge and w-momentum are proportional (p_w depends on
//! charge alone), so their verdicts always agree; the rest-mass sum is
//! tracked as a reported finding and is expected to fail on real decays.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::constants::PhysicalConstants;
use crate::error::Error;
use crate::kinematics::w_momentum_from_charge;

/// Relative slack allowed when checking that a charge is an integer number
/// of electron charges.
const CHARGE_INTEGER_REL: f64 = 1e-9;

/// One row of the particle table.
#[derive(Clone, Debug, PartialEq)]
pub struct ParticleSpecies {
    pub name: String,
    /// Charge in coulombs (signed).
    pub charge: f64,
    /// Rest mass in kilograms.
    pub rest_mass: f64,
    /// Elementary (true) or composite (false).
    pub is_simple: bool,
    /// Charge in units of the signed electron charge, as ingested.
    pub charge_e: f64,
    /// Rest mass in MeV/c^2, as ingested.
    pub mass_mev: f64,
}

/// An ordered, name-keyed collection of species.
#[derive(Clone, Debug, Default)]
pub struct ParticleTable {
    entries: Vec<ParticleSpecies>,
    index: HashMap<String, usize>,
}

#[derive(Debug, Deserialize)]
struct TableRow {
    name: String,
    charge_e: f64,
    #[serde(rename = "mass_MeV")]
    mass_mev: f64,
    is_simple: String,
}

impl ParticleTable {
    /// Parses a comma-separated table with a `name,charge_e,mass_MeV,is_simple`
    /// header. `charge_e` counts signed electron charges (so the electron row
    /// carries +1 and the proton -1); masses are MeV/c^2 and are converted to
    /// kilograms once, here.
    pub fn parse_csv(text: &str, constants: &PhysicalConstants) -> Result<Self, Error> {
        let mut reader = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let headers = reader
            .headers()
            .map_err(|e| Error::Table(format!("unreadable header: {e}")))?
            .clone();
        for required in ["name", "charge_e", "mass_MeV", "is_simple"] {
            if !headers.iter().any(|h| h == required) {
                return Err(Error::Table(format!("missing column `{required}`")));
            }
        }

        let mut table = ParticleTable::default();
        let mut row_number = 1; // header is row 1
        for record in reader.deserialize::<TableRow>() {
            row_number += 1;
            let row = record.map_err(|e| Error::Table(format!("row {row_number}: {e}")))?;
            let species = validate_row(row, row_number, constants)?;
            if table.index.contains_key(&species.name) {
                return Err(Error::TableRow {
                    row: row_number,
                    name: species.name,
                    reason: "duplicate species name".into(),
                });
            }
            table
                .index
                .insert(species.name.clone(), table.entries.len());
            table.entries.push(species);
        }
        if table.entries.is_empty() {
            return Err(Error::Table("no data rows".into()));
        }
        Ok(table)
    }

    /// Serializes back to the ingestion format. Charges and masses are written
    /// in their original units, so parse -> serialize -> parse is lossless.
    pub fn to_csv_string(&self) -> String {
        let mut out = String::from("name,charge_e,mass_MeV,is_simple\n");
        for s in &self.entries {
            let kind = if s.is_simple { "simple" } else { "composite" };
            out.push_str(&format!(
                "{},{},{},{}\n",
                s.name, s.charge_e, s.mass_mev, kind
            ));
        }
        out
    }

    pub fn get(&self, name: &str) -> Option<&ParticleSpecies> {
        self.index.get(name).map(|&i| &self.entries[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = &ParticleSpecies> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn validate_row(
    row: TableRow,
    row_number: usize,
    constants: &PhysicalConstants,
) -> Result<ParticleSpecies, Error> {
    let fail = |reason: String| Error::TableRow {
        row: row_number,
        name: row.name.clone(),
        reason,
    };
    if row.name.is_empty() {
        return Err(Error::TableRow {
            row: row_number,
            name: "<unnamed>".into(),
            reason: "empty species name".into(),
        });
    }
    if !row.charge_e.is_finite() || !row.mass_mev.is_finite() {
        return Err(fail("non-finite charge or mass".into()));
    }
    if row.mass_mev < 0.0 {
        return Err(fail(format!("negative mass {} MeV", row.mass_mev)));
    }
    let nearest = row.charge_e.round();
    if (row.charge_e - nearest).abs() > CHARGE_INTEGER_REL * row.charge_e.abs().max(1.0) {
        return Err(fail(format!(
            "charge {} is not an integer multiple of the electron charge",
            row.charge_e
        )));
    }
    let is_simple = match row.is_simple.to_ascii_lowercase().as_str() {
        "simple" | "true" => true,
        "composite" | "false" => false,
        other => return Err(fail(format!("unrecognized is_simple value `{other}`"))),
    };
    Ok(ParticleSpecies {
        charge: row.charge_e * constants.e_electron,
        rest_mass: constants.mev_to_kg(row.mass_mev),
        is_simple,
        charge_e: row.charge_e,
        mass_mev: row.mass_mev,
        name: row.name,
    })
}

/// w-momentum of a species: set by its charge alone, independent of mass.
pub fn species_w_momentum(species: &ParticleSpecies, constants: &PhysicalConstants) -> f64 {
    w_momentum_from_charge(species.charge, constants)
}

/// A labelled reaction: species names on each side.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Reaction {
    pub label: String,
    pub inputs: Vec<String>,
    pub outputs: Vec<String>,
}

impl Reaction {
    /// Parses a JSON list of `{label, inputs[], outputs[]}` entries.
    pub fn list_from_json(text: &str) -> Result<Vec<Reaction>, Error> {
        let reactions: Vec<Reaction> =
            serde_json::from_str(text).map_err(|e| Error::ReactionFile(e.to_string()))?;
        for r in &reactions {
            r.validate_shape()?;
        }
        Ok(reactions)
    }

    fn validate_shape(&self) -> Result<(), Error> {
        if self.inputs.is_empty() {
            return Err(Error::EmptyReactionSide {
                label: self.label.clone(),
                side: "input",
            });
        }
        if self.outputs.is_empty() {
            return Err(Error::EmptyReactionSide {
                label: self.label.clone(),
                side: "output",
            });
        }
        Ok(())
    }
}

/// Pass/fail with the normalized residual that decided it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Verdict {
    pub passed: bool,
    /// |in - out| / scale, with scale = max(|in|, |out|, floor).
    pub residual: f64,
}

/// Per-reaction conservation tallies and verdicts.
#[derive(Clone, Debug)]
pub struct ConservationReport {
    pub label: String,
    pub charge_in: f64,
    pub charge_out: f64,
    pub w_momentum_in: f64,
    pub w_momentum_out: f64,
    pub rest_mass_in: f64,
    pub rest_mass_out: f64,
    pub charge: Verdict,
    pub w_momentum: Verdict,
    /// Reported only; a failure here is a finding, not an error.
    pub rest_mass: Verdict,
}

fn verdict(sum_in: f64, sum_out: f64, tol: f64, floor: f64) -> Verdict {
    let scale = sum_in.abs().max(sum_out.abs()).max(floor);
    let residual = (sum_in - sum_out).abs() / scale;
    Verdict {
        passed: residual <= tol,
        residual,
    }
}

/// Tallies one reaction against a table at a relative tolerance.
pub fn check_reaction(
    reaction: &Reaction,
    table: &ParticleTable,
    tol: f64,
    constants: &PhysicalConstants,
) -> Result<ConservationReport, Error> {
    reaction.validate_shape()?;
    let resolve = |names: &[String]| -> Result<Vec<&ParticleSpecies>, Error> {
        names
            .iter()
            .map(|n| {
                table.get(n).ok_or_else(|| Error::UnknownSpecies {
                    name: n.clone(),
                    reaction: reaction.label.clone(),
                })
            })
            .collect()
    };
    let inputs = resolve(&reaction.inputs)?;
    let outputs = resolve(&reaction.outputs)?;

    let sum = |side: &[&ParticleSpecies], f: &dyn Fn(&ParticleSpecies) -> f64| -> f64 {
        side.iter().map(|s| f(s)).sum()
    };
    let charge_in = sum(&inputs, &|s| s.charge);
    let charge_out = sum(&outputs, &|s| s.charge);
    let w_in = sum(&inputs, &|s| species_w_momentum(s, constants));
    let w_out = sum(&outputs, &|s| species_w_momentum(s, constants));
    let mass_in = sum(&inputs, &|s| s.rest_mass);
    let mass_out = sum(&outputs, &|s| s.rest_mass);

    let m_e_c = constants.m_e * constants.c;
    Ok(ConservationReport {
        label: reaction.label.clone(),
        charge_in,
        charge_out,
        w_momentum_in: w_in,
        w_momentum_out: w_out,
        rest_mass_in: mass_in,
        rest_mass_out: mass_out,
        charge: verdict(charge_in, charge_out, tol, constants.elementary_charge()),
        w_momentum: verdict(w_in, w_out, tol, m_e_c),
        rest_mass: verdict(mass_in, mass_out, tol, constants.m_e),
    })
}

/// Pass/fail counts across a suite.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SuiteSummary {
    pub reactions: usize,
    pub errors: usize,
    pub charge_failures: usize,
    pub w_momentum_failures: usize,
    pub rest_mass_failures: usize,
}

/// Suite results in input order, with per-reaction errors kept in place so
/// one bad entry does not sink the rest.
#[derive(Debug)]
pub struct SuiteReport {
    pub outcomes: Vec<Result<ConservationReport, Error>>,
    pub summary: SuiteSummary,
}

/// Checks every reaction, preserving input order.
pub fn run_reaction_suite(
    reactions: &[Reaction],
    table: &ParticleTable,
    tol: f64,
    constants: &PhysicalConstants,
) -> SuiteReport {
    let outcomes: Vec<_> = reactions
        .iter()
        .map(|r| check_reaction(r, table, tol, constants))
        .collect();
    let mut summary = SuiteSummary {
        reactions: reactions.len(),
        ..Default::default()
    };
    for outcome in &outcomes {
        match outcome {
            Ok(report) => {
                if !report.charge.passed {
                    summary.charge_failures += 1;
                }
                if !report.w_momentum.passed {
                    summary.w_momentum_failures += 1;
                }
                if !report.rest_mass.passed {
                    summary.rest_mass_failures += 1;
                }
            }
            Err(_) => summary.errors += 1,
        }
    }
    SuiteReport { outcomes, summary }
}

/// The particle table shipped with the library.
pub fn bundled_particle_table(constants: &PhysicalConstants) -> ParticleTable {
    ParticleTable::parse_csv(include_str!("../data/particles.csv"), constants)
        .expect("bundled particle table is valid")
}

/// The well-known annihilation, decay, and capture reactions shipped with
/// the library.
pub fn bundled_reactions() -> Vec<Reaction> {
    Reaction::list_from_json(include_str!("../data/reactions.json"))
        .expect("bundled reaction list is valid")
}
