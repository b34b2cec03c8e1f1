//! Run reports: a list of named checks with values, bounds, and verdicts.
//!
//! JSON output has a stable key order (struct order) and isolates timing in
//! its own key so byte-level comparisons can exclude it. CSV emits one row
//! per check with the columns scenario, check, value, expected, tolerance,
//! status. Exit codes: 0 when all required checks pass, 1 when any required
//! check fails, 2 for input or usage errors.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn is_pass(self) -> bool {
        self == Status::Pass
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// How `value` is held against `expected`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Comparison {
    /// |value - expected| <= tolerance * |expected|
    WithinRel,
    /// |value - expected| <= tolerance
    WithinAbs,
    /// value <= expected
    AtMost,
    /// value >= expected
    AtLeast,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub value: f64,
    pub expected: f64,
    pub tolerance: f64,
    pub cmp: Comparison,
    /// Reported-only checks (required = false) never flip the run status.
    pub required: bool,
    pub status: Status,
}

impl CheckResult {
    fn build(name: &str, value: f64, expected: f64, tolerance: f64, cmp: Comparison) -> Self {
        let ok = match cmp {
            Comparison::WithinRel => (value - expected).abs() <= tolerance * expected.abs(),
            Comparison::WithinAbs => (value - expected).abs() <= tolerance,
            Comparison::AtMost => value <= expected,
            Comparison::AtLeast => value >= expected,
        };
        CheckResult {
            name: name.to_string(),
            value,
            expected,
            tolerance,
            cmp,
            required: true,
            status: if ok { Status::Pass } else { Status::Fail },
        }
    }

    pub fn within_rel(name: &str, value: f64, expected: f64, tolerance: f64) -> Self {
        Self::build(name, value, expected, tolerance, Comparison::WithinRel)
    }

    pub fn within_abs(name: &str, value: f64, expected: f64, tolerance: f64) -> Self {
        Self::build(name, value, expected, tolerance, Comparison::WithinAbs)
    }

    pub fn at_most(name: &str, value: f64, bound: f64) -> Self {
        Self::build(name, value, bound, 0.0, Comparison::AtMost)
    }

    pub fn at_least(name: &str, value: f64, bound: f64) -> Self {
        Self::build(name, value, bound, 0.0, Comparison::AtLeast)
    }

    /// Marks the check as a reported finding rather than a gate.
    pub fn reported_only(mut self) -> Self {
        self.required = false;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub scenario: String,
    pub kind: String,
    pub seed: u64,
    pub status: Status,
    pub checks: Vec<CheckResult>,
    /// Wall-clock execution time; excluded from golden comparisons.
    pub timing_ms: f64,
}

impl RunReport {
    pub fn new(
        scenario: &str,
        kind: &str,
        seed: u64,
        checks: Vec<CheckResult>,
        timing_ms: f64,
    ) -> Self {
        let failed = checks
            .iter()
            .any(|c| c.required && c.status == Status::Fail);
        RunReport {
            scenario: scenario.to_string(),
            kind: kind.to_string(),
            seed,
            status: if failed { Status::Fail } else { Status::Pass },
            checks,
            timing_ms,
        }
    }

    pub fn passed(&self) -> bool {
        self.status.is_pass()
    }

    /// 0 when every required check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json_string(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn to_csv_string(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer
            .write_record([
                "scenario",
                "check",
                "value",
                "expected",
                "tolerance",
                "status",
            ])
            .expect("csv header");
        for check in &self.checks {
            writer
                .write_record([
                    self.scenario.as_str(),
                    check.name.as_str(),
                    &check.value.to_string(),
                    &check.expected.to_string(),
                    &check.tolerance.to_string(),
                    &check.status.to_string(),
                ])
                .expect("csv row");
        }
        String::from_utf8(writer.into_inner().expect("csv flush")).expect("csv utf8")
    }
}
