use std::collections::BTreeMap;
use std::fmt::Write as _;

use homlts_core::linalg::format_scalar;
use homlts_core::{AxiomReport, Witness};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessOut {
    pub indices: Vec<usize>,
    pub defect: Vec<String>,
}

impl From<&Witness> for WitnessOut {
    fn from(w: &Witness) -> Self {
        Self {
            indices: w.indices.clone(),
            defect: w.defect.iter().map(format_scalar).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Outcome of one command.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    /// Dimensions, classification and other facts, sorted by key.
    pub facts: BTreeMap<String, String>,
    /// Checks that are reported but do not decide the outcome.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub object: Option<serde_json::Value>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            passed: true,
            checks: Vec::new(),
            facts: BTreeMap::new(),
            notes: Vec::new(),
            object: None,
        }
    }

    pub fn check(&mut self, name: impl Into<String>, witness: Option<&Witness>) {
        let passed = witness.is_none();
        self.passed &= passed;
        self.checks.push(Check {
            name: name.into(),
            passed,
            witness: witness.map(WitnessOut::from),
            detail: None,
        });
    }

    pub fn check_bool(&mut self, name: impl Into<String>, passed: bool, detail: Option<String>) {
        self.passed &= passed;
        self.checks.push(Check {
            name: name.into(),
            passed,
            witness: None,
            detail,
        });
    }

    pub fn axioms(&mut self, report: &AxiomReport) {
        for v in &report.verdicts {
            self.check(v.axiom, v.witness.as_ref());
        }
    }

    pub fn note(&mut self, report: &AxiomReport) {
        for v in &report.verdicts {
            self.notes.push(Check {
                name: v.axiom.to_string(),
                passed: v.passed(),
                witness: v.witness.as_ref().map(WitnessOut::from),
                detail: None,
            });
        }
    }

    pub fn fact(&mut self, key: &str, value: impl ToString) {
        self.facts.insert(key.to_string(), value.to_string());
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        for (k, v) in &self.facts {
            writeln!(out, "{k}: {v}").unwrap();
        }
        let line = |out: &mut String, prefix: &str, c: &Check| {
            let status = if c.passed { "pass" } else { "FAIL" };
            write!(out, "{prefix} {}: {status}", c.name).unwrap();
            if let Some(w) = &c.witness {
                write!(out, " at {:?}, defect [{}]", w.indices, w.defect.join(", ")).unwrap();
            }
            if let Some(d) = &c.detail {
                write!(out, " ({d})").unwrap();
            }
            out.push('\n');
        };
        for c in &self.checks {
            line(&mut out, "check", c);
        }
        for c in &self.notes {
            line(&mut out, "note", c);
        }
        writeln!(out, "result: {}", if self.passed { "pass" } else { "fail" }).unwrap();
        out
    }

    pub fn render_json(&self) -> String {
        crate::file::to_json(self)
    }
}
