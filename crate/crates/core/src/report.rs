//! Verification reports shared by the checkers and the command line.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// A single counterexample.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Witness {
    pub element: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residue: Option<usize>,
    pub observed: String,
    pub expected: String,
}

impl Witness {
    pub fn new(
        element: impl Into<String>,
        residue: Option<usize>,
        observed: impl Into<String>,
        expected: impl Into<String>,
    ) -> Self {
        Witness {
            element: element.into(),
            residue,
            observed: observed.into(),
            expected: expected.into(),
        }
    }
}

/// Outcome of one named check. Passes iff it has no witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub status: Status,
    /// Informational checks are reported but never fail a run.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub informational: bool,
    pub witnesses: Vec<Witness>,
}

impl AxiomCheck {
    pub fn from_witnesses(axiom: impl Into<String>, mut witnesses: Vec<Witness>) -> Self {
        witnesses.sort();
        witnesses.dedup();
        let status = if witnesses.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        AxiomCheck {
            axiom: axiom.into(),
            status,
            informational: false,
            witnesses,
        }
    }

    pub fn informational(mut self) -> Self {
        self.informational = true;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn new() -> Self {
        AxiomReport::default()
    }

    pub fn push(&mut self, check: AxiomCheck) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.checks.extend(other.checks);
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    /// True when every non-informational check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.informational || c.passed())
    }

    /// One JSON document per line, in check order.
    pub fn to_json_lines(&self) -> String {
        self.checks.iter().map(|c| c.to_json() + "\n").collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_witnesses() {
        let ok = AxiomCheck::from_witnesses("a", vec![]);
        let bad = AxiomCheck::from_witnesses("b", vec![Witness::new("x", Some(0), "1", "2")]);
        assert!(ok.passed());
        assert!(!bad.passed());
        let mut report = AxiomReport::new();
        report.push(ok);
        report.push(bad.clone().informational());
        assert!(report.passed());
        report.push(bad);
        assert!(!report.passed());
        assert_eq!(
            report.checks[0].to_json(),
            r#"{"axiom":"a","status":"pass","witnesses":[]}"#
        );
    }
}
