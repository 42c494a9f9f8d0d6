//! Machine-readable law-check reports.
//!
//! Every checker in the crate returns one [`Report`] per law. The JSON shape
//! is fixed:
//!
//! ```json
//! {"law": "pentagon", "status": "pass", "checked": 81, "failures": []}
//! ```
//!
//! Failures are sorted by witness before serialization so identical inputs
//! produce byte-identical output.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The law was examined and holds because there is nothing to check.
    Vacuous,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Failure {
    pub witness: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl Failure {
    pub fn new(witness: Vec<String>, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        Failure {
            witness,
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub law: String,
    pub status: Status,
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    /// Builds a report from a list of failures; status is derived.
    pub fn from_failures(law: impl Into<String>, checked: usize, mut failures: Vec<Failure>) -> Self {
        failures.sort();
        failures.dedup();
        let status = if !failures.is_empty() {
            Status::Fail
        } else if checked == 0 {
            Status::Vacuous
        } else {
            Status::Pass
        };
        Report {
            law: law.into(),
            status,
            checked,
            failures,
        }
    }

    pub fn vacuous(law: impl Into<String>) -> Self {
        Report {
            law: law.into(),
            status: Status::Vacuous,
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    /// Merges partial reports for the same law (e.g. from partitioned scopes).
    pub fn merge(law: impl Into<String>, parts: impl IntoIterator<Item = Report>) -> Self {
        let mut checked = 0;
        let mut failures = Vec::new();
        for p in parts {
            checked += p.checked;
            failures.extend(p.failures);
        }
        Report::from_failures(law, checked, failures)
    }

    pub fn to_text(&self) -> String {
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Vacuous => "vacuous",
        };
        let mut out = format!("{:<34} {:<8} checked {}\n", self.law, status, self.checked);
        for f in &self.failures {
            out.push_str(&format!(
                "    at [{}]\n      lhs: {}\n      rhs: {}\n",
                f.witness.join(", "),
                f.lhs,
                f.rhs
            ));
        }
        out
    }
}

pub fn all_passed(reports: &[Report]) -> bool {
    reports.iter().all(Report::passed)
}

/// Collects failures for one law while a checker runs.
#[derive(Debug)]
pub(crate) struct Tally {
    law: String,
    checked: usize,
    failures: Vec<Failure>,
}

impl Tally {
    pub(crate) fn new(law: impl Into<String>) -> Self {
        Tally {
            law: law.into(),
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub(crate) fn check(&mut self, ok: bool, failure: impl FnOnce() -> Failure) {
        self.checked += 1;
        if !ok {
            self.failures.push(failure());
        }
    }

    pub(crate) fn pass(&mut self) {
        self.checked += 1;
    }

    pub(crate) fn fail(&mut self, failure: Failure) {
        self.checked += 1;
        self.failures.push(failure);
    }

    pub(crate) fn finish(self) -> Report {
        Report::from_failures(self.law, self.checked, self.failures)
    }
}
