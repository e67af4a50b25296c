//! Structured check results shared by the library runners and the CLI.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Refused,
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Refused => "refused",
            Status::Info => "info",
        };
        write!(f, "{}", s)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub details: String,
}

impl Check {
    pub fn pass(name: impl Into<String>, details: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Pass, details: details.into() }
    }

    pub fn fail(name: impl Into<String>, details: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Fail, details: details.into() }
    }

    pub fn refused(name: impl Into<String>, details: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Refused, details: details.into() }
    }

    pub fn info(name: impl Into<String>, details: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Info, details: details.into() }
    }

    pub fn of(name: impl Into<String>, ok: bool, details: impl Into<String>) -> Self {
        if ok {
            Check::pass(name, details)
        } else {
            Check::fail(name, details)
        }
    }
}

/// Overall status: pass iff there is no fail and no refusal; info never hurts.
pub fn overall(checks: &[Check]) -> Status {
    if checks.iter().any(|c| c.status == Status::Refused) {
        Status::Refused
    } else if checks.iter().any(|c| c.status == Status::Fail) {
        Status::Fail
    } else {
        Status::Pass
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CaseResult {
    pub case: String,
    pub q: i64,
    pub overall: Status,
    pub checks: Vec<Check>,
}

impl CaseResult {
    pub fn new(case: impl Into<String>, q: i64, checks: Vec<Check>) -> Self {
        let overall = overall(&checks);
        CaseResult { case: case.into(), q, overall, checks }
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks
            .iter()
            .filter(|c| matches!(c.status, Status::Fail | Status::Refused))
            .collect()
    }
}

/// Aggregate over several `(case, q)` runs, ordered deterministically.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepReport {
    pub entries: Vec<CaseResult>,
    pub overall: Status,
}

impl SweepReport {
    pub fn new(mut entries: Vec<CaseResult>) -> Self {
        entries.sort_by(|a, b| (a.case.as_str(), a.q).cmp(&(b.case.as_str(), b.q)));
        let overall = if entries.iter().any(|e| e.overall == Status::Refused) {
            Status::Refused
        } else if entries.iter().any(|e| e.overall == Status::Fail) {
            Status::Fail
        } else {
            Status::Pass
        };
        SweepReport { entries, overall }
    }
}
