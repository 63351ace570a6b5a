//! Verification reports and the crate error type.
//!
//! A failed mathematical check is a *value* (a [`Report`] with `pass =
//! false`), not an error. Errors are reserved for malformed input and for
//! operations whose mathematical precondition does not hold.

use serde::Serialize;
use thiserror::Error;

/// One failed condition: the first basis tuple on which it breaks, with both
/// sides rendered as strings. Tuples are reported 1-based to match the basis
/// labels e1, e2, ….
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Failure {
    /// Name of the violated condition.
    pub condition: String,
    /// First failing basis tuple (1-based), empty for global conditions.
    pub tuple: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of a verification, with the first counterexample per condition.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Report {
    /// What was verified, e.g. `"pre-Lie associator symmetry"`.
    pub check: String,
    pub pass: bool,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn passing(check: impl Into<String>) -> Self {
        Report {
            check: check.into(),
            pass: true,
            failures: Vec::new(),
        }
    }

    pub fn failing(check: impl Into<String>, failure: Failure) -> Self {
        Report {
            check: check.into(),
            pass: false,
            failures: vec![failure],
        }
    }

    /// Record a failure (keeps only the first one per condition name).
    pub fn record(&mut self, failure: Failure) {
        if !self
            .failures
            .iter()
            .any(|f| f.condition == failure.condition)
        {
            self.failures.push(failure);
        }
        self.pass = false;
    }

    /// Merge a sub-report, prefixing its condition names.
    pub fn absorb(&mut self, prefix: &str, sub: Report) {
        for mut f in sub.failures {
            f.condition = format!("{prefix}: {}", f.condition);
            self.record(f);
        }
    }

    /// Human-readable one-failure summary.
    pub fn summary(&self) -> String {
        if self.pass {
            format!("{}: pass", self.check)
        } else {
            let f = &self.failures[0];
            let at = if f.tuple.is_empty() {
                String::new()
            } else {
                format!(
                    " at ({})",
                    f.tuple
                        .iter()
                        .map(|i| i.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            };
            format!(
                "{}: FAIL [{}{} — lhs {} vs rhs {}]",
                self.check, f.condition, at, f.lhs, f.rhs
            )
        }
    }
}

/// Failure for a condition evaluated on a basis tuple. `tuple` is 0-based
/// here; it is shifted to 1-based for the report.
pub fn failure_at(condition: &str, tuple: &[usize], lhs: String, rhs: String) -> Failure {
    Failure {
        condition: condition.to_string(),
        tuple: tuple.iter().map(|i| i + 1).collect(),
        lhs,
        rhs,
    }
}

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: shapes, parse failures, out-of-range indices.
    #[error("input error: {0}")]
    Input(String),
    /// A linear map required to be invertible is not.
    #[error("not invertible")]
    NotInvertible,
    /// A mathematical precondition of the operation does not hold; the
    /// report carries the first counterexample.
    #[error("precondition failed: {}", .0.summary())]
    Precondition(Box<Report>),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn precondition(report: Report) -> Self {
        Error::Precondition(Box::new(report))
    }

    /// Exit-code class of this error: 1 for mathematical failures, 2 for
    /// input problems.
    pub fn exit_class(&self) -> i32 {
        match self {
            Error::Input(_) => 2,
            Error::NotInvertible | Error::Precondition(_) => 1,
        }
    }
}
