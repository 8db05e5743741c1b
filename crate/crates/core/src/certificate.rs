//! Clause-by-clause verification reports.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Not evaluated because a prerequisite clause failed.
    Skipped,
    /// A hypothesis of the underlying equivalence is not met.
    Inconclusive,
    /// Informational, never affects the verdict.
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::Inconclusive => "inconclusive",
            Status::Info => "info",
        };
        f.write_str(s)
    }
}

/// Basis indices of the offending instance and the nonzero value found there.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Witness {
    pub fn at(indices: &[usize]) -> Self {
        Witness { indices: indices.to_vec(), value: None, note: None }
    }

    pub fn with_value(mut self, v: Scalar) -> Self {
        self.value = Some(v);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub id: String,
    pub status: Status,
    /// Number of instances examined.
    #[serde(default)]
    pub checked: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub subject: String,
    pub clauses: Vec<Clause>,
}

impl Certificate {
    pub fn new(subject: impl Into<String>) -> Self {
        Certificate { subject: subject.into(), clauses: Vec::new() }
    }

    pub fn push(&mut self, id: &str, status: Status, checked: usize, witness: Option<Witness>, detail: Option<String>) {
        self.clauses.push(Clause { id: id.to_string(), status, checked, witness, detail });
    }

    /// Pass when `witness` is `None`, fail otherwise.
    pub fn record(&mut self, id: &str, checked: usize, witness: Option<Witness>) {
        let status = if witness.is_some() { Status::Fail } else { Status::Pass };
        self.push(id, status, checked, witness, None);
    }

    pub fn skip(&mut self, id: &str, reason: impl Into<String>) {
        self.push(id, Status::Skipped, 0, None, Some(reason.into()));
    }

    pub fn info(&mut self, id: &str, detail: impl Into<String>) {
        self.push(id, Status::Info, 0, None, Some(detail.into()));
    }

    pub fn inconclusive(&mut self, id: &str, witness: Option<Witness>, reason: impl Into<String>) {
        self.push(id, Status::Inconclusive, 0, witness, Some(reason.into()));
    }

    pub fn extend(&mut self, other: Certificate) {
        self.clauses.extend(other.clauses);
    }

    /// Inconclusive beats fail beats pass; skipped and info clauses are ignored.
    pub fn status(&self) -> Status {
        if self.clauses.iter().any(|c| c.status == Status::Inconclusive) {
            Status::Inconclusive
        } else if self.clauses.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else {
            Status::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.status() == Status::Pass
    }

    pub fn clause(&self, id: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.id == id)
    }

    pub fn failing(&self) -> Vec<&str> {
        self.clauses.iter().filter(|c| c.status == Status::Fail).map(|c| c.id.as_str()).collect()
    }

    pub fn status_of(&self, id: &str) -> Option<Status> {
        self.clause(id).map(|c| c.status)
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("{}: {}\n", self.subject, self.status());
        for c in &self.clauses {
            out.push_str(&format!("  [{}] {}", c.status, c.id));
            if c.checked > 0 {
                out.push_str(&format!(" ({} checked)", c.checked));
            }
            if let Some(w) = &c.witness {
                out.push_str(&format!(" witness {:?}", w.indices));
                if let Some(v) = &w.value {
                    out.push_str(&format!(" value {v}"));
                }
                if let Some(n) = &w.note {
                    out.push_str(&format!(" ({n})"));
                }
            }
            if let Some(d) = &c.detail {
                out.push_str(&format!(": {d}"));
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let mut c = Certificate::new("t");
        c.record("a", 3, None);
        c.skip("b", "prereq");
        assert_eq!(c.status(), Status::Pass);
        c.record("c", 1, Some(Witness::at(&[0, 1]).with_value(Scalar::one())));
        assert_eq!(c.status(), Status::Fail);
        assert_eq!(c.failing(), vec!["c"]);
        c.inconclusive("d", None, "hypothesis");
        assert_eq!(c.status(), Status::Inconclusive);
    }

    #[test]
    fn json_roundtrip() {
        let mut c = Certificate::new("t");
        c.record("x", 2, Some(Witness::at(&[1]).with_value("1/2*i".parse().unwrap()).with_note("n")));
        let s = serde_json::to_string(&c).unwrap();
        assert!(s.contains("\"status\":\"fail\""));
        let back: Certificate = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
    }
}
