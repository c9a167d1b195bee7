//! Executable checks of the clique-cover results over constructed,
//! enumerated and sampled instances.
//!
//! Each check returns a [`CheckReport`] with one [`InstanceRecord`] per
//! instance, serialized as JSON lines. Theorem checks fail on a violation;
//! conjecture exploration archives violations as findings instead.

mod checks;
mod sources;

use std::collections::BTreeMap;
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use checks::{CheckId, ParseCheckError, Verifier};
pub use sources::{
    exhaustive_labeled, family_range, from_graph6_text, from_specs, kneser_samples,
    Instance, Sampler, SourceError,
};

use crate::format::{parse_graph6, FormatError};
use crate::solve::{self, Budget, SolveError, SolveResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Theorem,
    Conjecture,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    /// The instance does not satisfy the statement's hypothesis.
    Skipped,
    Violation,
    /// A solver or enumeration limit was hit.
    Undecided,
    /// A conjecture fails on this instance.
    Finding,
}

/// A violated inequality `lhs <= rhs`, evaluated on both sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inequality {
    pub statement: String,
    pub lhs: i64,
    pub rhs: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph6: String,
    pub inequality: Inequality,
    /// Invariant values the inequality was evaluated from.
    pub values: BTreeMap<String, i64>,
    /// Solver outputs, with certificates, for the invariants involved.
    pub results: BTreeMap<String, SolveResult>,
}

#[derive(Debug, Error)]
pub enum RevalidationError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("stored certificate for {name} is invalid: {reason}")]
    Certificate { name: String, reason: String },
    #[error("{name} re-solved to {found}, stored {stored}")]
    Mismatch { name: String, stored: i64, found: i64 },
    #[error("stored inequality does not fail: {lhs} <= {rhs}")]
    NotViolated { lhs: i64, rhs: i64 },
}

/// Recomputes a named invariant. Names match the keys used in reports.
pub fn solve_invariant(name: &str, g: &crate::Graph, budget: &Budget) -> Option<Result<i64, SolveError>> {
    let r = match name {
        "omega" => solve::max_clique(g, budget).map(|r| r.value),
        "alpha" => solve::max_stable_set(g, budget).map(|r| r.value),
        "chi" => solve::chromatic_number(g, budget).map(|r| r.value),
        "theta" => solve::clique_cover_number(g, budget).map(|r| r.value),
        "nu" => Ok(solve::matching_number(g)),
        "deficiency" => solve::max_deficiency(g, budget).map(|d| d.value),
        "n" => Ok(g.order()),
        _ => return None,
    };
    Some(r.map(|v| v as i64))
}

impl Counterexample {
    /// Re-parses the graph, re-solves every stored invariant and confirms the
    /// values, the certificates and the violation itself.
    pub fn revalidate(&self, budget: &Budget) -> Result<(), RevalidationError> {
        let g = parse_graph6(&self.graph6)?;
        for (name, result) in &self.results {
            result
                .check(&g)
                .map_err(|e| RevalidationError::Certificate {
                    name: name.clone(),
                    reason: e.to_string(),
                })?;
        }
        for (name, &stored) in &self.values {
            if let Some(found) = solve_invariant(name, &g, budget) {
                let found = found?;
                if found != stored {
                    return Err(RevalidationError::Mismatch {
                        name: name.clone(),
                        stored,
                        found,
                    });
                }
            }
        }
        let Inequality { lhs, rhs, .. } = self.inequality;
        if lhs <= rhs {
            return Err(RevalidationError::NotViolated { lhs, rhs });
        }
        Ok(())
    }
}

/// The outcome of one check on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub check: String,
    pub index: usize,
    pub instance: String,
    pub graph6: String,
    pub n: usize,
    pub status: Status,
    pub values: BTreeMap<String, i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Outcome {
    AllPass,
    Violation { counterexamples: Vec<Counterexample> },
    Undecided { instances: Vec<usize> },
    /// Conjecture exploration found instances where the conjecture fails.
    Findings { counterexamples: Vec<Counterexample> },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub tested: usize,
    pub passed: usize,
    pub skipped: usize,
    pub violations: usize,
    pub undecided: usize,
    pub findings: usize,
}

/// Run metadata. Excluded when reports are compared for reproducibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub unix_ms: u128,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub check: CheckId,
    pub records: Vec<InstanceRecord>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
    pub finished_at: SystemTime,
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    check: &'a str,
    kind: CheckKind,
    summary: Summary,
    #[serde(flatten)]
    outcome: &'a Outcome,
    notes: &'a [String],
    meta: Meta,
}

impl CheckReport {
    pub fn kind(&self) -> CheckKind {
        self.check.kind()
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for r in &self.records {
            match r.status {
                Status::Pass => s.passed += 1,
                Status::Skipped => s.skipped += 1,
                Status::Violation => s.violations += 1,
                Status::Undecided => s.undecided += 1,
                Status::Finding => s.findings += 1,
            }
        }
        s.tested = self.records.len() - s.skipped;
        s
    }

    fn counterexamples(&self, status: Status) -> Vec<Counterexample> {
        self.records
            .iter()
            .filter(|r| r.status == status)
            .filter_map(|r| r.counterexample.clone())
            .collect()
    }

    pub fn outcome(&self) -> Outcome {
        let s = self.summary();
        if s.violations > 0 {
            Outcome::Violation {
                counterexamples: self.counterexamples(Status::Violation),
            }
        } else if s.undecided > 0 {
            Outcome::Undecided {
                instances: self
                    .records
                    .iter()
                    .filter(|r| r.status == Status::Undecided)
                    .map(|r| r.index)
                    .collect(),
            }
        } else if s.findings > 0 {
            Outcome::Findings {
                counterexamples: self.counterexamples(Status::Finding),
            }
        } else {
            Outcome::AllPass
        }
    }

    pub fn is_all_pass(&self) -> bool {
        self.outcome() == Outcome::AllPass
    }

    /// True when a theorem check recorded a violation. Conjecture findings never count.
    pub fn has_theorem_violation(&self) -> bool {
        self.kind() == CheckKind::Theorem && self.summary().violations > 0
    }

    pub fn meta(&self) -> Meta {
        Meta {
            unix_ms: self
                .finished_at
                .duration_since(UNIX_EPOCH)
                .map_or(0, |d| d.as_millis()),
            elapsed_ms: self.elapsed.as_millis(),
        }
    }

    /// One JSON object per instance, then a summary object carrying `meta`.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("record serializes"));
            out.push('\n');
        }
        let outcome = self.outcome();
        let line = SummaryLine {
            check: self.check.name(),
            kind: self.kind(),
            summary: self.summary(),
            outcome: &outcome,
            notes: &self.notes,
            meta: self.meta(),
        };
        out.push_str(&serde_json::to_string(&line).expect("summary serializes"));
        out.push('\n');
        out
    }
}

/// Drops every top-level `meta` field so two report texts can be compared.
pub fn strip_meta(json_lines: &str) -> String {
    json_lines
        .lines()
        .map(|l| match serde_json::from_str::<serde_json::Value>(l) {
            Ok(serde_json::Value::Object(mut m)) => {
                m.remove("meta");
                serde_json::Value::Object(m).to_string()
            }
            _ => l.to_string(),
        })
        .collect::<Vec<_>>()
        .join("\n")
}
