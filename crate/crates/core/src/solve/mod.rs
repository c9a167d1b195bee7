//! Exact solvers for ω, α, χ, θ and ν, plus the derived predicates built on them.
//!
//! Every solver returns its value together with a [`Certificate`]. Exhausting
//! a [`Budget`] is an error: no solver ever reports an approximate value.

mod clique;
mod coloring;
mod cover;
mod critical;
mod matching;
mod subsets;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificate::Certificate;
use crate::graph::{Graph, GraphError};

pub use clique::{max_clique, max_stable_set};
pub use coloring::{chromatic_number, clique_cover_number};
pub use cover::{evc_bound, neighborhood_partition_cover, triangle_free_cover};
pub use critical::{is_factor_critical, is_theta_critical};
pub use matching::{matching_number, max_matching};
pub use subsets::{in_class_c, max_deficiency, stability_table, ClassMembership, Deficiency};

/// Hard upper limit on subset enumeration regardless of budget.
pub const ENUM_HARD_CAP: usize = 26;

/// Deterministic resource limits for one solver call.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Branch-and-bound nodes allowed for the whole call.
    pub max_nodes: u64,
    /// Largest vertex count for exhaustive subset enumeration.
    pub max_enum_vertices: usize,
    pub time_cap: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: 500_000_000,
            max_enum_vertices: 20,
            time_cap: Duration::from_secs(60),
        }
    }
}

impl Budget {
    pub fn new(
        max_nodes: u64,
        max_enum_vertices: usize,
        time_cap: Duration,
    ) -> Result<Budget, SolveError> {
        if max_nodes == 0 || max_enum_vertices == 0 || time_cap.is_zero() {
            return Err(SolveError::InvalidBudget);
        }
        Ok(Budget {
            max_nodes,
            max_enum_vertices,
            time_cap,
        })
    }

    /// Like the default budget but with a smaller node allowance.
    pub fn with_nodes(max_nodes: u64) -> Budget {
        Budget {
            max_nodes,
            ..Budget::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Limit {
    Nodes,
    Time,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("solver budget exhausted ({limit:?} limit) after {nodes} nodes")]
    BudgetExhausted { limit: Limit, nodes: u64 },
    #[error("{n} vertices exceeds the enumeration cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("graph contains the triangle {0:?}")]
    HasTriangle([usize; 3]),
    #[error("budget limits must all be positive")]
    InvalidBudget,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Work counters for a solver call. Only `nodes` is serialized; wall time is
/// kept out of reports so that they compare byte-for-byte.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    pub nodes: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub value: usize,
    pub certificate: Certificate,
    pub stats: SolveStats,
}

impl SolveResult {
    pub fn check(&self, g: &Graph) -> Result<(), crate::certificate::CertificateError> {
        self.certificate.check(g, self.value)
    }
}

/// Node and clock accounting shared by all sub-solves of one call.
pub(crate) struct Tracker {
    budget: Budget,
    start: Instant,
    nodes: u64,
}

impl Tracker {
    pub(crate) fn new(budget: &Budget) -> Tracker {
        Tracker {
            budget: *budget,
            start: Instant::now(),
            nodes: 0,
        }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), SolveError> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(SolveError::BudgetExhausted {
                limit: Limit::Nodes,
                nodes: self.nodes,
            });
        }
        if self.nodes & 0xfff == 0 && self.start.elapsed() > self.budget.time_cap {
            return Err(SolveError::BudgetExhausted {
                limit: Limit::Time,
                nodes: self.nodes,
            });
        }
        Ok(())
    }

    pub(crate) fn stats(&self) -> SolveStats {
        SolveStats {
            nodes: self.nodes,
            elapsed: self.start.elapsed(),
        }
    }

    pub(crate) fn finish(&self, value: usize, certificate: Certificate) -> SolveResult {
        SolveResult {
            value,
            certificate,
            stats: self.stats(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_validation() {
        assert!(Budget::new(1, 1, Duration::from_millis(1)).is_ok());
        assert_eq!(
            Budget::new(0, 20, Duration::from_secs(1)),
            Err(SolveError::InvalidBudget)
        );
        assert_eq!(
            Budget::new(10, 0, Duration::from_secs(1)),
            Err(SolveError::InvalidBudget)
        );
        assert_eq!(Budget::new(10, 5, Duration::ZERO), Err(SolveError::InvalidBudget));
    }

    #[test]
    fn node_limit_is_reported() {
        let mut t = Tracker::new(&Budget::with_nodes(3));
        assert!(t.tick().is_ok());
        assert!(t.tick().is_ok());
        assert!(t.tick().is_ok());
        assert_eq!(
            t.tick(),
            Err(SolveError::BudgetExhausted {
                limit: Limit::Nodes,
                nodes: 4
            })
        );
    }
}
