//! Exhaustive computations over all induced subgraphs, driven by a table of
//! α for every vertex subset.

use serde::{Deserialize, Serialize};

use super::coloring::coloring_with;
use super::{Budget, SolveError, Tracker, ENUM_HARD_CAP};
use crate::graph::{Graph, VertexSet};

/// α(G[S]) for every subset `S`, indexed by bitmask. Requires `n <= cap`.
pub fn stability_table(g: &Graph, cap: usize) -> Result<Vec<u8>, SolveError> {
    let n = g.order();
    let cap = cap.min(ENUM_HARD_CAP);
    if n > cap {
        return Err(SolveError::TooLarge { n, cap });
    }
    let closed: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).low_mask() as u32 | (1 << v))
        .collect();
    let mut alpha = vec![0u8; 1 << n];
    for mask in 1u32..(1 << n) {
        let v = mask.trailing_zeros() as usize;
        let without = alpha[(mask & !(1 << v)) as usize];
        let with = 1 + alpha[(mask & !closed[v]) as usize];
        alpha[mask as usize] = without.max(with);
    }
    Ok(alpha)
}

/// The maximum of `|V(H)| - 2α(H)` over induced subgraphs `H`, with a
/// subgraph attaining it. The empty subgraph gives 0, so the value is never negative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Deficiency {
    pub value: usize,
    pub witness: VertexSet,
}

pub fn max_deficiency(g: &Graph, budget: &Budget) -> Result<Deficiency, SolveError> {
    let alpha = stability_table(g, budget.max_enum_vertices)?;
    let mut best = Deficiency {
        value: 0,
        witness: VertexSet::new(),
    };
    for (mask, &a) in alpha.iter().enumerate() {
        let size = mask.count_ones() as usize;
        let d = size.saturating_sub(2 * a as usize);
        if d > best.value {
            best = Deficiency {
                value: d,
                witness: VertexSet::from_mask(mask as u64),
            };
        }
    }
    Ok(best)
}

/// Membership in the class of graphs whose every induced subgraph `H` has `3α(H) >= |V(H)|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "membership", rename_all = "snake_case")]
pub enum ClassMembership {
    /// Every induced subgraph was checked.
    Yes,
    /// The induced subgraph on `witness` has `3α < |witness|`.
    No { witness: VertexSet },
    /// Too large to enumerate, but 3-colourable and hence a member.
    YesBySufficiency,
}

impl ClassMembership {
    pub fn is_member(&self) -> bool {
        !matches!(self, ClassMembership::No { .. })
    }
}

pub fn in_class_c(g: &Graph, budget: &Budget) -> Result<ClassMembership, SolveError> {
    let n = g.order();
    let cap = budget.max_enum_vertices.min(ENUM_HARD_CAP);
    if n <= cap {
        let alpha = stability_table(g, cap)?;
        let bad = alpha
            .iter()
            .enumerate()
            .find(|(mask, &a)| (3 * a as u32) < mask.count_ones());
        return Ok(match bad {
            Some((mask, _)) => ClassMembership::No {
                witness: VertexSet::from_mask(mask as u64),
            },
            None => ClassMembership::Yes,
        });
    }
    let mut t = Tracker::new(budget);
    let colors = coloring_with(g, &mut t)?;
    if colors.iter().all(|&c| c < 3) {
        Ok(ClassMembership::YesBySufficiency)
    } else {
        Err(SolveError::TooLarge { n, cap })
    }
}
