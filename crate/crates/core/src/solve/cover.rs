//! Constructive clique covers.

use super::clique::stable_set_with;
use super::coloring::clique_cover_with;
use super::matching::max_matching;
use super::{Budget, SolveError, Tracker};
use crate::certificate::Certificate;
use crate::graph::Graph;

/// For a triangle-free graph: the edges of a maximum matching plus a
/// singleton for every unmatched vertex. Its size `n - ν` is optimal there.
pub fn triangle_free_cover(g: &Graph) -> Result<Certificate, SolveError> {
    if let Some(t) = g.find_triangle() {
        return Err(SolveError::HasTriangle(t));
    }
    Ok(Certificate::CliqueCover {
        cliques: matching_cover(g),
    })
}

fn matching_cover(g: &Graph) -> Vec<Vec<usize>> {
    let Certificate::Matching { edges } = max_matching(g).certificate else {
        unreachable!("matching solver returns a matching certificate")
    };
    let mut matched = vec![false; g.order()];
    let mut cliques = Vec::with_capacity(g.order() - edges.len());
    for (u, v) in edges {
        matched[u] = true;
        matched[v] = true;
        cliques.push(vec![u, v]);
    }
    cliques.extend((0..g.order()).filter(|&v| !matched[v]).map(|v| vec![v]));
    cliques
}

/// Clique cover built level by level from a maximum stable set
/// `S = {s_1 < .. < s_k}`: the remaining vertices are split into
/// `A_i = N(s_i) \ (A_1 ∪ .. ∪ A_{i-1})`, each `G[A_i]` is covered one level
/// down, and `s_i` joins a clique of that cover (it is adjacent to all of
/// `A_i`). Level 1, and any bipartite graph, is covered optimally.
///
/// When every induced subgraph with clique number above `levels` has χ = ω,
/// the result has at most `evc_bound(levels, α)` cliques.
pub fn neighborhood_partition_cover(
    g: &Graph,
    levels: usize,
    budget: &Budget,
) -> Result<Certificate, SolveError> {
    let mut t = Tracker::new(budget);
    let cliques = partition_cover(g, levels, &mut t)?;
    Ok(Certificate::CliqueCover { cliques })
}

fn partition_cover(
    g: &Graph,
    levels: usize,
    t: &mut Tracker,
) -> Result<Vec<Vec<usize>>, SolveError> {
    if g.order() == 0 {
        return Ok(Vec::new());
    }
    if levels <= 1 {
        return clique_cover_with(g, t);
    }
    if g.is_bipartite() {
        return Ok(matching_cover(g));
    }
    let stable = stable_set_with(g, t)?;
    let mut claimed = crate::graph::VertexSet::new();
    let mut out = Vec::new();
    for &s in &stable {
        let part = *g.neighbors(s) - claimed;
        claimed = claimed | part;
        let labels = part.to_vec();
        let sub = g.induced_subgraph(&part)?;
        let mut cover: Vec<Vec<usize>> = partition_cover(&sub, levels - 1, t)?
            .into_iter()
            .map(|c| c.into_iter().map(|v| labels[v]).collect())
            .collect();
        match cover
            .iter_mut()
            .find(|c| c.iter().all(|&v| g.has_edge(s, v)))
        {
            Some(c) => {
                c.push(s);
                c.sort_unstable();
            }
            None => cover.push(vec![s]),
        }
        out.extend(cover);
    }
    Ok(out)
}

/// The clique-cover bound for graphs that are perfect above clique number
/// `c`, at stability number `k`: `B(1, k) = k` and
/// `B(c + 1, k) = B(c, 1) + B(c, 2) + .. + B(c, k)`. Saturates at `u64::MAX`.
///
/// # Panics
/// If `c == 0`.
pub fn evc_bound(c: usize, k: usize) -> u64 {
    assert!(c >= 1, "threshold must be at least 1");
    let mut row: Vec<u64> = (0..=k as u64).collect();
    for _ in 1..c {
        let mut acc = 0u64;
        for x in row.iter_mut() {
            acc = acc.saturating_add(*x);
            *x = acc;
        }
    }
    row[k]
}
