//! Witness objects for invariant values and a checker for them.
//!
//! The checker only asks the graph for its order and for single adjacency
//! queries, so a bug in a solver cannot leak into the validation of its output.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// One colour per vertex.
    Coloring { colors: Vec<usize> },
    /// A partition of the vertex set into cliques.
    CliqueCover { cliques: Vec<Vec<usize>> },
    StableSet { vertices: Vec<usize> },
    Clique { vertices: Vec<usize> },
    Matching { edges: Vec<(usize, usize)> },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("vertex {0} is out of range")]
    OutOfRange(usize),
    #[error("vertex {0} appears more than once")]
    Repeated(usize),
    #[error("vertex {0} is not covered")]
    Uncovered(usize),
    #[error("expected {expected} colour entries, found {found}")]
    ColoringLength { expected: usize, found: usize },
    #[error("edge {0}-{1} is monochromatic")]
    Monochromatic(usize, usize),
    #[error("vertices {0} and {1} are not adjacent")]
    MissingEdge(usize, usize),
    #[error("vertices {0} and {1} are adjacent")]
    UnexpectedEdge(usize, usize),
    #[error("empty clique in cover")]
    EmptyPart,
    #[error("certificate has size {found}, claimed {claimed}")]
    WrongSize { claimed: usize, found: usize },
}

impl Certificate {
    /// The invariant value this certificate witnesses.
    pub fn size(&self) -> usize {
        match self {
            Certificate::Coloring { colors } => {
                let mut seen: Vec<usize> = colors.clone();
                seen.sort_unstable();
                seen.dedup();
                seen.len()
            }
            Certificate::CliqueCover { cliques } => cliques.len(),
            Certificate::StableSet { vertices } | Certificate::Clique { vertices } => vertices.len(),
            Certificate::Matching { edges } => edges.len(),
        }
    }

    /// Validates the certificate against `g` and the claimed value.
    pub fn check(&self, g: &Graph, claimed: usize) -> Result<(), CertificateError> {
        let n = g.order();
        match self {
            Certificate::Coloring { colors } => {
                if colors.len() != n {
                    return Err(CertificateError::ColoringLength {
                        expected: n,
                        found: colors.len(),
                    });
                }
                for u in 0..n {
                    for v in u + 1..n {
                        if g.has_edge(u, v) && colors[u] == colors[v] {
                            return Err(CertificateError::Monochromatic(u, v));
                        }
                    }
                }
            }
            Certificate::CliqueCover { cliques } => {
                let mut covered = vec![false; n];
                for part in cliques {
                    if part.is_empty() {
                        return Err(CertificateError::EmptyPart);
                    }
                    distinct_in_range(part, n)?;
                    for &v in part {
                        if covered[v] {
                            return Err(CertificateError::Repeated(v));
                        }
                        covered[v] = true;
                    }
                    all_pairs(part, |u, v| {
                        g.has_edge(u, v)
                            .then_some(())
                            .ok_or(CertificateError::MissingEdge(u, v))
                    })?;
                }
                if let Some(v) = covered.iter().position(|&c| !c) {
                    return Err(CertificateError::Uncovered(v));
                }
            }
            Certificate::StableSet { vertices } => {
                distinct_in_range(vertices, n)?;
                all_pairs(vertices, |u, v| {
                    (!g.has_edge(u, v))
                        .then_some(())
                        .ok_or(CertificateError::UnexpectedEdge(u, v))
                })?;
            }
            Certificate::Clique { vertices } => {
                distinct_in_range(vertices, n)?;
                all_pairs(vertices, |u, v| {
                    g.has_edge(u, v)
                        .then_some(())
                        .ok_or(CertificateError::MissingEdge(u, v))
                })?;
            }
            Certificate::Matching { edges } => {
                let mut used = vec![false; n];
                for &(u, v) in edges {
                    for x in [u, v] {
                        if x >= n {
                            return Err(CertificateError::OutOfRange(x));
                        }
                        if used[x] {
                            return Err(CertificateError::Repeated(x));
                        }
                        used[x] = true;
                    }
                    if !g.has_edge(u, v) {
                        return Err(CertificateError::MissingEdge(u, v));
                    }
                }
            }
        }
        let found = self.size();
        if found != claimed {
            return Err(CertificateError::WrongSize { claimed, found });
        }
        Ok(())
    }
}

fn distinct_in_range(vs: &[usize], n: usize) -> Result<(), CertificateError> {
    let mut seen = vec![false; n];
    for &v in vs {
        if v >= n {
            return Err(CertificateError::OutOfRange(v));
        }
        if seen[v] {
            return Err(CertificateError::Repeated(v));
        }
        seen[v] = true;
    }
    Ok(())
}

fn all_pairs(
    vs: &[usize],
    mut f: impl FnMut(usize, usize) -> Result<(), CertificateError>,
) -> Result<(), CertificateError> {
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            f(u, v)?;
        }
    }
    Ok(())
}
