//! Simple undirected graphs on dense labels `0..n` with bitset adjacency.

use std::collections::VecDeque;
use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 512;
const WORDS: usize = MAX_VERTICES / 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("{n} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices { n: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("subdivision count must be at least 1")]
    EmptySubdivision,
}

/// A set of vertices, stored as a fixed-width bitset.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    pub const fn new() -> Self {
        VertexSet { words: [0; WORDS] }
    }

    /// The set `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        let mut s = VertexSet::new();
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            if n >= lo + 64 {
                *w = u64::MAX;
            } else if n > lo {
                *w = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = VertexSet::new();
        s.insert(v);
        s
    }

    /// Builds a set from the low bits of `mask`.
    pub fn from_mask(mask: u64) -> Self {
        let mut s = VertexSet::new();
        s.words[0] = mask;
        s
    }

    /// Low 64 bits of the set.
    pub fn low_mask(&self) -> u64 {
        self.words[0]
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.words[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.words[v >> 6] &= !(1u64 << (v & 63));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && self.words[v >> 6] & (1u64 << (v & 63)) != 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    /// Smallest member.
    #[inline]
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Largest member.
    pub fn last(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + 63 - w.leading_zeros() as usize)
    }

    pub fn iter(&self) -> Iter {
        Iter {
            words: self.words,
            idx: 0,
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(mut self, rhs: VertexSet) -> VertexSet {
        for (a, b) in self.words.iter_mut().zip(rhs.words.iter()) {
            *a &= b;
        }
        self
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(mut self, rhs: VertexSet) -> VertexSet {
        for (a, b) in self.words.iter_mut().zip(rhs.words.iter()) {
            *a |= b;
        }
        self
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(mut self, rhs: VertexSet) -> VertexSet {
        for (a, b) in self.words.iter_mut().zip(rhs.words.iter()) {
            *a &= !b;
        }
        self
    }
}

/// Complement within the full label range; intersect with a vertex range before use.
impl Not for VertexSet {
    type Output = VertexSet;
    fn not(mut self) -> VertexSet {
        for w in self.words.iter_mut() {
            *w = !*w;
        }
        self
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = v.iter().find(|&&x| x >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!(
                "vertex {bad} exceeds the supported maximum"
            )));
        }
        Ok(v.into_iter().collect())
    }
}

pub struct Iter {
    words: [u64; WORDS],
    idx: usize,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.idx < WORDS {
            let w = self.words[self.idx];
            if w != 0 {
                self.words[self.idx] = w & (w - 1);
                return Some(self.idx * 64 + w.trailing_zeros() as usize);
            }
            self.idx += 1;
        }
        None
    }
}

/// A finite simple graph. Values are immutable once built; every editing
/// operation returns a fresh graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::new(); n],
        })
    }

    /// Builds a graph from an edge list. Repeated edges are merged; loops are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { v: x, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n)
            .map(|v| {
                let mut s = all - self.adj[v];
                s.remove(v);
                s
            })
            .collect();
        Graph { n: self.n, adj }
    }

    /// The subgraph induced by `set`, relabelled `0..|set|` in increasing label order.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<Graph, GraphError> {
        if let Some(v) = set.last().filter(|&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        let members = set.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in members.iter().enumerate() {
            index[v] = i;
        }
        let adj = members
            .iter()
            .map(|&v| (self.adj[v] & *set).iter().map(|u| index[u]).collect())
            .collect();
        Ok(Graph {
            n: members.len(),
            adj,
        })
    }

    /// The graph with `v` deleted, remaining labels shifted down.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        let mut keep = self.vertices();
        keep.remove(v);
        self.induced_subgraph(&keep)
    }

    /// Disjoint union; `other`'s labels are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n)?;
        }
        Ok(g)
    }

    /// Replaces edge `uv` by a path `u, n, n+1, .., n+t-1, v` through `t` new vertices.
    pub fn subdivide_edge(&self, u: usize, v: usize, t: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        if t == 0 {
            return Err(GraphError::EmptySubdivision);
        }
        let mut g = self.add_isolated_vertices(t)?;
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        let path: Vec<usize> = std::iter::once(u)
            .chain(self.n..self.n + t)
            .chain(std::iter::once(v))
            .collect();
        for w in path.windows(2) {
            g.add_edge(w[0], w[1])?;
        }
        Ok(g)
    }

    pub fn add_isolated_vertices(&self, t: usize) -> Result<Graph, GraphError> {
        let n = self.n + t;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut adj = self.adj.clone();
        adj.resize(n, VertexSet::new());
        Ok(Graph { n, adj })
    }

    /// Connected components ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut unseen = self.vertices();
        let mut out = Vec::new();
        while let Some(start) = unseen.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::new();
                for v in frontier.iter() {
                    next = next | self.adj[v];
                }
                frontier = next - comp;
                comp = comp | frontier;
            }
            unseen = unseen - comp;
            out.push(comp);
        }
        out
    }

    /// True for the null graph as well.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// A proper 2-colouring (side 0 or 1 per vertex) if one exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for w in self.adj[v].iter() {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Lexicographically first triangle.
    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                let common = self.adj[u] & self.adj[v];
                if let Some(w) = common.iter().find(|&w| w > v) {
                    return Some([u, v, w]);
                }
            }
        }
        None
    }

    pub fn has_triangle(&self) -> bool {
        self.find_triangle().is_some()
    }

    /// Length of a shortest odd cycle, `None` when the graph is bipartite.
    pub fn odd_girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            dist.fill(usize::MAX);
            dist[s] = 0;
            queue.clear();
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                if best.is_some_and(|b| 2 * dist[v] + 1 >= b) {
                    break;
                }
                for w in self.adj[v].iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        queue.push_back(w);
                    } else if dist[w] == dist[v] {
                        let len = 2 * dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Checks symmetry, irreflexivity and that no bit at or above `n` is set.
    pub fn is_well_formed(&self) -> bool {
        let all = self.vertices();
        self.adj.len() == self.n
            && (0..self.n).all(|v| {
                !self.adj[v].contains(v)
                    && self.adj[v].is_subset(&all)
                    && self.adj[v].iter().all(|u| self.adj[u].contains(v))
            })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
