//! Deterministic constructors for the named graphs and graph families.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("cannot parse family spec `{spec}`: {reason}")]
    Parse { spec: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn invalid(msg: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParameter(msg.into())
}

/// `C_n`; for `n < 3` the path on `n` vertices.
pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    if n >= 3 {
        edges.push((0, n - 1));
    }
    Ok(Graph::from_edges(n, edges)?)
}

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    Ok(Graph::empty(n)?.complement())
}

/// Vertices `Z_n`, with `i ~ j` when `|i - j| mod n` is in `distances`.
/// Each distance must lie in `1..=n/2`.
pub fn circulant(n: usize, distances: &[usize]) -> Result<Graph, FamilyError> {
    if let Some(&d) = distances.iter().find(|&&d| d == 0 || d > n / 2) {
        return Err(invalid(format!("distance {d} outside 1..={}", n / 2)));
    }
    let edges = (0..n).flat_map(|i| distances.iter().map(move |&d| (i, (i + d) % n)));
    Ok(Graph::from_edges(n, edges)?)
}

/// The 13-vertex triangle-free graph with stability number 4: the circulant
/// on `Z_13` with distances {1, 5}.
pub fn ramsey_r35() -> Graph {
    circulant(13, &[1, 5]).expect("valid circulant")
}

/// `ramsey_r35()` with its lexicographically smallest edge subdivided twice:
/// 15 vertices, ω = 2, χ = 3, α = 5, θ = 8.
pub fn g58() -> Graph {
    let r = ramsey_r35();
    let (u, v) = r.edges()[0];
    r.subdivide_edge(u, v, 2).expect("edge of R(3,5)")
}

/// A graph with α = x and θ = ⌊8x/5⌋: ⌊x/5⌋ copies of [`g58`], then by
/// residue mod 5 nothing, an isolated vertex, a pentagon, a pentagon and an
/// isolated vertex, or two pentagons.
pub fn extremal_class_c(x: usize) -> Result<Graph, FamilyError> {
    let (pentagons, isolated) = match x % 5 {
        0 => (0, 0),
        1 => (0, 1),
        2 => (1, 0),
        3 => (1, 1),
        _ => (2, 0),
    };
    let n = 15 * (x / 5) + 5 * pentagons + isolated;
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices { n }.into());
    }
    let base = g58();
    let c5 = cycle(5)?;
    let mut g = Graph::empty(0)?;
    for _ in 0..x / 5 {
        g = g.disjoint_union(&base)?;
    }
    for _ in 0..pentagons {
        g = g.disjoint_union(&c5)?;
    }
    Ok(g.add_isolated_vertices(isolated)?)
}

/// A graph whose vertices are finite sets, with the set behind each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetGraph {
    pub graph: Graph,
    /// `sets[v]` is the subset of `{1, .., ground}` labelling vertex `v`.
    pub sets: Vec<Vec<usize>>,
    pub ground: usize,
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// All `size`-subsets of `{1, .., ground}` in lexicographic order.
fn subsets_lex(ground: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=size).collect();
    if size > ground {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..size).rev().find(|&i| cur[i] < ground - size + i + 1) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..size {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

fn disjointness_graph(sets: Vec<Vec<usize>>, ground: usize) -> Result<SetGraph, FamilyError> {
    let masks: Vec<u128> = sets
        .iter()
        .map(|s| s.iter().fold(0u128, |m, &i| m | 1 << i))
        .collect();
    let mut edges = Vec::new();
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            if masks[i] & masks[j] == 0 {
                edges.push((i, j));
            }
        }
    }
    Ok(SetGraph {
        graph: Graph::from_edges(sets.len(), edges)?,
        sets,
        ground,
    })
}

/// The Kneser graph: `n`-subsets of `{1, .., 2n + k}`, adjacent when disjoint.
/// Vertices are numbered in lexicographic order of their sets.
pub fn kneser(n: usize, k: usize) -> Result<SetGraph, FamilyError> {
    if n == 0 {
        return Err(invalid("kneser requires n >= 1"));
    }
    let ground = 2 * n + k;
    let count = binomial(ground as u64, n as u64);
    if ground > 127 || count > MAX_VERTICES as u128 {
        return Err(invalid(format!("kneser({n},{k}) has {count} vertices")));
    }
    disjointness_graph(subsets_lex(ground, n), ground)
}

/// Sparse `n`-subsets of `{1, .., 2n + k}`, no two cyclically consecutive,
/// in lexicographic order.
pub fn sparse_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn extend(cur: &mut Vec<usize>, next: usize, n: usize, ground: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let remaining = n - cur.len();
        let mut x = next;
        // Each further element needs a gap of at least one.
        while x + 2 * (remaining - 1) <= ground {
            let wraps = cur.first() == Some(&1) && x == ground;
            if !wraps {
                cur.push(x);
                extend(cur, x + 2, n, ground, out);
                cur.pop();
            }
            x += 1;
        }
    }
    let ground = 2 * n + k;
    let mut out = Vec::new();
    if n > 0 {
        extend(&mut Vec::with_capacity(n), 1, n, ground, &mut out);
    }
    out
}

/// The Schrijver graph: the subgraph of `kneser(n, k)` induced by the sparse sets.
pub fn schrijver(n: usize, k: usize) -> Result<SetGraph, FamilyError> {
    if n == 0 || k == 0 {
        return Err(invalid("schrijver requires n >= 1 and k >= 1"));
    }
    let ground = 2 * n + k;
    if ground > 127 {
        return Err(invalid(format!("schrijver({n},{k}) ground set too large")));
    }
    let count = schrijver_order(n, k);
    if count > MAX_VERTICES as u128 {
        return Err(invalid(format!("schrijver({n},{k}) has {count} vertices")));
    }
    disjointness_graph(sparse_subsets(n, k), ground)
}

/// Closed-form vertex count of the Schrijver graph: `C(n+k, n) + C(n+k-1, n-1)`.
pub fn schrijver_order(n: usize, k: usize) -> u128 {
    assert!(n >= 1, "schrijver_order requires n >= 1");
    let (n, k) = (n as u64, k as u64);
    binomial(n + k, n) + binomial(n + k - 1, n - 1)
}

fn check_probability(p: f64) -> Result<(), FamilyError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid(format!("probability {p} outside [0, 1]")));
    }
    Ok(())
}

/// Erdős–Rényi `G(n, p)`. Pairs are visited column by column, so the same
/// seed gives the same graph on every platform.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph, FamilyError> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_edges(n, edges)?)
}

/// Random graph whose parts are consecutive label blocks of the given
/// sizes; each pair from different parts is an edge with probability `p`.
pub fn random_multipartite(sizes: &[usize], p: f64, seed: u64) -> Result<Graph, FamilyError> {
    check_probability(p)?;
    let n: usize = sizes.iter().sum();
    let part: Vec<usize> = sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if part[i] != part[j] && rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_edges(n, edges)?)
}

pub fn random_bipartite(a: usize, b: usize, p: f64, seed: u64) -> Result<Graph, FamilyError> {
    random_multipartite(&[a, b], p, seed)
}

pub fn random_3partite(sizes: [usize; 3], p: f64, seed: u64) -> Result<Graph, FamilyError> {
    random_multipartite(&sizes, p, seed)
}

/// A family member named by its canonical string, e.g. `g58`,
/// `extremalC:7`, `schrijver:3,2` or `gnp:12,0.4,seed=7`.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Cycle(usize),
    Complete(usize),
    Circulant { n: usize, distances: Vec<usize> },
    Ramsey35,
    G58,
    ExtremalC(usize),
    Kneser { n: usize, k: usize },
    Schrijver { n: usize, k: usize },
    Gnp { n: usize, p: f64, seed: u64 },
    Bipartite { a: usize, b: usize, p: f64, seed: u64 },
    Tripartite { sizes: [usize; 3], p: f64, seed: u64 },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match self {
            FamilySpec::Cycle(n) => cycle(*n),
            FamilySpec::Complete(n) => complete(*n),
            FamilySpec::Circulant { n, distances } => circulant(*n, distances),
            FamilySpec::Ramsey35 => Ok(ramsey_r35()),
            FamilySpec::G58 => Ok(g58()),
            FamilySpec::ExtremalC(x) => extremal_class_c(*x),
            FamilySpec::Kneser { n, k } => Ok(kneser(*n, *k)?.graph),
            FamilySpec::Schrijver { n, k } => Ok(schrijver(*n, *k)?.graph),
            FamilySpec::Gnp { n, p, seed } => gnp(*n, *p, *seed),
            FamilySpec::Bipartite { a, b, p, seed } => random_bipartite(*a, *b, *p, *seed),
            FamilySpec::Tripartite { sizes, p, seed } => random_3partite(*sizes, *p, *seed),
        }
    }

    /// The family tag, as accepted before the `:` of the string form.
    pub fn tag(&self) -> &'static str {
        match self {
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::Circulant { .. } => "circulant",
            FamilySpec::Ramsey35 => "ramsey35",
            FamilySpec::G58 => "g58",
            FamilySpec::ExtremalC(_) => "extremalC",
            FamilySpec::Kneser { .. } => "kneser",
            FamilySpec::Schrijver { .. } => "schrijver",
            FamilySpec::Gnp { .. } => "gnp",
            FamilySpec::Bipartite { .. } => "bipartite",
            FamilySpec::Tripartite { .. } => "3partite",
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = self.tag();
        match self {
            FamilySpec::Cycle(n) | FamilySpec::Complete(n) | FamilySpec::ExtremalC(n) => {
                write!(f, "{tag}:{n}")
            }
            FamilySpec::Circulant { n, distances } => {
                write!(f, "{tag}:{n}")?;
                distances.iter().try_for_each(|d| write!(f, ",{d}"))
            }
            FamilySpec::Ramsey35 | FamilySpec::G58 => f.write_str(tag),
            FamilySpec::Kneser { n, k } | FamilySpec::Schrijver { n, k } => {
                write!(f, "{tag}:{n},{k}")
            }
            FamilySpec::Gnp { n, p, seed } => write!(f, "{tag}:{n},{p},seed={seed}"),
            FamilySpec::Bipartite { a, b, p, seed } => write!(f, "{tag}:{a},{b},{p},seed={seed}"),
            FamilySpec::Tripartite { sizes: [a, b, c], p, seed } => {
                write!(f, "{tag}:{a},{b},{c},{p},seed={seed}")
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fail = |reason: &str| FamilyError::Parse {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let (tag, rest) = match s.trim().split_once(':') {
            Some((t, r)) => (t, r),
            None => (s.trim(), ""),
        };
        let mut seed = 0u64;
        let mut args: Vec<&str> = Vec::new();
        for field in rest.split(',').map(str::trim).filter(|f| !f.is_empty()) {
            match field.strip_prefix("seed=") {
                Some(v) => seed = v.parse().map_err(|_| fail("bad seed"))?,
                None => args.push(field),
            }
        }
        let int = |i: usize| -> Result<usize, FamilyError> {
            args.get(i)
                .ok_or_else(|| fail("missing argument"))?
                .parse()
                .map_err(|_| fail("expected an integer"))
        };
        let prob = |i: usize| -> Result<f64, FamilyError> {
            let p: f64 = args
                .get(i)
                .ok_or_else(|| fail("missing probability"))?
                .parse()
                .map_err(|_| fail("expected a probability"))?;
            check_probability(p).map_err(|_| fail("probability outside [0, 1]"))?;
            Ok(p)
        };
        let arity = |n: usize| -> Result<(), FamilyError> {
            if args.len() == n {
                Ok(())
            } else {
                Err(fail(&format!("expected {n} arguments")))
            }
        };
        let spec = match tag {
            "cycle" => {
                arity(1)?;
                FamilySpec::Cycle(int(0)?)
            }
            "complete" => {
                arity(1)?;
                FamilySpec::Complete(int(0)?)
            }
            "circulant" => {
                if args.is_empty() {
                    return Err(fail("expected n and distances"));
                }
                FamilySpec::Circulant {
                    n: int(0)?,
                    distances: (1..args.len()).map(int).collect::<Result<_, _>>()?,
                }
            }
            "ramsey35" | "r35" => {
                arity(0)?;
                FamilySpec::Ramsey35
            }
            "g58" => {
                arity(0)?;
                FamilySpec::G58
            }
            "extremalC" => {
                arity(1)?;
                FamilySpec::ExtremalC(int(0)?)
            }
            "kneser" => {
                arity(2)?;
                FamilySpec::Kneser { n: int(0)?, k: int(1)? }
            }
            "schrijver" => {
                arity(2)?;
                FamilySpec::Schrijver { n: int(0)?, k: int(1)? }
            }
            "gnp" | "random-gnp" => {
                arity(2)?;
                FamilySpec::Gnp { n: int(0)?, p: prob(1)?, seed }
            }
            "bipartite" | "random-bipartite" => {
                arity(3)?;
                FamilySpec::Bipartite { a: int(0)?, b: int(1)?, p: prob(2)?, seed }
            }
            "3partite" | "random-3partite" => {
                arity(4)?;
                FamilySpec::Tripartite {
                    sizes: [int(0)?, int(1)?, int(2)?],
                    p: prob(3)?,
                    seed,
                }
            }
            _ => return Err(fail("unknown family")),
        };
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families() {
        let c5 = cycle(5).unwrap();
        assert_eq!((c5.order(), c5.edge_count()), (5, 5));
        assert_eq!(complete(1).unwrap().order(), 1);
        let c = circulant(13, &[1, 5]).unwrap();
        assert_eq!((c.order(), c.edge_count()), (13, 26));
        assert!((0..13).all(|v| c.degree(v) == 4));
        assert!(circulant(13, &[7]).is_err());
        assert!(circulant(5, &[0]).is_err());
        assert_eq!(cycle(2).unwrap().edge_count(), 1);
    }

    #[test]
    fn g58_shape() {
        let g = g58();
        assert_eq!(g.order(), 15);
        assert_eq!(g.edge_count(), 28);
        assert!(g.find_triangle().is_none());
        assert_eq!(g.odd_girth(), Some(5));
    }

    #[test]
    fn extremal_orders() {
        assert_eq!(extremal_class_c(0).unwrap().order(), 0);
        assert_eq!(extremal_class_c(2).unwrap().order(), 5);
        assert_eq!(extremal_class_c(5).unwrap(), g58());
        assert_eq!(extremal_class_c(14).unwrap().order(), 40);
        assert!(extremal_class_c(1000).is_err());
    }

    #[test]
    fn kneser_basics() {
        let p = kneser(2, 1).unwrap();
        assert_eq!(p.graph.order(), 10);
        assert_eq!(p.graph.edge_count(), 15);
        assert!((0..10).all(|v| p.graph.degree(v) == 3));
        assert_eq!(p.sets[0], vec![1, 2]);
        assert_eq!(p.sets[9], vec![4, 5]);
        for k in 0..4 {
            assert_eq!(kneser(1, k).unwrap().graph, complete(k + 2).unwrap());
        }
        assert!(kneser(0, 3).is_err());
        assert!(kneser(5, 5).is_err());
    }

    #[test]
    fn schrijver_basics() {
        assert_eq!(schrijver_order(2, 1), 5);
        assert_eq!(schrijver_order(3, 2), 16);
        assert_eq!(schrijver(2, 2).unwrap().graph.order(), 9);
        for n in 2..=4 {
            let s = schrijver(n, 1).unwrap().graph;
            assert_eq!(s.order(), 2 * n + 1);
            assert!((0..s.order()).all(|v| s.degree(v) == 2));
            assert!(s.is_connected());
        }
        assert!(schrijver(2, 0).is_err());
        assert_eq!(sparse_subsets(2, 0), vec![vec![1, 3], vec![2, 4]]);
        for set in sparse_subsets(3, 3) {
            assert!(set.windows(2).all(|w| w[1] >= w[0] + 2));
            assert!(!(set[0] == 1 && set[2] == 9));
        }
    }

    #[test]
    fn order_formula_symmetry() {
        for n in 1..=8u64 {
            for k in 1..=8u64 {
                assert_eq!(
                    schrijver_order(n as usize, k as usize),
                    binomial(n + k, k) + binomial(n + k - 1, k)
                );
            }
        }
    }

    #[test]
    fn random_families() {
        assert_eq!(gnp(9, 0.0, 3).unwrap().edge_count(), 0);
        assert_eq!(gnp(9, 1.0, 3).unwrap(), complete(9).unwrap());
        assert_eq!(gnp(12, 0.4, 7).unwrap(), gnp(12, 0.4, 7).unwrap());
        assert!(gnp(3, 1.5, 0).is_err());
        let b = random_bipartite(3, 4, 1.0, 1).unwrap();
        assert_eq!(b.edge_count(), 12);
        assert!(b.is_bipartite());
        let t = random_3partite([2, 3, 4], 1.0, 1).unwrap();
        assert_eq!(t.edge_count(), 2 * 3 + 2 * 4 + 3 * 4);
    }

    #[test]
    fn spec_strings() {
        for s in [
            "g58",
            "ramsey35",
            "extremalC:7",
            "schrijver:3,2",
            "kneser:2,1",
            "gnp:12,0.4,seed=7",
            "circulant:13,1,5",
            "bipartite:3,4,0.5,seed=2",
            "3partite:6,6,6,0.5,seed=1",
            "cycle:5",
            "complete:4",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!(
            "random-gnp:5,1".parse::<FamilySpec>().unwrap(),
            FamilySpec::Gnp { n: 5, p: 1.0, seed: 0 }
        );
        for bad in ["", "petersen", "cycle", "cycle:x", "gnp:5,2", "kneser:2", "g58:1"] {
            assert!(bad.parse::<FamilySpec>().is_err(), "{bad}");
        }
    }
}
