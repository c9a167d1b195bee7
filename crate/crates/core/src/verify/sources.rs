//! Instance lists for checks: family members, exhaustive labeled
//! enumeration, seeded samplers and graph6 input.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::families::{self, FamilyError, FamilySpec};
use crate::format::{parse_graph6, FormatError};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error)]
pub enum SourceError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("invalid sampler `{spec}`: {reason}")]
    Sampler { spec: String, reason: String },
    #[error("family `{0}` does not take a single integer parameter")]
    NotRangeable(String),
    #[error("exhaustive enumeration is limited to n <= 7, got {0}")]
    ExhaustiveTooLarge(usize),
}

/// A graph to check, with a descriptor that reproduces it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub descriptor: String,
    pub graph: Graph,
}

impl Instance {
    pub fn new(descriptor: impl Into<String>, graph: Graph) -> Self {
        Instance {
            descriptor: descriptor.into(),
            graph,
        }
    }
}

pub fn from_specs(specs: &[FamilySpec]) -> Result<Vec<Instance>, SourceError> {
    specs
        .iter()
        .map(|s| Ok(Instance::new(s.to_string(), s.build()?)))
        .collect()
}

/// Members of a one-parameter family (`cycle`, `complete`, `extremalC`) over a range.
pub fn family_range(tag: &str, range: RangeInclusive<usize>) -> Result<Vec<Instance>, SourceError> {
    let make = |x: usize| -> Result<FamilySpec, SourceError> {
        match tag {
            "cycle" => Ok(FamilySpec::Cycle(x)),
            "complete" => Ok(FamilySpec::Complete(x)),
            "extremalC" => Ok(FamilySpec::ExtremalC(x)),
            other => Err(SourceError::NotRangeable(other.to_string())),
        }
    };
    let specs = range.map(make).collect::<Result<Vec<_>, _>>()?;
    from_specs(&specs)
}

/// Every labeled graph on `0..=max_n` vertices, `n` ascending then edge mask
/// ascending. Bit `b` of the mask is the `b`-th pair in column order
/// `(0,1), (0,2), (1,2), (0,3), ..`.
pub fn exhaustive_labeled(max_n: usize) -> Result<Vec<Instance>, SourceError> {
    if max_n > 7 {
        return Err(SourceError::ExhaustiveTooLarge(max_n));
    }
    let mut out = Vec::new();
    for n in 0..=max_n {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        for mask in 0u64..(1 << pairs.len()) {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e);
            let g = Graph::from_edges(n, edges).expect("valid labeled graph");
            out.push(Instance::new(format!("labeled:{n}:{mask}"), g));
        }
    }
    Ok(out)
}

pub fn from_graph6_text(text: &str) -> Result<Vec<Instance>, SourceError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| Ok(Instance::new(format!("input:{}", i + 1), parse_graph6(l)?)))
        .collect()
}

/// Random nonempty induced subgraphs of `kneser(n, k)`, each vertex kept with
/// probability 1/2, preceded by the full graph.
pub fn kneser_samples(n: usize, k: usize, samples: usize, seed: u64) -> Result<Vec<Instance>, SourceError> {
    let kg = families::kneser(n, k)?.graph;
    let mut out = vec![Instance::new(format!("kneser:{n},{k}"), kg.clone())];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while out.len() < samples + 1 {
        let keep: VertexSet = (0..kg.order()).filter(|_| rng.gen_bool(0.5)).collect();
        if keep.is_empty() {
            continue;
        }
        let list = keep.to_vec().iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        let h = kg.induced_subgraph(&keep).expect("subset of kneser vertices");
        out.push(Instance::new(format!("kneser:{n},{k}/sub={list}"), h));
    }
    Ok(out)
}

/// A seeded random-instance generator, written `gnp:N[,P]`,
/// `bipartite:N[,P]`, `3partite:N[,P]` or `kneser-sub:n,k`. `N` is a vertex
/// count or an inclusive range `A..B`; for the partite samplers it bounds the
/// total. Without `P` each instance draws its edge probability from
/// {0.1, .., 0.9}.
#[derive(Debug, Clone, PartialEq)]
pub enum Sampler {
    Gnp { n: RangeInclusive<usize>, p: Option<f64> },
    Bipartite { n: RangeInclusive<usize>, p: Option<f64> },
    Tripartite { n: RangeInclusive<usize>, p: Option<f64> },
    KneserSub { n: usize, k: usize },
}

impl Sampler {
    /// `count` instances. Each instance gets its own sub-seed drawn from
    /// `seed`, and its descriptor is a family spec that rebuilds it.
    pub fn sample(&self, count: usize, seed: u64) -> Result<Vec<Instance>, SourceError> {
        if let Sampler::KneserSub { n, k } = *self {
            let mut v = kneser_samples(n, k, count, seed)?;
            v.remove(0);
            return Ok(v);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            let sub_seed: u64 = rng.gen();
            let spec = match self {
                Sampler::Gnp { n, p } => FamilySpec::Gnp {
                    n: rng.gen_range(n.clone()),
                    p: p.unwrap_or_else(|| draw_p(&mut rng)),
                    seed: sub_seed,
                },
                Sampler::Bipartite { n, p } => {
                    let total = rng.gen_range(n.clone());
                    let a = rng.gen_range(0..=total);
                    FamilySpec::Bipartite {
                        a,
                        b: total - a,
                        p: p.unwrap_or_else(|| draw_p(&mut rng)),
                        seed: sub_seed,
                    }
                }
                Sampler::Tripartite { n, p } => {
                    let total = rng.gen_range(n.clone());
                    let a = rng.gen_range(0..=total);
                    let b = rng.gen_range(0..=total - a);
                    FamilySpec::Tripartite {
                        sizes: [a, b, total - a - b],
                        p: p.unwrap_or_else(|| draw_p(&mut rng)),
                        seed: sub_seed,
                    }
                }
                Sampler::KneserSub { .. } => unreachable!(),
            };
            out.push(Instance::new(spec.to_string(), spec.build()?));
        }
        Ok(out)
    }
}

fn draw_p(rng: &mut ChaCha8Rng) -> f64 {
    rng.gen_range(1..=9) as f64 / 10.0
}

fn fmt_range(f: &mut fmt::Formatter<'_>, r: &RangeInclusive<usize>) -> fmt::Result {
    if r.start() == r.end() {
        write!(f, "{}", r.start())
    } else {
        write!(f, "{}..{}", r.start(), r.end())
    }
}

impl fmt::Display for Sampler {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (tag, n, p) = match self {
            Sampler::Gnp { n, p } => ("gnp", n, p),
            Sampler::Bipartite { n, p } => ("bipartite", n, p),
            Sampler::Tripartite { n, p } => ("3partite", n, p),
            Sampler::KneserSub { n, k } => return write!(f, "kneser-sub:{n},{k}"),
        };
        write!(f, "{tag}:")?;
        fmt_range(f, n)?;
        if let Some(p) = p {
            write!(f, ",{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Sampler {
    type Err = SourceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fail = |reason: &str| SourceError::Sampler {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let (tag, rest) = s.trim().split_once(':').ok_or_else(|| fail("expected tag:args"))?;
        let args: Vec<&str> = rest.split(',').map(str::trim).collect();
        let range = |a: &str| -> Result<RangeInclusive<usize>, SourceError> {
            let parse = |x: &str| x.parse::<usize>().map_err(|_| fail("expected a vertex count"));
            let r = match a.split_once("..") {
                Some((lo, hi)) => parse(lo)?..=parse(hi.trim_start_matches('='))?,
                None => parse(a)?..=parse(a)?,
            };
            if r.is_empty() {
                return Err(fail("empty vertex range"));
            }
            Ok(r)
        };
        let prob = |i: usize| -> Result<Option<f64>, SourceError> {
            match args.get(i) {
                None => Ok(None),
                Some(a) => {
                    let p: f64 = a.parse().map_err(|_| fail("expected a probability"))?;
                    if !(0.0..=1.0).contains(&p) {
                        return Err(fail("probability outside [0, 1]"));
                    }
                    Ok(Some(p))
                }
            }
        };
        if args.len() > 2 {
            return Err(fail("too many arguments"));
        }
        match tag {
            "gnp" => Ok(Sampler::Gnp { n: range(args[0])?, p: prob(1)? }),
            "bipartite" => Ok(Sampler::Bipartite { n: range(args[0])?, p: prob(1)? }),
            "3partite" => Ok(Sampler::Tripartite { n: range(args[0])?, p: prob(1)? }),
            "kneser-sub" => {
                let int = |i: usize| -> Result<usize, SourceError> {
                    args.get(i)
                        .and_then(|a| a.parse().ok())
                        .ok_or_else(|| fail("expected n,k"))
                };
                Ok(Sampler::KneserSub { n: int(0)?, k: int(1)? })
            }
            _ => Err(fail("unknown sampler")),
        }
    }
}
