use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Instant, SystemTime};

use super::sources::{kneser_samples, Instance, SourceError};
use super::{CheckKind, CheckReport, Counterexample, Inequality, InstanceRecord, Status};
use crate::families::{self, binomial, schrijver_order, sparse_subsets, FamilySpec};
use crate::format::to_graph6;
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::par::Executor;
use crate::solve::{self, Budget, SolveError, SolveResult};

/// A verification check. Parameterized checks carry their parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckId {
    /// Bipartite graphs have θ = α.
    Konig,
    /// Members of the class `3α(H) >= |V(H)|` have θ <= ⌊8α/5⌋.
    Thm3col,
    /// θ − α <= 1 for n <= 9 and θ − α <= 2 for n <= 12.
    Gap912,
    /// Connected θ-critical graphs have 2θ <= n + 1.
    GallaiThetaCritical,
    /// Connected graphs where no vertex deletion lowers ν are factor-critical.
    GallaiFactorCritical,
    /// θ <= α + max deficiency.
    NewGyarfas,
    /// Induced subgraphs H of KG(n, k) have (2n + k)·α(H) >= n·|V(H)|.
    AlphaKneser { n: usize, k: usize },
    /// Induced subgraphs G of KG(n, k) have n·θ(G) <= (n + k)·α(G).
    ThetaKneser { n: usize, k: usize },
    /// χ(KG(n, k)) = χ(SG(n, k)) = k + 2, and the sparse-set count matches its closed form.
    SchrijverChi,
    /// Graphs perfect above clique number c have θ <= evc_bound(c, α), met constructively.
    EvcCover { c: usize },
    /// Triangle-free graphs: the matching cover has size n − ν = θ.
    TfCover,
    /// Explores θ <= ⌊8α/5⌋ on graphs χ-bounded by 1, 3, 3, 4, 5, ...
    Explore85,
}

impl CheckId {
    pub const NAMES: [&'static str; 12] = [
        "konig",
        "thm3col",
        "gap912",
        "gallai-theta-critical",
        "gallai-factor-critical",
        "new-gyarfas",
        "alpha-kneser",
        "theta-kneser",
        "schrijver-chi",
        "evc-cover",
        "tf-cover",
        "explore-8-5",
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CheckId::Konig => "konig",
            CheckId::Thm3col => "thm3col",
            CheckId::Gap912 => "gap912",
            CheckId::GallaiThetaCritical => "gallai-theta-critical",
            CheckId::GallaiFactorCritical => "gallai-factor-critical",
            CheckId::NewGyarfas => "new-gyarfas",
            CheckId::AlphaKneser { .. } => "alpha-kneser",
            CheckId::ThetaKneser { .. } => "theta-kneser",
            CheckId::SchrijverChi => "schrijver-chi",
            CheckId::EvcCover { .. } => "evc-cover",
            CheckId::TfCover => "tf-cover",
            CheckId::Explore85 => "explore-8-5",
        }
    }

    pub fn kind(&self) -> CheckKind {
        match self {
            CheckId::Explore85 => CheckKind::Conjecture,
            _ => CheckKind::Theorem,
        }
    }
}

/// `alpha-kneser:2,1`, `theta-kneser:2,2`, `evc-cover:2`, or a bare name.
impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckId::AlphaKneser { n, k } | CheckId::ThetaKneser { n, k } => {
                write!(f, "{}:{n},{k}", self.name())
            }
            CheckId::EvcCover { c } => write!(f, "{}:{c}", self.name()),
            _ => f.write_str(self.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown or malformed check `{0}`")]
pub struct ParseCheckError(pub String);

impl FromStr for CheckId {
    type Err = ParseCheckError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseCheckError(s.to_string());
        let (name, args) = match s.split_once(':') {
            Some((a, b)) => (a, Some(b)),
            None => (s, None),
        };
        let nums = |a: Option<&str>| -> Result<Vec<usize>, ParseCheckError> {
            a.ok_or_else(err)?
                .split(',')
                .map(|x| x.trim().parse().map_err(|_| err()))
                .collect()
        };
        let plain = |id: CheckId| if args.is_none() { Ok(id) } else { Err(err()) };
        match name {
            "konig" => plain(CheckId::Konig),
            "thm3col" => plain(CheckId::Thm3col),
            "gap912" => plain(CheckId::Gap912),
            "gallai-theta-critical" => plain(CheckId::GallaiThetaCritical),
            "gallai-factor-critical" => plain(CheckId::GallaiFactorCritical),
            "new-gyarfas" => plain(CheckId::NewGyarfas),
            "schrijver-chi" => plain(CheckId::SchrijverChi),
            "tf-cover" => plain(CheckId::TfCover),
            "explore-8-5" => plain(CheckId::Explore85),
            "alpha-kneser" | "theta-kneser" => match nums(args)?[..] {
                [n, k] if n >= 1 => Ok(if name == "alpha-kneser" {
                    CheckId::AlphaKneser { n, k }
                } else {
                    CheckId::ThetaKneser { n, k }
                }),
                _ => Err(err()),
            },
            "evc-cover" => match nums(args)?[..] {
                [c] if c >= 1 => Ok(CheckId::EvcCover { c }),
                _ => Err(err()),
            },
            _ => Err(err()),
        }
    }
}

const STRICT_READING_NOTE: &str = "the bounding function is read as the identity for clique \
    number strictly above c; with the inclusive reading (from c on) the premise would also \
    demand χ = ω at ω = c";

/// Runs checks over instance lists.
#[derive(Debug, Clone, Copy)]
pub struct Verifier {
    pub budget: Budget,
    pub executor: Executor,
    /// Largest order for which a hereditary premise is established by scanning every induced subgraph.
    pub premise_cap: usize,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier {
            budget: Budget::default(),
            executor: Executor::default(),
            premise_cap: 14,
        }
    }
}

/// Per-instance evaluation state.
#[derive(Default)]
struct Eval {
    values: BTreeMap<String, i64>,
    results: BTreeMap<String, SolveResult>,
    notes: Vec<String>,
    skipped: bool,
    failed: Option<Inequality>,
    /// A counterexample worth keeping even though the check passed.
    archived: Option<Inequality>,
}

impl Eval {
    fn set(&mut self, key: &str, v: impl TryInto<i64>) {
        let v = v.try_into().unwrap_or(i64::MAX);
        self.values.insert(key.to_string(), v);
    }

    fn solved(&mut self, key: &str, r: SolveResult) -> i64 {
        let v = r.value as i64;
        self.set(key, v);
        self.results.insert(key.to_string(), r);
        v
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn skip(mut self, why: impl Into<String>) -> Eval {
        self.skipped = true;
        self.note(why);
        self
    }

    /// Records `lhs <= rhs`; the first failure is kept.
    fn require(&mut self, statement: &str, lhs: i64, rhs: i64) -> bool {
        let ok = lhs <= rhs;
        if !ok && self.failed.is_none() {
            self.failed = Some(Inequality {
                statement: statement.to_string(),
                lhs,
                rhs,
            });
        }
        ok
    }

    fn require_eq(&mut self, statement: &str, a: i64, b: i64) -> bool {
        self.require(statement, (a - b).abs(), 0)
    }
}

/// Whether every induced subgraph `H` has `χ(H) <= bound(ω(H))`.
enum Premise {
    Holds(&'static str),
    Fails(VertexSet),
    TooLarge,
}

impl Verifier {
    pub fn new(budget: Budget) -> Self {
        Verifier {
            budget,
            ..Verifier::default()
        }
    }

    pub fn with_executor(self, executor: Executor) -> Self {
        Verifier { executor, ..self }
    }

    /// Runs `check` on every instance. Records come back in instance order.
    pub fn run(&self, check: CheckId, instances: &[Instance]) -> CheckReport {
        let start = Instant::now();
        let name = check.name();
        let records = self.executor.map(instances, |i, inst| {
            let g = &inst.graph;
            let (status, eval) = match self.eval(check, g, &inst.descriptor) {
                Ok(e) if e.skipped => (Status::Skipped, e),
                Ok(e) if e.failed.is_some() => match check.kind() {
                    CheckKind::Theorem => (Status::Violation, e),
                    CheckKind::Conjecture => (Status::Finding, e),
                },
                Ok(e) => (Status::Pass, e),
                Err(err) => {
                    let mut e = Eval::default();
                    e.note(format!("undecided: {err}"));
                    (Status::Undecided, e)
                }
            };
            let graph6 = to_graph6(g);
            let Eval {
                values,
                results,
                notes,
                failed,
                archived,
                ..
            } = eval;
            let counterexample = failed.or(archived).map(|inequality| Counterexample {
                graph6: graph6.clone(),
                inequality,
                values: values.clone(),
                results,
            });
            InstanceRecord {
                check: name.to_string(),
                index: i,
                instance: inst.descriptor.clone(),
                graph6,
                n: g.order(),
                status,
                values,
                note: (!notes.is_empty()).then(|| notes.join("; ")),
                counterexample,
            }
        });
        let mut notes = Vec::new();
        match check {
            CheckId::EvcCover { .. } => notes.push(STRICT_READING_NOTE.to_string()),
            CheckId::Explore85 => notes.extend(exploration_notes(&records)),
            _ => {}
        }
        CheckReport {
            check,
            records,
            notes,
            elapsed: start.elapsed(),
            finished_at: SystemTime::now(),
        }
    }

    /// The Kneser check `check` on KG(n, k) and `samples` random induced subgraphs of it.
    pub fn run_kneser(&self, check: CheckId, samples: usize, seed: u64) -> Result<CheckReport, SourceError> {
        let (n, k) = match check {
            CheckId::AlphaKneser { n, k } | CheckId::ThetaKneser { n, k } => (n, k),
            other => panic!("{other} is not a Kneser check"),
        };
        Ok(self.run(check, &kneser_samples(n, k, samples, seed)?))
    }

    /// χ(KG) = χ(SG) = k + 2 for each pair. Pairs whose Schrijver graph
    /// exceeds the vertex cap are listed in the notes and not tested.
    pub fn schrijver_chromatic(&self, pairs: &[(usize, usize)]) -> CheckReport {
        let mut instances = Vec::new();
        let mut notes = Vec::new();
        for &(n, k) in pairs {
            let spec = FamilySpec::Schrijver { n, k };
            match spec.build() {
                Ok(g) => instances.push(Instance::new(spec.to_string(), g)),
                Err(e) => notes.push(format!("{spec} not tested: {e}")),
            }
        }
        let mut report = self.run(CheckId::SchrijverChi, &instances);
        report.notes.extend(notes);
        report
    }

    fn eval(&self, check: CheckId, g: &Graph, descriptor: &str) -> Result<Eval, SolveError> {
        let b = &self.budget;
        let mut e = Eval::default();
        let n = g.order() as i64;
        match check {
            CheckId::Konig => {
                if !g.is_bipartite() {
                    return Ok(e.skip("not bipartite"));
                }
                let a = e.solved("alpha", solve::max_stable_set(g, b)?);
                let t = e.solved("theta", solve::clique_cover_number(g, b)?);
                e.require("theta <= alpha", t, a);
                e.require("alpha <= theta", a, t);
            }
            CheckId::Thm3col => {
                let m = solve::in_class_c(g, b)?;
                if !m.is_member() {
                    return Ok(e.skip("not in the class 3α(H) >= |V(H)|"));
                }
                if m == solve::ClassMembership::YesBySufficiency {
                    e.note("membership by 3-colourability");
                }
                let a = e.solved("alpha", solve::max_stable_set(g, b)?);
                let t = e.solved("theta", solve::clique_cover_number(g, b)?);
                let bound = 8 * a / 5;
                e.set("bound", bound);
                e.set("tight", (t == bound) as i64);
                e.require("theta <= floor(8*alpha/5)", t, bound);
            }
            CheckId::Gap912 => {
                let a = e.solved("alpha", solve::max_stable_set(g, b)?);
                let t = e.solved("theta", solve::clique_cover_number(g, b)?);
                e.set("gap", t - a);
                match n {
                    0..=9 => {
                        e.require("theta - alpha <= 1", t - a, 1);
                    }
                    10..=12 => {
                        e.require("theta - alpha <= 2", t - a, 2);
                    }
                    _ => return Ok(e.skip(format!("n = {n} is above 12; gap {} recorded", t - a))),
                }
            }
            CheckId::GallaiThetaCritical => {
                if n == 0 || !g.is_connected() {
                    return Ok(e.skip("not connected"));
                }
                if !solve::is_theta_critical(g, b)? {
                    return Ok(e.skip("not θ-critical"));
                }
                let t = e.solved("theta", solve::clique_cover_number(g, b)?);
                e.set("n", n);
                e.require("2*theta <= n + 1", 2 * t, n + 1);
            }
            CheckId::GallaiFactorCritical => {
                if n == 0 || !g.is_connected() {
                    return Ok(e.skip("not connected"));
                }
                let nu = e.solved("nu", solve::max_matching(g));
                let stable = (0..g.order()).all(|v| {
                    let h = g.remove_vertex(v).expect("vertex in range");
                    solve::matching_number(&h) as i64 == nu
                });
                if !stable {
                    return Ok(e.skip("some vertex deletion lowers ν"));
                }
                e.set("n", n);
                let fc = solve::is_factor_critical(g) as i64;
                e.set("factor_critical", fc);
                e.require("1 <= factor_critical", 1, fc);
            }
            CheckId::NewGyarfas => {
                let a = e.solved("alpha", solve::max_stable_set(g, b)?);
                let t = e.solved("theta", solve::clique_cover_number(g, b)?);
                let d = solve::max_deficiency(g, b)?;
                let d = d.value as i64;
                e.set("deficiency", d);
                e.set("n", n);
                e.require("theta <= alpha + deficiency", t, a + d);
                e.require("n - 2*alpha <= deficiency", n - 2 * a, d);
                if !g.is_bipartite() && !g.has_triangle() {
                    e.require("1 <= deficiency", 1, d);
                }
            }
            CheckId::AlphaKneser { n: kn, k } => {
                let a = e.solved("alpha", solve::max_stable_set(g, b)?);
                e.set("n", n);
                let (kn, k) = (kn as i64, k as i64);
                e.set("tight", ((2 * kn + k) * a == kn * n) as i64);
                e.require("n_kneser*|V| <= (2*n_kneser + k)*alpha", kn * n, (2 * kn + k) * a);
            }
            CheckId::ThetaKneser { n: kn, k } => {
                let a = e.solved("alpha", solve::max_stable_set(g, b)?);
                let t = e.solved("theta", solve::clique_cover_number(g, b)?);
                let (kn, k) = (kn as i64, k as i64);
                e.require("n_kneser*theta <= (n_kneser + k)*alpha", kn * t, (kn + k) * a);
            }
            CheckId::SchrijverChi => {
                let Ok(FamilySpec::Schrijver { n: sn, k }) = descriptor.parse::<FamilySpec>() else {
                    return Ok(e.skip("descriptor is not a Schrijver graph"));
                };
                let formula = i64::try_from(schrijver_order(sn, k)).unwrap_or(i64::MAX);
                let enumerated = sparse_subsets(sn, k).len() as i64;
                e.set("order_formula", formula);
                e.set("enumerated", enumerated);
                e.set("n", n);
                e.require_eq("order formula == enumerated sparse sets", formula, enumerated);
                e.require_eq("enumerated sparse sets == |V(SG)|", enumerated, n);
                let target = k as i64 + 2;
                e.set("k_plus_2", target);
                let chi = e.solved("chi", solve::chromatic_number(g, b)?);
                e.require_eq("chi(SG) == k + 2", chi, target);
                if binomial((2 * sn + k) as u64, sn as u64) <= MAX_VERTICES as u128 {
                    let kg = families::kneser(sn, k).expect("fits the cap").graph;
                    let r = solve::chromatic_number(&kg, b)?;
                    let valid = r.check(&kg).is_ok() as i64;
                    e.set("kg_chi", r.value);
                    e.require("1 <= kg_coloring_valid", 1, valid);
                    e.require_eq("chi(KG) == k + 2", r.value as i64, target);
                } else {
                    e.note("KG(n,k) exceeds the vertex cap; only SG solved");
                }
                if k == 1 {
                    let regular = (0..g.order()).all(|v| g.degree(v) == 2) as i64;
                    let connected = g.is_connected() as i64;
                    e.set("two_regular", regular);
                    e.set("connected", connected);
                    e.require("1 <= two_regular", 1, regular);
                    e.require("1 <= connected", 1, connected);
                }
            }
            CheckId::EvcCover { c } => {
                let omega = solve::max_clique(g, b)?.value;
                match self.premise(g, omega, |w| if w > c { w } else { usize::MAX })? {
                    Premise::Fails(h) => {
                        return Ok(e.skip(format!("premise fails on induced subgraph {:?}", h.to_vec())))
                    }
                    Premise::TooLarge => {
                        return Err(SolveError::TooLarge {
                            n: g.order(),
                            cap: self.premise_cap,
                        })
                    }
                    Premise::Holds(why) => e.note(why),
                }
                e.set("omega", omega);
                let a = e.solved("alpha", solve::max_stable_set(g, b)?);
                let t = e.solved("theta", solve::clique_cover_number(g, b)?);
                let bound = i64::try_from(solve::evc_bound(c, a as usize)).unwrap_or(i64::MAX);
                e.set("bound", bound);
                e.set("tight", (t == bound) as i64);
                e.require("theta <= evc_bound(c, alpha)", t, bound);
                let cover = solve::neighborhood_partition_cover(g, c, b)?;
                let size = cover.size() as i64;
                e.set("cover", size);
                let valid = cover.check(g, cover.size()).is_ok() as i64;
                e.set("cover_valid", valid);
                e.require("1 <= cover_valid", 1, valid);
                e.require("theta <= cover", t, size);
                e.require("cover <= evc_bound(c, alpha)", size, bound);
            }
            CheckId::TfCover => {
                if g.has_triangle() {
                    return Ok(e.skip("contains a triangle"));
                }
                let cover = solve::triangle_free_cover(g)?;
                let size = cover.size() as i64;
                e.set("cover", size);
                let valid = cover.check(g, cover.size()).is_ok() as i64;
                e.set("cover_valid", valid);
                e.require("1 <= cover_valid", 1, valid);
                let nu = e.solved("nu", solve::max_matching(g));
                let t = e.solved("theta", solve::clique_cover_number(g, b)?);
                e.set("n", n);
                e.require_eq("cover == n - nu", size, n - nu);
                e.require_eq("cover == theta", size, t);
            }
            CheckId::Explore85 => {
                let omega = solve::max_clique(g, b)?.value;
                let bound_fn = |w: usize| if w == 2 { 3 } else { w };
                match self.premise(g, omega, bound_fn)? {
                    Premise::Fails(_) => return Ok(e.skip("not χ-bounded by 1, 3, 3, 4, 5, ...")),
                    Premise::TooLarge => {
                        return Err(SolveError::TooLarge {
                            n: g.order(),
                            cap: self.premise_cap,
                        })
                    }
                    Premise::Holds(why) => e.note(why),
                }
                let a = e.solved("alpha", solve::max_stable_set(g, b)?);
                let t = e.solved("theta", solve::clique_cover_number(g, b)?);
                let bound = 8 * a / 5;
                let old = 3 * a / 2;
                e.set("bound", bound);
                e.set("three_halves", old);
                e.require("theta <= floor(8*alpha/5)", t, bound);
                if t > old {
                    e.note("refutes theta <= floor(3*alpha/2)");
                    e.archived = Some(Inequality {
                        statement: "theta <= floor(3*alpha/2)".to_string(),
                        lhs: t,
                        rhs: old,
                    });
                }
            }
        }
        Ok(e)
    }

    /// Establishes `χ(H) <= bound(ω(H))` for every induced `H`, where
    /// `usize::MAX` means unbounded. Two sound shortcuts come first: `ω(G)`
    /// below every finite bound, and a 3-colouring when the bound allows
    /// χ = 3 at every clique number up to 3. Otherwise every induced
    /// subgraph is scanned, up to `premise_cap` vertices.
    fn premise(&self, g: &Graph, omega: usize, bound: impl Fn(usize) -> usize) -> Result<Premise, SolveError> {
        let finite_from = (1..=omega).find(|&w| bound(w) != usize::MAX);
        if finite_from.is_none() {
            return Ok(Premise::Holds("premise holds: clique number below the threshold"));
        }
        if bound(1) >= 1 && bound(2) >= 3 && bound(3) >= 3 {
            let chi = solve::chromatic_number(g, &self.budget)?.value;
            if chi <= 3 {
                return Ok(Premise::Holds("premise holds: 3-colourable"));
            }
        }
        let n = g.order();
        if n > self.premise_cap {
            return Ok(Premise::TooLarge);
        }
        let omegas = solve::stability_table(&g.complement(), self.premise_cap)?;
        for mask in 1u64..(1 << n) {
            let w = omegas[mask as usize] as usize;
            let limit = bound(w);
            if limit >= mask.count_ones() as usize {
                continue;
            }
            let set = VertexSet::from_mask(mask);
            let h = g.induced_subgraph(&set)?;
            if solve::chromatic_number(&h, &self.budget)?.value > limit {
                return Ok(Premise::Fails(set));
            }
        }
        Ok(Premise::Holds("premise holds: every induced subgraph scanned"))
    }
}

/// Summary notes for conjecture exploration: where θ = 8α/5 is attained and
/// the largest θ seen at α = 3.
fn exploration_notes(records: &[InstanceRecord]) -> Vec<String> {
    let decided = records.iter().filter(|r| r.status == Status::Pass || r.status == Status::Finding);
    let mut notes = Vec::new();
    let attained: Vec<&str> = decided
        .clone()
        .filter(|r| {
            let (a, t) = (r.values["alpha"], r.values["theta"]);
            a > 0 && 5 * t == 8 * a
        })
        .map(|r| r.instance.as_str())
        .collect();
    if !attained.is_empty() {
        notes.push(format!(
            "theta/alpha = 8/5 attained by {} instance(s), first {}",
            attained.len(),
            attained[0]
        ));
    }
    if let Some(best) = decided
        .filter(|r| r.values["alpha"] == 3)
        .max_by_key(|r| (r.values["theta"], std::cmp::Reverse(r.index)))
    {
        notes.push(format!(
            "largest theta at alpha = 3: {} ({})",
            best.values["theta"], best.instance
        ));
    }
    notes
}
