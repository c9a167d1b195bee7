//! Batch front end: generate family graphs, compute invariants with
//! certificates, run verification checks and explore conjectures.
//!
//! Exit status: 0 on success, 1 when a theorem check records a violation,
//! 2 on any usage, parse or I/O error.

use std::fs;
use std::io::{self, Read, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use cobound::families::FamilySpec;
use cobound::format::{read_graphs, GraphFormat};
use cobound::par::Executor;
use cobound::solve;
use cobound::verify::{
    exhaustive_labeled, family_range, from_specs, CheckId, CheckReport, Instance, Sampler, Verifier,
};
use cobound::{Budget, Graph};
use serde_json::json;

#[derive(Parser)]
#[command(name = "cobound", version, about = "Exact graph invariants and certified clique-cover checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write family graphs as graph6 lines or DIMACS.
    Generate(GenerateArgs),
    /// Compute n, ω, α, χ, θ, ν with certificates, one JSON object per input graph.
    Invariants(InvariantsArgs),
    /// Run a theorem check and write its JSON-lines report.
    Verify(VerifyArgs),
    /// Explore θ <= ⌊8α/5⌋; findings are archived and never change the exit code.
    Explore(ExploreArgs),
}

#[derive(Args)]
struct BudgetArgs {
    /// Branch-and-bound node limit per solver call.
    #[arg(long, default_value_t = 500_000_000)]
    budget_nodes: u64,
    /// Time limit per solver call, in seconds.
    #[arg(long, default_value_t = 60.0)]
    budget_time: f64,
    /// Largest vertex count for exhaustive induced-subgraph enumeration.
    #[arg(long, default_value_t = 20)]
    max_enum: usize,
    /// Run instances one at a time instead of on the thread pool.
    #[arg(long)]
    sequential: bool,
}

impl BudgetArgs {
    fn budget(&self) -> Result<Budget> {
        if !(self.budget_time.is_finite() && self.budget_time > 0.0) {
            bail!("--budget-time must be a positive number of seconds");
        }
        Ok(Budget::new(self.budget_nodes, self.max_enum, Duration::from_secs_f64(self.budget_time))?)
    }

    fn verifier(&self) -> Result<Verifier> {
        let exec = if self.sequential { Executor::Sequential } else { Executor::default() };
        Ok(Verifier::new(self.budget()?).with_executor(exec))
    }
}

#[derive(Args)]
struct SourceArgs {
    /// Family spec strings, e.g. `g58`, `extremalC:7`, `gnp:12,0.4,seed=7`.
    #[arg(long = "spec")]
    specs: Vec<String>,
    /// One-parameter family (`cycle`, `complete`, `extremalC`) swept over `--range`.
    #[arg(long, requires = "range")]
    family: Option<String>,
    /// Inclusive parameter range `A..B`.
    #[arg(long, requires = "family")]
    range: Option<String>,
    /// Every labeled graph with at most this many vertices (max 7).
    #[arg(long)]
    exhaustive_n: Option<usize>,
    /// Random sampler, e.g. `gnp:7..9`, `3partite:18,0.5`, `kneser-sub:2,2`.
    #[arg(long)]
    sampler: Option<String>,
    /// Number of sampler draws.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Master seed for sampling.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Graph6 lines or one DIMACS document; `-` reads stdin.
    #[arg(long)]
    input: Option<PathBuf>,
}

impl SourceArgs {
    fn instances(&self) -> Result<Vec<Instance>> {
        let specs = self
            .specs
            .iter()
            .map(|s| s.parse::<FamilySpec>())
            .collect::<Result<Vec<_>, _>>()?;
        let mut out = from_specs(&specs)?;
        if let (Some(tag), Some(range)) = (&self.family, &self.range) {
            out.extend(family_range(tag, parse_range(range)?)?);
        }
        if let Some(n) = self.exhaustive_n {
            out.extend(exhaustive_labeled(n)?);
        }
        if let Some(s) = &self.sampler {
            out.extend(s.parse::<Sampler>()?.sample(self.samples, self.seed)?);
        }
        if let Some(path) = &self.input {
            let graphs = read_graphs(&read_input(Some(path))?)?;
            out.extend(graphs.into_iter().enumerate().map(|(i, g)| Instance::new(format!("input:{}", i + 1), g)));
        }
        Ok(out)
    }
}

#[derive(Args)]
struct GenerateArgs {
    /// Family spec strings.
    specs: Vec<String>,
    #[arg(long, requires = "range")]
    family: Option<String>,
    #[arg(long, requires = "family")]
    range: Option<String>,
    #[arg(long, default_value = "graph6")]
    format: GraphFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct InvariantsArgs {
    /// Input file; stdin when omitted or `-`.
    input: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check name: konig, thm3col, gap912, gallai-theta-critical,
    /// gallai-factor-critical, new-gyarfas, alpha-kneser, theta-kneser,
    /// schrijver-chi, evc-cover, tf-cover.
    check: String,
    #[command(flatten)]
    source: SourceArgs,
    /// `n,k` pairs separated by `;`, for schrijver-chi and the Kneser checks.
    #[arg(long)]
    pairs: Option<String>,
    /// Clique-number threshold for evc-cover.
    #[arg(long, default_value_t = 2)]
    c: usize,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExploreArgs {
    /// Conjecture to explore; only `8/5` exists.
    #[arg(default_value = "8/5")]
    conjecture: String,
    #[command(flatten)]
    source: SourceArgs,
    /// Include the 15-vertex graph attaining θ/α = 8/5.
    #[arg(long)]
    preload_g58: bool,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>> {
    let (a, b) = s.split_once("..").context("range must look like A..B")?;
    let a: usize = a.trim().parse().context("range start")?;
    let b: usize = b.trim().trim_start_matches('=').parse().context("range end")?;
    if a > b {
        bail!("empty range {s}");
    }
    Ok(a..=b)
}

fn parse_pairs(s: &str) -> Result<Vec<(usize, usize)>> {
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let (n, k) = p.split_once(',').with_context(|| format!("pair `{p}` must be n,k"))?;
            Ok((n.trim().parse()?, k.trim().parse()?))
        })
        .collect()
}

fn read_input(path: Option<&PathBuf>) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn write_output(path: Option<&PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn generate(args: &GenerateArgs) -> Result<()> {
    let mut graphs: Vec<Graph> = Vec::new();
    for s in &args.specs {
        graphs.push(s.parse::<FamilySpec>()?.build()?);
    }
    if let (Some(tag), Some(range)) = (&args.family, &args.range) {
        graphs.extend(family_range(tag, parse_range(range)?)?.into_iter().map(|i| i.graph));
    }
    if graphs.is_empty() {
        bail!("nothing to generate: give family specs or --family with --range");
    }
    if args.format == GraphFormat::Dimacs && graphs.len() > 1 {
        bail!("DIMACS holds one graph per document; generate one spec at a time");
    }
    let text: String = graphs.iter().map(|g| args.format.write(g)).collect();
    write_output(args.out.as_ref(), &text)
}

fn invariants(args: &InvariantsArgs) -> Result<()> {
    let b = args.budget.budget()?;
    let graphs = read_graphs(&read_input(args.input.as_ref())?)?;
    let mut out = String::new();
    for g in &graphs {
        let omega = solve::max_clique(g, &b)?;
        let alpha = solve::max_stable_set(g, &b)?;
        let chi = solve::chromatic_number(g, &b)?;
        let theta = solve::clique_cover_number(g, &b)?;
        let nu = solve::max_matching(g);
        let line = json!({
            "n": g.order(),
            "omega": omega.value,
            "alpha": alpha.value,
            "chi": chi.value,
            "theta": theta.value,
            "nu": nu.value,
            "certificates": {
                "omega": omega.certificate,
                "alpha": alpha.certificate,
                "chi": chi.certificate,
                "theta": theta.certificate,
                "nu": nu.certificate,
            },
        });
        out.push_str(&line.to_string());
        out.push('\n');
    }
    write_output(args.out.as_ref(), &out)
}

fn summarize(r: &CheckReport) {
    let s = r.summary();
    eprintln!(
        "{}: {} tested, {} passed, {} skipped, {} violations, {} undecided, {} findings",
        r.check, s.tested, s.passed, s.skipped, s.violations, s.undecided, s.findings
    );
}

/// Returns whether any theorem check recorded a violation.
fn verify(args: &VerifyArgs) -> Result<bool> {
    let v = args.budget.verifier()?;
    let pairs = args.pairs.as_deref().map(parse_pairs).transpose()?;
    let mut reports = Vec::new();
    match args.check.as_str() {
        "schrijver-chi" => {
            let pairs = pairs.context("schrijver-chi needs --pairs")?;
            reports.push(v.schrijver_chromatic(&pairs));
        }
        name @ ("alpha-kneser" | "theta-kneser") => {
            let pairs = pairs.context("the Kneser checks need --pairs")?;
            for (n, k) in pairs {
                let check: CheckId = format!("{name}:{n},{k}").parse()?;
                // Explicit instances are taken to be induced subgraphs of KG(n, k).
                let instances = args.source.instances()?;
                if instances.is_empty() {
                    reports.push(v.run_kneser(check, args.source.samples, args.source.seed)?);
                } else {
                    reports.push(v.run(check, &instances));
                }
            }
        }
        "explore-8-5" => bail!("conjecture exploration runs under `explore`"),
        other => {
            let check: CheckId = if other == "evc-cover" {
                CheckId::EvcCover { c: args.c }
            } else {
                other.parse()?
            };
            if let CheckId::EvcCover { c: 0 } = check {
                bail!("--c must be at least 1");
            }
            reports.push(v.run(check, &args.source.instances()?));
        }
    }
    let text: String = reports.iter().map(CheckReport::to_json_lines).collect();
    write_output(args.out.as_ref(), &text)?;
    reports.iter().for_each(summarize);
    Ok(reports.iter().any(CheckReport::has_theorem_violation))
}

fn explore(args: &ExploreArgs) -> Result<()> {
    if !matches!(args.conjecture.as_str(), "8/5" | "8-5" | "explore-8-5") {
        bail!("unknown conjecture `{}`; only 8/5 is available", args.conjecture);
    }
    let v = args.budget.verifier()?;
    let mut instances = Vec::new();
    if args.preload_g58 {
        instances.extend(from_specs(&[FamilySpec::G58])?);
    }
    instances.extend(args.source.instances()?);
    let report = v.run(CheckId::Explore85, &instances);
    write_output(args.out.as_ref(), &report.to_json_lines())?;
    summarize(&report);
    for note in &report.notes {
        eprintln!("  {note}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let result = match &cli.command {
        Command::Generate(a) => generate(a).map(|_| false),
        Command::Invariants(a) => invariants(a).map(|_| false),
        Command::Verify(a) => verify(a),
        Command::Explore(a) => explore(a).map(|_| false),
    };
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
