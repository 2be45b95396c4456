//! `gpn`: general position numbers from the command line.
//!
//! Exit codes: 0 success, 1 a failed verification or a crosscheck mismatch,
//! 2 usage or input errors, 3 an exhausted search budget.

pub mod crosscheck;
pub mod input;

use std::io::Write;
use std::time::Instant;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use gpn_core::exact::{eta_exact, gp_exact, hull_numbers, max_clique, max_independent_set, psi_exact, MAX_HULL_ORDER};
use gpn_core::formulas::{solve_with, GpResult, Strategy};
use gpn_core::io::{to_edge_list, to_graph6};
use gpn_core::verify::{check_characterized, check_definitional, distant_edges_bound, GpViolation};
use gpn_core::{Distance, Error, Graph, SearchBudget, SearchMode, VertexSet};
use serde::Serialize;

use crosscheck::{CampaignConfig, Family, Trials};
use input::GraphSource;

pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

const INPUT_HELP: &str = "\
Graph inputs:
  <path>        file holding an edge list (first line n, then `u v` per line) or graph6
  g6:<string>   graph6 string, e.g. g6:Dhc
  gen:<spec>    generated graph, e.g. gen:petersen, gen:grid:3x4, gen:kn_minus:n=9,h=C5

Generator specs:
  path:N  cycle:N  complete:N  complete_bipartite:RxS  star:K  wheel:K  hypercube:K
  grid:NxM  petersen  gn:N  double_star:AxB  gnk:n=N,k=K  hnmst:n=N,m=M,s=S,t=T
  kn_minus:n=N,h=H      H is K<k>, S<k> (star K_1,k), P<k>, K<r>_<s>, W<k> or C<k>
  random_tree:n=N,seed=S  gnp:n=N,p=P,seed=S  random_bipartite:a=A,b=B,p=P,seed=S";

#[derive(Debug, Parser)]
#[command(name = "gpn", version, about = "General position number of graphs", after_help = INPUT_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute gp(G) with a gp-set.
    Solve(SolveArgs),
    /// Check whether a vertex set is in general position.
    Verify(VerifyArgs),
    /// Print graph invariants.
    Invariants(InvariantsArgs),
    /// Print a generated graph.
    Generate(GenerateArgs),
    /// Compare closed forms against exact search on graph families.
    Crosscheck(CrosscheckArgs),
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Search node limit.
    #[arg(long, default_value_t = 100_000_000)]
    pub max_nodes: u64,
    /// Search wall-clock limit in milliseconds.
    #[arg(long, default_value_t = 60_000)]
    pub max_millis: u64,
    /// Enumerate subsets instead of branch and bound.
    #[arg(long)]
    pub brute_force: bool,
}

impl BudgetArgs {
    fn budget(&self) -> anyhow::Result<SearchBudget> {
        let mode = if self.brute_force { SearchMode::BruteForce } else { SearchMode::BranchAndBound };
        Ok(SearchBudget::new(self.max_nodes, self.max_millis, mode)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Exact,
    Formula,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long, value_name = "INPUT")]
    pub input: GraphSource,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
    #[arg(long)]
    pub json: bool,
    /// Include wall-clock times (makes output run-dependent).
    #[arg(long)]
    pub timings: bool,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_name = "INPUT")]
    pub input: GraphSource,
    /// Comma-separated vertex ids, e.g. 0,3,7.
    #[arg(long, value_name = "IDS")]
    pub set: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct InvariantsArgs {
    #[arg(long, value_name = "INPUT")]
    pub input: GraphSource,
    /// Also compute the exponential invariants (gp, eta, psi, hull numbers, distant-edge bound).
    #[arg(long)]
    pub all: bool,
    #[arg(long)]
    pub json: bool,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    G6,
    Edges,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// Generator spec, with or without the `gen:` prefix.
    pub spec: String,
    #[arg(long, value_enum, default_value_t = Emit::G6)]
    pub emit: Emit,
}

#[derive(Debug, Args)]
pub struct CrosscheckArgs {
    /// Comma-separated families.
    #[arg(long, value_enum, value_delimiter = ',', required = true)]
    pub families: Vec<Family>,
    /// Largest order of the graphs handed to exact search.
    #[arg(long, default_value_t = 10)]
    pub n_max: usize,
    /// `all`, or a count of instances per family.
    #[arg(long, default_value = "all")]
    pub trials: Trials,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long)]
    pub json: bool,
    /// Report the slowest instance per family (makes output run-dependent).
    #[arg(long)]
    pub timings: bool,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

/// Runs one command, writing the report to `out`. Errors are input or
/// budget failures; `main` maps them to exit codes with [`exit_code`].
pub fn run(cli: Cli, out: &mut dyn Write) -> anyhow::Result<u8> {
    match cli.command {
        Command::Solve(args) => solve(args, out),
        Command::Verify(args) => verify(args, out),
        Command::Invariants(args) => invariants(args, out),
        Command::Generate(args) => generate(args, out),
        Command::Crosscheck(args) => crosscheck(args, out),
    }
}

pub fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::BudgetExhausted { .. }) => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

fn print_json(out: &mut dyn Write, value: &impl Serialize) -> anyhow::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct SolveReport {
    schema: u32,
    input: String,
    n: usize,
    edges: usize,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<GpResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lower_bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    nodes: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    millis: Option<u128>,
}

fn solve(args: SolveArgs, out: &mut dyn Write) -> anyhow::Result<u8> {
    let g = args.input.load()?;
    let budget = args.budget.budget()?;
    let strategy = match args.method {
        MethodArg::Auto => Strategy::Auto,
        MethodArg::Exact => Strategy::Exact,
        MethodArg::Formula => Strategy::Formula,
    };
    let start = Instant::now();
    let outcome = solve_with(&g, &budget, strategy);
    let millis = args.timings.then(|| start.elapsed().as_millis());
    let mut report = SolveReport {
        schema: 1,
        input: args.input.to_string(),
        n: g.n(),
        edges: g.edge_count(),
        status: "ok",
        result: None,
        lower_bound: None,
        witness: None,
        nodes: None,
        millis,
    };
    let code = match outcome {
        Ok(result) => {
            report.result = Some(result);
            0
        }
        Err(Error::BudgetExhausted { lower_bound, witness, nodes }) => {
            report.status = "budget_exhausted";
            report.lower_bound = Some(lower_bound);
            report.witness = Some(witness);
            report.nodes = Some(nodes);
            EXIT_BUDGET
        }
        Err(e) => return Err(e.into()),
    };
    if args.json {
        print_json(out, &report)?;
        return Ok(code);
    }
    writeln!(out, "input: {} (n = {}, m = {})", report.input, report.n, report.edges)?;
    match (&report.result, report.lower_bound) {
        (Some(r), _) => {
            writeln!(out, "gp = {}", r.value)?;
            writeln!(out, "method: {}", r.method)?;
            if let Some(w) = &r.witness {
                writeln!(out, "witness: {w}")?;
            }
            writeln!(out, "verified: {}", r.verified)?;
        }
        (None, Some(lb)) => {
            writeln!(out, "budget exhausted after {} nodes", report.nodes.unwrap_or(0))?;
            writeln!(out, "gp >= {lb}")?;
            writeln!(out, "witness: {}", report.witness.as_ref().expect("set with lower bound"))?;
        }
        (None, None) => unreachable!("report has a result or a bound"),
    }
    if let Some(ms) = report.millis {
        writeln!(out, "time: {ms} ms")?;
    }
    Ok(code)
}

fn parse_set(text: &str, g: &Graph) -> anyhow::Result<VertexSet> {
    let ids = text
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().with_context(|| format!("bad vertex id {t:?}")))
        .collect::<anyhow::Result<Vec<_>>>()?;
    let set = VertexSet::from_distinct(ids)?;
    set.validate(g)?;
    Ok(set)
}

#[derive(Serialize)]
struct VerifyReport {
    schema: u32,
    input: String,
    set: VertexSet,
    in_general_position: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    violation: Option<GpViolation>,
    /// Verdict of the structural route; it must match the definitional one.
    characterized: bool,
}

fn verify(args: VerifyArgs, out: &mut dyn Write) -> anyhow::Result<u8> {
    let g = args.input.load()?;
    let set = parse_set(&args.set, &g)?;
    let definitional = check_definitional(&g, &set)?;
    let characterized = check_characterized(&g, &set)?;
    anyhow::ensure!(
        definitional.is_ok() == characterized.is_ok(),
        "internal error: the definitional and structural checks disagree on {set}"
    );
    let report = VerifyReport {
        schema: 1,
        input: args.input.to_string(),
        in_general_position: definitional.is_ok(),
        violation: definitional.err(),
        characterized: characterized.is_ok(),
        set,
    };
    if args.json {
        print_json(out, &report)?;
    } else {
        match &report.violation {
            None => writeln!(out, "PASS: {} is in general position", report.set)?,
            Some(v) => writeln!(out, "FAIL: {v}")?,
        }
    }
    Ok(if report.in_general_position { 0 } else { EXIT_FAIL })
}

#[derive(Serialize, Default)]
struct InvariantsReport {
    schema: u32,
    input: String,
    n: usize,
    edges: usize,
    components: usize,
    diameter: Option<Distance>,
    bipartite: bool,
    simplicial: usize,
    omega: usize,
    alpha: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    gp: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    eta: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    psi: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hull: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    upper_hull: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    distant_edge_bound: Option<usize>,
}

fn invariants(args: InvariantsArgs, out: &mut dyn Write) -> anyhow::Result<u8> {
    let g = args.input.load()?;
    let labeling = g.bipartition();
    let mut r = InvariantsReport {
        schema: 1,
        input: args.input.to_string(),
        n: g.n(),
        edges: g.edge_count(),
        components: g.components().len(),
        diameter: (g.n() > 0).then(|| g.diameter()),
        bipartite: labeling.is_some(),
        simplicial: g.simplicial_vertices().len(),
        omega: max_clique(&g).0,
        alpha: max_independent_set(&g).0,
        ..InvariantsReport::default()
    };
    if args.all {
        r.gp = Some(gp_exact(&g, &args.budget.budget()?)?.value);
        r.eta = Some(eta_exact(&g).0);
        if let Some(l) = &labeling {
            r.psi = Some(psi_exact(&g, l)?.0);
        }
        if g.n() <= MAX_HULL_ORDER && g.n() >= 2 && g.is_connected() {
            let h = hull_numbers(&g)?;
            r.hull = Some(h.h);
            r.upper_hull = Some(h.h_plus);
        }
        r.distant_edge_bound = distant_edges_bound(&g).ok().map(|b| b.0);
    }
    if args.json {
        print_json(out, &r)?;
        return Ok(0);
    }
    let opt = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
    let mut rows = vec![
        ("n", r.n.to_string()),
        ("edges", r.edges.to_string()),
        ("components", r.components.to_string()),
        ("diameter", r.diameter.map_or("-".to_string(), |d| d.to_string())),
        ("bipartite", r.bipartite.to_string()),
        ("simplicial", r.simplicial.to_string()),
        ("omega", r.omega.to_string()),
        ("alpha", r.alpha.to_string()),
    ];
    if args.all {
        rows.extend([
            ("gp", opt(r.gp)),
            ("eta", opt(r.eta)),
            ("psi", opt(r.psi)),
            ("h", opt(r.hull)),
            ("h+", opt(r.upper_hull)),
            ("distant-edge bound", opt(r.distant_edge_bound)),
        ]);
    }
    for (name, value) in rows {
        writeln!(out, "{name:<20}{value}")?;
    }
    Ok(0)
}

fn generate(args: GenerateArgs, out: &mut dyn Write) -> anyhow::Result<u8> {
    let spec = args.spec.strip_prefix("gen:").unwrap_or(&args.spec);
    let g = GraphSource::Generator(spec.parse()?).load()?;
    match args.emit {
        Emit::G6 => writeln!(out, "{}", to_graph6(&g))?,
        Emit::Edges => write!(out, "{}", to_edge_list(&g))?,
    }
    Ok(0)
}

fn crosscheck(args: CrosscheckArgs, out: &mut dyn Write) -> anyhow::Result<u8> {
    let config = CampaignConfig {
        families: args.families,
        n_max: args.n_max,
        trials: args.trials,
        seed: args.seed,
        budget: args.budget.budget()?,
    };
    crosscheck::validate(&config).map_err(anyhow::Error::msg)?;
    let summary = if args.json {
        crosscheck::run_campaign(&config, args.timings, |_| {}, |_| {})?
    } else {
        writeln!(out, "{:<22}{:>10}{:>8}{:>10}", "family", "instances", "agree", "mismatch")?;
        let mut write_error = None;
        let summary = crosscheck::run_campaign(
            &config,
            args.timings,
            |row| {
                let mut line = format!("{:<22}{:>10}{:>8}{:>10}", row.family.to_string(), row.instances, row.agreements, row.mismatches);
                if let Some(ms) = row.max_millis {
                    line.push_str(&format!("  max {ms} ms"));
                }
                if let Err(e) = writeln!(out, "{line}").and_then(|_| out.flush()) {
                    write_error.get_or_insert(e);
                }
            },
            |m| eprintln!("{m}"),
        )?;
        if let Some(e) = write_error {
            return Err(e.into());
        }
        summary
    };
    if args.json {
        print_json(out, &summary)?;
    }
    Ok(if summary.mismatches.is_empty() { 0 } else { EXIT_FAIL })
}
