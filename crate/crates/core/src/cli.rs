//! Command-line front end. `run` returns the process exit code:
//! 0 success, 1 figure or claim mismatch, 2 bad input, 3 I/O failure.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::figures::{diff_lines, edge_list, FIGURES};
use crate::graph::{
    build_gamma_dblprime, build_gamma_i, build_gamma_prime_quotient, build_q_gamma_dblprime,
    build_q_gamma_i, integer_adjacent, integer_vertex, to_dot, to_json, Family, Label,
    LabeledGraph, ZClassModel, ZModelKind,
};
use crate::harness::{
    default_universe, default_z_values, full_report, parse_claim_list, Expectation, RunOptions,
};
use crate::ideal::{enumerate_proper_ideals, Ideal, IdealFilter};
use crate::invariants::{
    bipartite_structure, chromatic_number, class_total_domination, diameter, girth,
    invariant_report, is_total_dominating, Budgets, Computed,
};
use crate::par::Parallelism;
use crate::quotient::QuotientRing;
use crate::ring::Ring;

#[derive(Parser, Debug)]
#[command(name = "cozero", version, about = "Cozero-divisor graphs of finite rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build one graph and write it as DOT or JSON.
    Build(GraphArgs),
    /// Compute every invariant of one graph.
    Invariants {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
    /// Run the claim harness over a universe of rings and ideals.
    Check(CheckArgs),
    /// Describe the residue-class model of the integer graph for `n`.
    Zmodel {
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
    /// Regenerate the reference figures and compare with the golden edge lists.
    Figures {
        /// Directory to write figure_X.dot and figure_X.json into.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Compare against files in this directory instead of the built-in lists.
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// List the proper ideals of the universe.
    Enumerate {
        #[arg(long, default_value_t = 24)]
        max_card: u64,
        #[arg(long, default_value = "all")]
        filter: String,
        /// Only this ring.
        #[arg(long)]
        ring: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Json,
}

#[derive(Args, Debug)]
pub struct GraphArgs {
    #[arg(long)]
    pub ring: Option<String>,
    /// Ideal as generator, e.g. `(12)` or `(2,0)`; `0` is the zero ideal.
    #[arg(long, default_value = "0")]
    pub ideal: String,
    #[arg(long, default_value = "gammaDblPrime")]
    pub family: String,
    /// Modulus for the `zModel` family.
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Dot)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Default)]
pub struct BudgetArgs {
    /// Largest graph the Hamiltonian search runs on.
    #[arg(long)]
    pub budget_ham: Option<usize>,
    /// Largest graph the exact chromatic number runs on.
    #[arg(long)]
    pub budget_chi: Option<usize>,
}

impl BudgetArgs {
    fn budgets(&self) -> Budgets {
        let mut b = Budgets::default();
        if let Some(h) = self.budget_ham {
            b.hamiltonian = h;
        }
        if let Some(c) = self.budget_chi {
            b.chromatic = c;
        }
        b
    }
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[arg(long, default_value_t = 24)]
    pub max_card: u64,
    /// Comma-separated claim ids, or `all`.
    #[arg(long, default_value = "all")]
    pub claims: String,
    /// Largest `n` for the integer-model claims; defaults to `--max-card`.
    #[arg(long)]
    pub z_max: Option<u64>,
    /// Explicit comma-separated `n` values for the integer-model claims
    /// (may include 0); overrides `--z-max`.
    #[arg(long, value_delimiter = ',')]
    pub z_values: Option<Vec<u64>>,
    /// Worker threads; 1 runs sequentially.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Write the full JSON report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Record wall time per verdict and in the summary.
    #[arg(long)]
    pub timing: bool,
    #[command(flatten)]
    pub budgets: BudgetArgs,
}

/// Failure of a command, mapped to an exit code.
enum Failure {
    Input(String),
    Io(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(e) => Failure::Io(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

type CmdResult = std::result::Result<(), Failure>;

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Build(g) => cmd_build(&g),
        Command::Invariants { graph, budgets } => cmd_invariants(&graph, &budgets),
        Command::Check(c) => cmd_check(&c),
        Command::Zmodel { n, budgets } => cmd_zmodel(n, &budgets),
        Command::Figures { out, golden } => cmd_figures(out.as_deref(), golden.as_deref()),
        Command::Enumerate {
            max_card,
            filter,
            ring,
        } => cmd_enumerate(max_card, &filter, ring.as_deref()),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Mismatch) => 1,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            3
        }
    }
}

fn write_out(path: &Path, content: &str) -> CmdResult {
    fs::write(path, content).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, content: &str) -> CmdResult {
    match out {
        Some(p) => write_out(p, content),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .map_err(|e| Failure::Io(e.to_string()))
        }
    }
}

fn build_graph(args: &GraphArgs) -> Result<LabeledGraph> {
    let family: Family = args.family.parse()?;
    if family == Family::ZModel {
        let n = args
            .n
            .ok_or_else(|| Error::Parse("family zModel needs --n".into()))?;
        return Ok(ZClassModel::new(n).graph());
    }
    let ring: Ring = args
        .ring
        .as_deref()
        .ok_or_else(|| Error::Parse("--ring is required".into()))?
        .parse()?;
    let ideal = Ideal::parse(&ring, &args.ideal)?;
    match family {
        Family::Gamma | Family::GammaI => build_gamma_i(&ring, &ideal),
        Family::GammaPrime => Ok(build_gamma_prime_quotient(&QuotientRing::new(&ring, &ideal)?)),
        Family::GammaDblPrime => build_gamma_dblprime(&ring, &ideal),
        Family::QGamma => build_q_gamma_i(&ring, &ideal),
        Family::QGammaDblPrime => build_q_gamma_dblprime(&ring, &ideal),
        Family::ZModel | Family::Custom => Err(Error::Parse(format!("cannot build family {family}"))),
    }
}

fn render(g: &LabeledGraph, format: Format) -> String {
    match format {
        Format::Dot => to_dot(g),
        Format::Json => {
            let mut s = serde_json::to_string(&to_json(g)).expect("graph serialises");
            s.push('\n');
            s
        }
    }
}

fn cmd_build(args: &GraphArgs) -> CmdResult {
    let g = build_graph(args)?;
    emit(args.out.as_deref(), &render(&g, args.format))?;
    let counts = format!("{} vertices, {} edges", g.order(), g.size());
    if args.out.is_some() {
        println!("{counts}");
    } else {
        eprintln!("{counts}");
    }
    Ok(())
}

fn cmd_invariants(args: &GraphArgs, budgets: &BudgetArgs) -> CmdResult {
    let g = build_graph(args)?;
    let report = invariant_report(&g, &budgets.budgets());
    let mut s = serde_json::to_string_pretty(&report).expect("report serialises");
    s.push('\n');
    emit(args.out.as_deref(), &s)
}

fn cmd_check(args: &CheckArgs) -> CmdResult {
    let claims = parse_claim_list(&args.claims)?;
    let universe = default_universe(args.max_card);
    let z_values = match &args.z_values {
        Some(v) => v.clone(),
        None => default_z_values(args.z_max.unwrap_or(args.max_card)),
    };
    let opts = RunOptions {
        budgets: args.budgets.budgets(),
        parallelism: Parallelism::from_jobs(args.jobs),
        timing: args.timing,
    };
    let report = full_report(&universe, &claims, &z_values, &opts);
    if let Some(p) = &args.out {
        let mut s = report.to_json();
        s.push('\n');
        write_out(p, &s)?;
    }
    println!(
        "{} instances, {} verdicts",
        universe.len(),
        report.verdicts.len()
    );
    for (id, c) in &report.summary.claims {
        let exp = match id.parse::<crate::harness::ClaimId>().map(|c| c.expectation()) {
            Ok(Expectation::ReportOnly) => "report-only",
            _ => "expected-to-hold",
        };
        println!(
            "{id:<20} holds {:>5}  fails {:>5}  not-met {:>5}  skipped {:>4}  {exp}",
            c.holds, c.fails, c.hypothesis_not_met, c.skipped
        );
    }
    for note in &report.summary.notes {
        println!("note: {note}");
    }
    if let Some(ms) = report.summary.total_millis {
        println!("total time: {ms} ms");
    }
    if report.passed() {
        println!("result: no expected-to-hold claim failed");
        Ok(())
    } else {
        println!(
            "result: {} expected-to-hold failures in {}",
            report.summary.expected_to_hold_failures,
            report.summary.failing_claims.join(", ")
        );
        Err(Failure::Mismatch)
    }
}

fn set_text(xs: &[u64]) -> String {
    let inner: Vec<String> = xs.iter().map(u64::to_string).collect();
    format!("{{{}}}", inner.join(", "))
}

fn cmd_zmodel(n: u64, budgets: &BudgetArgs) -> CmdResult {
    let budgets = budgets.budgets();
    let m = ZClassModel::new(n);
    println!("n: {n}");
    match m.kind() {
        ZModelKind::Unit => return Err(Failure::Input("n = 1: nZ is the whole ring".into())),
        ZModelKind::ZeroIdeal => {
            println!("model: no finite class structure");
            let pair = (1..=64u64)
                .flat_map(|x| (x + 1..=64).map(move |y| (x, y)))
                .find(|&(x, y)| integer_vertex(0, x) && integer_vertex(0, y) && integer_adjacent(0, x, y));
            if let Some((x, y)) = pair {
                println!("nonempty: {x} and {y} are adjacent vertices");
            }
            return Ok(());
        }
        ZModelKind::PrimePower => {
            println!("classes: 0");
            println!("empty");
            return Ok(());
        }
        ZModelKind::Composite => {}
    }
    let g = m.graph();
    println!("prime divisors: {}", m.prime_count());
    println!("classes: {}", m.classes().len());
    let types: Vec<String> = m.types().iter().map(|(t, k)| format!("{t}x{k}")).collect();
    println!("types: {}", types.join(" "));
    match class_total_domination(&m, &budgets) {
        Computed::Value(Some((gamma, set))) => {
            println!("gamma: {gamma}");
            println!("minimum dominating classes: {}", set_text(&set));
        }
        Computed::Value(None) => println!("gamma: none"),
        Computed::Skipped => println!("gamma: skipped"),
    }
    let w = m.dominator_witness();
    let idx: Vec<usize> = w.iter().filter_map(|&c| g.index_of(&Label::Residue(c))).collect();
    println!(
        "n/p^a classes: {} ({})",
        set_text(&w),
        if is_total_dominating(&g, &idx) { "dominating" } else { "not dominating" }
    );
    let b = bipartite_structure(&g);
    println!(
        "bipartite: {}{}",
        if b.bipartite { "yes" } else { "no" },
        if b.complete { " (complete)" } else { "" }
    );
    match chromatic_number(&m.type_graph(), &budgets) {
        Computed::Value(chi) => println!(
            "chromatic: {chi} ({}{}-partite)",
            if chi <= m.prime_count() { "" } else { "not " },
            m.prime_count()
        ),
        Computed::Skipped => println!("chromatic: skipped"),
    }
    let twins = m.twin_expansion(2);
    println!("diameter: {}", diameter(&twins));
    println!("girth: {}", girth(&twins));
    Ok(())
}

fn cmd_figures(out: Option<&Path>, golden_dir: Option<&Path>) -> CmdResult {
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(|e| Failure::Io(format!("{}: {e}", dir.display())))?;
    }
    let mut ok = true;
    for f in FIGURES {
        let g = f.build();
        if let Some(dir) = out {
            write_out(&dir.join(format!("figure_{}.dot", f.id)), &render(&g, Format::Dot))?;
            write_out(&dir.join(format!("figure_{}.json", f.id)), &render(&g, Format::Json))?;
        }
        let golden = match golden_dir {
            Some(dir) => {
                let p = dir.join(format!("figure_{}", f.id));
                fs::read_to_string(&p).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?
            }
            None => f.golden.to_string(),
        };
        let (extra, missing) = diff_lines(&edge_list(&g), &golden);
        if extra.is_empty() && missing.is_empty() {
            println!(
                "figure {}: ok ({} vertices, {} edges)",
                f.id.to_ascii_uppercase(),
                g.order(),
                g.size()
            );
        } else {
            ok = false;
            println!("figure {}: mismatch", f.id.to_ascii_uppercase());
            for l in extra {
                println!("  + {l}");
            }
            for l in missing {
                println!("  - {l}");
            }
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn cmd_enumerate(max_card: u64, filter: &str, ring: Option<&str>) -> CmdResult {
    let filter: IdealFilter = filter.parse()?;
    let rings: Vec<Ring> = match ring {
        Some(s) => vec![s.parse()?],
        None => crate::harness::universe_rings(max_card),
    };
    let mut count = 0;
    let mut out = String::new();
    for r in &rings {
        for i in enumerate_proper_ideals(r, filter) {
            count += 1;
            let tag = if i.radical().is_maximal() { "\tradical-maximal" } else { "" };
            out.push_str(&format!("{}\t{}{tag}\n", r.spec(), i.spec()));
        }
    }
    emit(None, &out)?;
    eprintln!("{count} ideals");
    Ok(())
}
