//! `icp`: colourful and induced colourful paths on the command line.
//!
//! Standard output carries only machine-readable results; diagnostics and
//! summaries go to standard error.
//!
//! Exit codes: 0 success, 1 counterexample, 2 operational error, 3 path absent.

use std::fs;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use icp_core::colouring::{chromatic_number, Colouring, DEFAULT_CHROMATIC_BUDGET, DEFAULT_PARTITION_LIMIT};
use icp_core::families;
use icp_core::graph::Graph;
use icp_core::greedy::{refined_greedy, OrderPolicy};
use icp_core::harness::{self, CheckOptions, HuntOptions, Scope, Verdict};
use icp_core::paths::{
    classify_path, colourful_path_with_chromatic, enumerate_colourful_paths, find_induced_colourful_path_with, Path,
    SearchOptions,
};

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_ERROR: u8 = 2;
const EXIT_ABSENT: u8 = 3;

#[derive(Parser)]
#[command(name = "icp", version, about = "Colourful and induced colourful paths in properly coloured graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check one graph: every proper partition, or a single given colouring
    Check(CheckArgs),
    /// Check a stream of graph6 lines from standard input or --file
    Hunt(HuntArgs),
    /// Print the refined greedy labelling of a coloured graph
    Greedy(GreedyArgs),
    /// Find a (possibly induced) colourful path
    Path(PathArgs),
    /// Emit graph6 for a graph family
    Gen(GenArgs),
}

#[derive(Args)]
struct GraphInput {
    /// Graph in graph6 format
    graph6: Option<String>,
    /// Read the graph from the first non-blank line of this file instead
    #[arg(long, conflicts_with = "graph6")]
    file: Option<PathBuf>,
}

impl GraphInput {
    fn load(&self) -> Result<Graph, String> {
        let text = match (&self.graph6, &self.file) {
            (Some(s), _) => s.clone(),
            (None, Some(path)) => {
                let content = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
                content
                    .lines()
                    .map(str::trim)
                    .find(|l| !l.is_empty())
                    .ok_or_else(|| format!("{}: no graph6 line", path.display()))?
                    .to_string()
            }
            (None, None) => return Err("a graph6 string or --file is required".into()),
        };
        Graph::parse_graph6(text.trim()).map_err(|e| format!("graph {:?}: {e}", text.trim()))
    }
}

fn load_colouring(path: &PathBuf, g: &Graph) -> Result<Colouring, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let beta: Colouring = text.parse().map_err(|e| format!("{}: {e}", path.display()))?;
    beta.ensure_proper(g).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(beta)
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    TriangleFreeOnly,
    GirthGeChiOnly,
    All,
}

impl From<ScopeArg> for Scope {
    fn from(s: ScopeArg) -> Scope {
        match s {
            ScopeArg::TriangleFreeOnly => Scope::TriangleFreeOnly,
            ScopeArg::GirthGeChiOnly => Scope::GirthGeChiOnly,
            ScopeArg::All => Scope::All,
        }
    }
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long, value_enum, default_value = "triangle-free-only")]
    scope: ScopeArg,
    /// Give up on a graph after this many proper partitions
    #[arg(long, default_value_t = DEFAULT_PARTITION_LIMIT)]
    partition_limit: u64,
    /// Node budget for the exact chromatic number search
    #[arg(long, default_value_t = DEFAULT_CHROMATIC_BUDGET)]
    chromatic_budget: u64,
}

impl BudgetArgs {
    fn options(&self) -> CheckOptions {
        CheckOptions {
            scope: self.scope.into(),
            partition_limit: self.partition_limit,
            chromatic_budget: self.chromatic_budget,
        }
    }
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Check only this colouring (whitespace-separated colours)
    #[arg(long)]
    colouring: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args)]
struct HuntArgs {
    /// Read graph6 lines from this file instead of standard input
    #[arg(long)]
    file: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Worker threads
    #[arg(long, env = "ICP_JOBS")]
    jobs: Option<usize>,
    /// Resume from and save progress to this file
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    #[arg(long)]
    halt_on_counterexample: bool,
    /// Write the aggregate report as JSON to this file
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Ascending,
    Shuffle,
}

#[derive(Args)]
struct GreedyArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long)]
    colouring: PathBuf,
    /// Order within one colour class
    #[arg(long, value_enum, default_value = "ascending")]
    order: OrderArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct PathArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long)]
    colouring: PathBuf,
    /// Number of vertices; defaults to the chromatic number
    #[arg(long)]
    target: Option<usize>,
    /// Require the path to be induced
    #[arg(long)]
    induced: bool,
    /// Only report paths whose first vertex is below their last
    #[arg(long)]
    symmetry_pruning: bool,
    #[arg(long, default_value_t = DEFAULT_CHROMATIC_BUDGET)]
    chromatic_budget: u64,
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    family: Family,
}

#[derive(Subcommand)]
enum Family {
    /// The cycle on K vertices
    Cycle { k: usize },
    /// M^d(K2): depth 1 is C5, depth 2 the Grötzsch graph
    MycielskiTower { depth: usize },
    /// Re-emit a graph6 string in canonical form
    FromGraph6 { graph6: String },
    /// petersen, grotzsch or chvatal
    Named { name: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check(args) => cmd_check(args),
        Command::Hunt(args) => cmd_hunt(args),
        Command::Greedy(args) => cmd_greedy(args),
        Command::Path(args) => cmd_path(args),
        Command::Gen(args) => cmd_gen(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn print_path(path: &Path, beta: &Colouring) {
    println!("{path}");
    let colours: Vec<String> = path.colours(beta).iter().map(u32::to_string).collect();
    println!("{}", colours.join(" "));
}

fn cmd_check(args: CheckArgs) -> Result<u8, String> {
    let g = args.input.load()?;
    if let Some(path) = &args.colouring {
        let beta = load_colouring(path, &g)?;
        let check = harness::check_colouring(&g, &beta, args.budget.chromatic_budget).map_err(|e| e.to_string())?;
        return Ok(match check.path {
            Some(p) => {
                print_path(&p, &beta);
                eprintln!("found an induced colourful path on {} vertices", check.chromatic);
                0
            }
            None => {
                eprintln!("counterexample: no induced colourful path on {} vertices", check.chromatic);
                EXIT_COUNTEREXAMPLE
            }
        });
    }
    let outcome = harness::check_graph(&g, &args.budget.options());
    println!("{}", outcome.to_json_line());
    eprintln!("{:?}, {} partitions", outcome.verdict, outcome.partitions_checked);
    Ok(match outcome.verdict {
        Verdict::Verified | Verdict::Skipped(_) => 0,
        Verdict::Counterexample => EXIT_COUNTEREXAMPLE,
        Verdict::BudgetExceeded(_) => EXIT_ERROR,
    })
}

fn cmd_hunt(args: HuntArgs) -> Result<u8, String> {
    let jobs = args
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let options = HuntOptions {
        check: args.budget.options(),
        jobs,
        halt_on_counterexample: args.halt_on_counterexample,
        checkpoint: args.checkpoint.clone(),
        ..HuntOptions::default()
    };
    let input: Box<dyn BufRead> = match &args.file {
        Some(path) => Box::new(BufReader::new(
            fs::File::open(path).map_err(|e| format!("{}: {e}", path.display()))?,
        )),
        None => Box::new(io::stdin().lock()),
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut write_err = None;
    let report = harness::hunt(input, &options, |outcome| {
        if write_err.is_none() {
            let res = writeln!(out, "{}", outcome.to_json_line()).and_then(|_| out.flush());
            if let Err(e) = res {
                write_err = Some(e);
            }
        }
        if outcome.verdict == Verdict::Counterexample {
            for record in &outcome.counterexamples {
                eprintln!("counterexample: {} partition {:?}", record.graph6, record.partition);
            }
        }
    })
    .map_err(|e| e.to_string())?;
    if let Some(e) = write_err {
        return Err(format!("writing report: {e}"));
    }
    if let Some(path) = &args.report {
        fs::write(path, report.to_json() + "\n").map_err(|e| format!("{}: {e}", path.display()))?;
    }
    eprintln!("{}", report.summary());
    Ok(if report.counterexample > 0 {
        EXIT_COUNTEREXAMPLE
    } else if report.budget_exceeded > 0 {
        EXIT_ERROR
    } else {
        0
    })
}

fn cmd_greedy(args: GreedyArgs) -> Result<u8, String> {
    let g = args.input.load()?;
    let beta = load_colouring(&args.colouring, &g)?;
    let policy = match args.order {
        OrderArg::Ascending => OrderPolicy::AscendingIndex,
        OrderArg::Shuffle => OrderPolicy::SeededShuffle(args.seed),
    };
    let labelling = refined_greedy(&g, &beta, policy).map_err(|e| e.to_string())?;
    println!("{labelling}");
    let order: Vec<String> = labelling.order().iter().map(usize::to_string).collect();
    println!("# order: {}", order.join(" "));
    Ok(0)
}

fn cmd_path(args: PathArgs) -> Result<u8, String> {
    let g = args.input.load()?;
    let beta = load_colouring(&args.colouring, &g)?;
    let chromatic = chromatic_number(&g, args.chromatic_budget).map_err(|e| e.to_string())?.k;
    let target = args.target.unwrap_or(chromatic);
    if target == 0 {
        return Err("--target must be at least 1".into());
    }
    let options = SearchOptions { symmetry_pruning: args.symmetry_pruning };

    // the constructive path comes first when it fits the request
    let mut found = None;
    if target == chromatic {
        let constructed = colourful_path_with_chromatic(&g, &beta, OrderPolicy::AscendingIndex, chromatic)
            .map_err(|e| e.to_string())?
            .path;
        let class = classify_path(&g, &beta, constructed.vertices()).map_err(|e| e.to_string())?;
        if !args.induced || class.induced {
            found = Some(constructed);
        }
    }
    if found.is_none() {
        found = if args.induced {
            find_induced_colourful_path_with(&g, &beta, target, options).map_err(|e| e.to_string())?
        } else {
            enumerate_colourful_paths(&g, &beta, target, 1)
                .map_err(|e| e.to_string())?
                .into_iter()
                .next()
        };
    }
    Ok(match found {
        Some(p) => {
            print_path(&p, &beta);
            0
        }
        None => {
            eprintln!(
                "no {}colourful path on {target} vertices",
                if args.induced { "induced " } else { "" }
            );
            EXIT_ABSENT
        }
    })
}

fn cmd_gen(args: GenArgs) -> Result<u8, String> {
    let g = match args.family {
        Family::Cycle { k } => families::cycle(k).map_err(|e| e.to_string())?,
        Family::MycielskiTower { depth } => families::mycielski_tower(depth).map_err(|e| e.to_string())?,
        Family::FromGraph6 { graph6 } => {
            Graph::parse_graph6(&graph6).map_err(|e| format!("graph {graph6:?}: {e}"))?
        }
        Family::Named { name } => families::named(&name).ok_or_else(|| format!("unknown graph name {name:?}"))?,
    };
    println!("{}", g.to_graph6());
    Ok(0)
}
