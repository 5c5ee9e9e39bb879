//! Exhaustive verification that every proper colouring of a graph has an
//! induced colourful path on `χ(G)` vertices, for single graphs and for
//! streams of graph6 records.
//!
//! Colourings are enumerated up to renaming of colours (as partitions into
//! independent classes); whether a path is colourful depends only on the
//! classes, so nothing is lost.

use std::fmt;
use std::fs;
use std::io::{BufRead, Write};
use std::path::{Path as FsPath, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::colouring::{
    chromatic_number, enumerate_proper_partitions, Colouring, DEFAULT_CHROMATIC_BUDGET, DEFAULT_PARTITION_LIMIT,
};
use crate::error::{Error, Result};
use crate::exec::Executor;
use crate::graph::Graph;
use crate::paths::{find_induced_colourful_path, Path};

/// Which graphs a check applies to.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    /// Triangle-free graphs: the conjecture's setting.
    #[default]
    TriangleFreeOnly,
    /// Graphs whose girth is at least the chromatic number (forests included).
    GirthGeChiOnly,
    All,
}

impl FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "triangle-free-only" => Ok(Scope::TriangleFreeOnly),
            "girth-ge-chi-only" => Ok(Scope::GirthGeChiOnly),
            "all" => Ok(Scope::All),
            other => Err(Error::PreconditionViolated(format!("unknown scope {other:?}"))),
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scope::TriangleFreeOnly => "triangle-free-only",
            Scope::GirthGeChiOnly => "girth-ge-chi-only",
            Scope::All => "all",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOptions {
    pub scope: Scope,
    pub partition_limit: u64,
    pub chromatic_budget: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            scope: Scope::default(),
            partition_limit: DEFAULT_PARTITION_LIMIT,
            chromatic_budget: DEFAULT_CHROMATIC_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "reason", rename_all = "snake_case")]
pub enum Verdict {
    Verified,
    Counterexample,
    Skipped(String),
    BudgetExceeded(String),
}

/// A proper partition under which no induced colourful path on `chromatic`
/// vertices exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleRecord {
    pub graph6: String,
    pub partition: Vec<Vec<usize>>,
    pub chromatic: usize,
    pub note: String,
}

impl CounterexampleRecord {
    /// Re-runs the search on the recorded partition; true if the path is still absent.
    pub fn reproduces(&self) -> Result<bool> {
        let g = Graph::parse_graph6(&self.graph6)?;
        let mut colours = vec![0u32; g.n()];
        for (i, class) in self.partition.iter().enumerate() {
            for &v in class {
                g.check_vertex(v)?;
                colours[v] = i as u32 + 1;
            }
        }
        let beta = Colouring::new(colours)?;
        Ok(find_induced_colourful_path(&g, &beta, self.chromatic)?.is_none())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub graph6: String,
    pub n: usize,
    pub edge_count: usize,
    pub chromatic: Option<usize>,
    pub girth: Option<usize>,
    pub triangle_free: bool,
    pub partitions_checked: u64,
    #[serde(flatten)]
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub counterexamples: Vec<CounterexampleRecord>,
}

impl CheckOutcome {
    fn malformed(line: &str, err: &Error) -> Self {
        CheckOutcome {
            graph6: line.to_string(),
            n: 0,
            edge_count: 0,
            chromatic: None,
            girth: None,
            triangle_free: false,
            partitions_checked: 0,
            verdict: Verdict::Skipped(format!("malformed: {err}")),
            counterexamples: Vec::new(),
        }
    }

    /// Line-delimited JSON record.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("outcome serialises")
    }
}

/// Sweeps every proper partition of `g` and searches each for an induced
/// colourful path on `χ(G)` vertices.
pub fn check_graph(g: &Graph, options: &CheckOptions) -> CheckOutcome {
    let triangle_free = g.is_triangle_free();
    let girth = g.girth();
    let mut outcome = CheckOutcome {
        graph6: g.to_graph6(),
        n: g.n(),
        edge_count: g.edge_count(),
        chromatic: None,
        girth,
        triangle_free,
        partitions_checked: 0,
        verdict: Verdict::Verified,
        counterexamples: Vec::new(),
    };
    if g.n() == 0 {
        outcome.verdict = Verdict::Skipped("empty graph".into());
        return outcome;
    }
    if options.scope == Scope::TriangleFreeOnly && !triangle_free {
        outcome.verdict = Verdict::Skipped("not triangle-free".into());
        return outcome;
    }
    let chromatic = match chromatic_number(g, options.chromatic_budget) {
        Ok(c) => c.k,
        Err(e) => {
            outcome.verdict = Verdict::BudgetExceeded(format!("chromatic number: {e}"));
            return outcome;
        }
    };
    outcome.chromatic = Some(chromatic);
    if options.scope == Scope::GirthGeChiOnly && girth.is_some_and(|gi| gi < chromatic) {
        outcome.verdict = Verdict::Skipped("girth below chromatic number".into());
        return outcome;
    }

    let partitions = enumerate_proper_partitions(g, options.partition_limit).expect("n >= 1");
    if chromatic <= 2 {
        // a single vertex, or the ends of any edge, is an induced colourful
        // path under every proper colouring; only count the partitions
        for p in partitions {
            if p.is_err() {
                break;
            }
            outcome.partitions_checked += 1;
        }
        return outcome;
    }

    for p in partitions {
        let p = match p {
            Ok(p) => p,
            Err(e) => {
                if outcome.counterexamples.is_empty() {
                    outcome.verdict = Verdict::BudgetExceeded(format!("partitions: {e}"));
                }
                return outcome;
            }
        };
        outcome.partitions_checked += 1;
        let beta = p.to_colouring();
        let found = find_induced_colourful_path(g, &beta, chromatic).expect("partition colourings are proper");
        if found.is_none() {
            outcome.verdict = Verdict::Counterexample;
            outcome.counterexamples.push(CounterexampleRecord {
                graph6: outcome.graph6.clone(),
                partition: p.classes().to_vec(),
                chromatic,
                note: format!("no induced colourful path on {chromatic} vertices"),
            });
        }
    }
    outcome
}

/// Result of checking one given colouring.
#[derive(Clone, Debug)]
pub struct ColouringCheck {
    pub chromatic: usize,
    pub path: Option<Path>,
}

/// Searches one proper colouring for an induced colourful path on `χ(G)` vertices.
pub fn check_colouring(g: &Graph, beta: &Colouring, chromatic_budget: u64) -> Result<ColouringCheck> {
    beta.ensure_proper(g)?;
    let chromatic = chromatic_number(g, chromatic_budget)?.k;
    let path = find_induced_colourful_path(g, beta, chromatic)?;
    Ok(ColouringCheck { chromatic, path })
}

/// Aggregate over a stream of checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuntReport {
    pub graphs: u64,
    pub verified: u64,
    pub counterexample: u64,
    pub skipped: u64,
    pub budget_exceeded: u64,
    pub partitions_checked: u64,
    pub halted: bool,
    pub counterexamples: Vec<CounterexampleRecord>,
}

impl HuntReport {
    fn record(&mut self, outcome: &CheckOutcome) {
        self.graphs += 1;
        self.partitions_checked += outcome.partitions_checked;
        match outcome.verdict {
            Verdict::Verified => self.verified += 1,
            Verdict::Counterexample => self.counterexample += 1,
            Verdict::Skipped(_) => self.skipped += 1,
            Verdict::BudgetExceeded(_) => self.budget_exceeded += 1,
        }
        self.counterexamples.extend(outcome.counterexamples.iter().cloned());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialises")
    }

    /// One-paragraph human summary.
    pub fn summary(&self) -> String {
        format!(
            "graphs: {}  verified: {}  counterexample: {}  skipped: {}  budget_exceeded: {}  partitions: {}{}",
            self.graphs,
            self.verified,
            self.counterexample,
            self.skipped,
            self.budget_exceeded,
            self.partitions_checked,
            if self.halted { "  (halted on counterexample)" } else { "" }
        )
    }
}

/// Graphs processed between checkpoint writes. Fixed, so the batch
/// boundaries never depend on the number of workers.
pub const DEFAULT_BATCH_SIZE: usize = 256;

#[derive(Clone, Debug)]
pub struct HuntOptions {
    pub check: CheckOptions,
    pub jobs: usize,
    pub halt_on_counterexample: bool,
    pub checkpoint: Option<PathBuf>,
    pub batch_size: usize,
    /// Stop after this many graphs in total (checkpointed ones included).
    pub max_graphs: Option<u64>,
}

impl Default for HuntOptions {
    fn default() -> Self {
        HuntOptions {
            check: CheckOptions::default(),
            jobs: 1,
            halt_on_counterexample: false,
            checkpoint: None,
            batch_size: DEFAULT_BATCH_SIZE,
            max_graphs: None,
        }
    }
}

/// Checks every graph6 line of `input`. Blank lines are ignored; malformed
/// lines become skipped outcomes. `on_outcome` sees each outcome in input
/// order as soon as its batch finishes. With a checkpoint path, a previous
/// run's progress is resumed and progress is saved after every batch.
pub fn hunt<R, F>(input: R, options: &HuntOptions, mut on_outcome: F) -> Result<HuntReport>
where
    R: BufRead,
    F: FnMut(&CheckOutcome),
{
    let mut state = match &options.checkpoint {
        Some(path) if path.exists() => HuntCheckpoint::load(path)?,
        _ => HuntCheckpoint::default(),
    };
    if state.report.halted {
        return Ok(state.report);
    }
    let executor = Executor::new(options.jobs);
    let batch_size = options.batch_size.max(1);
    let mut lines = input.lines();
    let mut skip = state.position;
    let mut batch: Vec<String> = Vec::with_capacity(batch_size);
    loop {
        batch.clear();
        let budget_left = options.max_graphs.map(|m| m.saturating_sub(state.position));
        while batch.len() < batch_size && budget_left.is_none_or(|left| (batch.len() as u64) < left) {
            let Some(line) = lines.next() else { break };
            let line = line?;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if skip > 0 {
                skip -= 1;
                continue;
            }
            batch.push(line.to_string());
        }
        if batch.is_empty() {
            break;
        }
        let outcomes = executor.map(&batch, |line| match Graph::parse_graph6(line) {
            Ok(g) => check_graph(&g, &options.check),
            Err(e) => CheckOutcome::malformed(line, &e),
        });
        for outcome in &outcomes {
            on_outcome(outcome);
            state.report.record(outcome);
            state.position += 1;
            if options.halt_on_counterexample && outcome.verdict == Verdict::Counterexample {
                state.report.halted = true;
                break;
            }
        }
        if let Some(path) = &options.checkpoint {
            state.save(path)?;
        }
        if state.report.halted || batch.len() < batch_size {
            break;
        }
    }
    if let Some(path) = &options.checkpoint {
        state.save(path)?;
    }
    Ok(state.report)
}

const CHECKPOINT_MAGIC: &str = "icp-checkpoint";
const CHECKPOINT_VERSION: u32 = 1;

/// Progress of a hunt: how many non-blank input lines have been consumed and
/// the aggregate so far.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuntCheckpoint {
    pub position: u64,
    pub report: HuntReport,
}

impl HuntCheckpoint {
    /// Two lines: `icp-checkpoint <version> <sha256 of body>` then the JSON body.
    pub fn encode(&self) -> String {
        let body = serde_json::to_string(self).expect("checkpoint serialises");
        let digest = hex::encode(Sha256::digest(body.as_bytes()));
        format!("{CHECKPOINT_MAGIC} {CHECKPOINT_VERSION} {digest}\n{body}\n")
    }

    pub fn decode(text: &str) -> Result<Self> {
        let corrupt = |why: &str| Error::CorruptCheckpoint(why.to_string());
        let (header, rest) = text.split_once('\n').ok_or_else(|| corrupt("missing header line"))?;
        let mut fields = header.split(' ');
        if fields.next() != Some(CHECKPOINT_MAGIC) {
            return Err(corrupt("bad magic"));
        }
        match fields.next().and_then(|v| v.parse::<u32>().ok()) {
            Some(CHECKPOINT_VERSION) => {}
            Some(v) => return Err(Error::CorruptCheckpoint(format!("unsupported version {v}"))),
            None => return Err(corrupt("missing version")),
        }
        let digest = fields.next().ok_or_else(|| corrupt("missing digest"))?;
        let body = rest.strip_suffix('\n').ok_or_else(|| corrupt("truncated body"))?;
        if hex::encode(Sha256::digest(body.as_bytes())) != digest {
            return Err(corrupt("digest mismatch"));
        }
        serde_json::from_str(body).map_err(|e| Error::CorruptCheckpoint(e.to_string()))
    }

    /// Writes to a sibling temporary file, then renames over `path`.
    pub fn save(&self, path: &FsPath) -> Result<()> {
        let tmp = path.with_extension("tmp");
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(self.encode().as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn load(path: &FsPath) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        HuntCheckpoint::decode(&text)
    }
}
