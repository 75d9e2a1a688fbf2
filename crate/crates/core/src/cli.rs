//! Command-line front end.
//!
//! Machine-readable results go to standard output as JSON, diagnostics to
//! standard error. Exit codes: 0 success, 2 input error, 3 verification or
//! certification failure, 4 search budget exhausted.

use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::exact::{exact_radio_number, SolveStatus, SolverConfig};
use crate::families::{build_family, BuildOptions, Family, FamilySpec};
use crate::graph::{all_pairs_distances, edgelist, DuplicatePolicy, Graph, VertexId};
use crate::labeling::{is_radio_labeling, LabelingFile, Ordering};
use crate::layers::{
    best_lower_bound, distance_decomposition_check, enumerate_candidate_centers, lower_bound,
    BoundReport, CenterSet, DEFAULT_MAX_CENTER_SIZE,
};
use crate::reductions::{check_observation, edge_deletion_sequence, mdst, RootedSpanningSubgraph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_FAILED: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "radiolab", version, about = "Radio labelings of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, value_parser = clap::value_parser!(Family))]
    pub family: Family,
    #[arg(short = 'm')]
    pub m: usize,
    #[arg(short = 'n')]
    pub n: usize,
    /// Allow parameters below the range where the closed form is proven.
    #[arg(long)]
    pub experimental: bool,
}

impl clap::ValueEnum for Family {
    fn value_variants<'a>() -> &'a [Self] {
        &Family::ALL
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(self.as_str()))
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the edge list of a family member.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build and certify the explicit optimal labeling of a family member.
    Label {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that a labeling file is a radio labeling of a graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        labeling: PathBuf,
    },
    /// Layer lower bound for an explicit center, or the best over candidate centers.
    Bound {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, conflicts_with = "auto")]
        center: Option<String>,
        #[arg(long)]
        auto: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_CENTER_SIZE)]
        max_center_size: usize,
    },
    /// Exact radio number by branch and bound.
    Exact {
        #[arg(long)]
        graph: PathBuf,
        /// Wall-clock budget in seconds.
        #[arg(long)]
        budget: Option<f64>,
        #[arg(long, default_value_t = crate::exact::DEFAULT_MAX_VERTICES)]
        max_vertices: usize,
    },
    /// Minimum distance spanning tree rooted at a center, with property report.
    Mdst {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        center: String,
    },
    /// Delete edges down to a rooted spanning tree, recertifying at each step.
    Reduce {
        #[arg(long, value_parser = clap::value_parser!(Family), requires_all = ["m", "n"])]
        family: Option<Family>,
        #[arg(short = 'm')]
        m: Option<usize>,
        #[arg(short = 'n')]
        n: Option<usize>,
        #[arg(long, conflicts_with = "family", requires_all = ["center", "labeling"])]
        graph: Option<PathBuf>,
        #[arg(long)]
        center: Option<String>,
        /// Labeling whose `ordering` (or label order) is recertified.
        #[arg(long)]
        labeling: Option<PathBuf>,
        /// Edge list of the target spanning subgraph; defaults to the rooted MDST.
        #[arg(long)]
        target: Option<PathBuf>,
    },
    /// Certify every family member over a parameter grid.
    Grid {
        family: Family,
        /// Inclusive range `a..b`.
        m_range: String,
        /// Inclusive range `a..b`.
        n_range: String,
        #[arg(long)]
        experimental: bool,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self { code: EXIT_INPUT, message: message.into() }
    }

    fn failed(message: impl Into<String>) -> Self {
        Self { code: EXIT_FAILED, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CertificationFailed(_) => EXIT_FAILED,
            _ => EXIT_INPUT,
        };
        Self { code, message: e.to_string() }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Gen { family, out: path } => cmd_gen(&family, path.as_deref(), out),
        Command::Label { family, out: path } => cmd_label(&family, path.as_deref(), out, err),
        Command::Verify { graph, labeling } => cmd_verify(&graph, &labeling, out),
        Command::Bound { graph, center, auto, max_center_size } => {
            cmd_bound(&graph, center.as_deref(), auto, max_center_size, out)
        }
        Command::Exact { graph, budget, max_vertices } => cmd_exact(&graph, budget, max_vertices, out, err),
        Command::Mdst { graph, center } => cmd_mdst(&graph, &center, out),
        Command::Reduce { family, m, n, graph, center, labeling, target } => {
            cmd_reduce(family, m, n, graph, center, labeling, target, out, err)
        }
        Command::Grid { family, m_range, n_range, experimental } => {
            cmd_grid(family, &m_range, &n_range, experimental, out, err)
        }
    }
}

fn emit(out: &mut dyn Write, value: &impl Serialize) -> std::result::Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::input(e.to_string()))?;
    writeln!(out, "{text}").map_err(|e| Failure::input(e.to_string()))
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> std::result::Result<Graph, Failure> {
    edgelist::parse(&read(path)?, DuplicatePolicy::Merge)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load_labeling(path: &Path) -> std::result::Result<LabelingFile, Failure> {
    serde_json::from_str(&read(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn parse_center(spec: &str) -> std::result::Result<Vec<VertexId>, Failure> {
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| Failure::input(format!("bad center vertex {s:?}"))))
        .collect()
}

fn parse_range(spec: &str) -> std::result::Result<RangeInclusive<usize>, Failure> {
    let bad = || Failure::input(format!("expected range a..b, got {spec:?}"));
    let (a, b) = spec.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let (a, b): (usize, usize) = (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
    if a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

fn family_spec(args: &FamilyArgs) -> std::result::Result<FamilySpec, Failure> {
    let spec = FamilySpec::new(args.family, args.m, args.n);
    if !args.experimental && !spec.within_hypothesis() {
        let (min_m, min_n) = spec.family.hypothesis();
        let which = if spec.m < min_m {
            format!("m below theorem hypothesis (m >= {min_m} required)")
        } else {
            format!("n below theorem hypothesis (n >= {min_n} required)")
        };
        return Err(Failure::input(which));
    }
    Ok(spec)
}

fn write_or_print(path: Option<&Path>, text: &str, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::input(format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| Failure::input(e.to_string())),
    }
}

fn cmd_gen(args: &FamilyArgs, path: Option<&Path>, out: &mut dyn Write) -> CmdResult {
    let spec = family_spec(args)?;
    let graph = spec.graph()?;
    write_or_print(path, &edgelist::write(&graph), out)?;
    Ok(EXIT_OK)
}

fn cmd_label(args: &FamilyArgs, path: Option<&Path>, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let spec = family_spec(args)?;
    let result = build_family(spec, BuildOptions { allow_outside_hypothesis: args.experimental })?;
    let output = result.to_output();
    let text = serde_json::to_string_pretty(&output).map_err(|e| Failure::input(e.to_string()))? + "\n";
    write_or_print(path, &text, out)?;
    if !result.within_hypothesis {
        let _ = writeln!(err, "note: parameters outside theorem hypothesis");
    }
    Ok(if result.certified() { EXIT_OK } else { EXIT_FAILED })
}

fn cmd_verify(graph: &Path, labeling: &Path, out: &mut dyn Write) -> CmdResult {
    let graph = load_graph(graph)?;
    let file = load_labeling(labeling)?;
    let labeling = file.labeling(graph.order())?;
    let dist = all_pairs_distances(&graph);
    let report = is_radio_labeling(&dist, &labeling)?;
    emit(out, &report)?;
    Ok(if report.valid { EXIT_OK } else { EXIT_FAILED })
}

#[derive(Serialize)]
struct BoundOutput {
    #[serde(flatten)]
    report: BoundReport,
    connected_induced: bool,
    equality_pairs: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    candidates: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_center_size: Option<usize>,
}

fn cmd_bound(
    path: &Path,
    center: Option<&str>,
    auto: bool,
    max_size: usize,
    out: &mut dyn Write,
) -> CmdResult {
    let graph = load_graph(path)?;
    let dist = all_pairs_distances(&graph);
    let (report, candidates, max_center_size) = match (center, auto) {
        (Some(c), false) => {
            let set = CenterSet::new(&graph, &dist, &parse_center(c)?)?;
            (lower_bound(&dist, &set), None, None)
        }
        (None, true) => {
            let size = max_size.min(graph.order());
            let count = enumerate_candidate_centers(&graph, &dist, size)?.len();
            (best_lower_bound(&graph, &dist, size)?, Some(count), Some(size))
        }
        _ => return Err(Failure::input("give exactly one of --center or --auto")),
    };
    let set = CenterSet::new(&graph, &dist, &report.center)?;
    let output = BoundOutput {
        connected_induced: set.connected_induced(),
        equality_pairs: distance_decomposition_check(&dist, &set).equality_pairs.len(),
        report,
        candidates,
        max_center_size,
    };
    emit(out, &output)?;
    Ok(EXIT_OK)
}

fn cmd_exact(
    path: &Path,
    budget: Option<f64>,
    max_vertices: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let graph = load_graph(path)?;
    let dist = all_pairs_distances(&graph);
    let time_budget = match budget {
        Some(b) if b.is_finite() && b > 0.0 => Some(Duration::from_secs_f64(b)),
        Some(b) => return Err(Failure::input(format!("bad budget {b}"))),
        None => None,
    };
    let config = SolverConfig { max_vertices, time_budget, ..Default::default() };
    let result = exact_radio_number(&graph, &dist, &config)?;
    emit(out, &result.to_output())?;
    match result.status {
        SolveStatus::ProvedOptimal => Ok(EXIT_OK),
        SolveStatus::BudgetExhausted { lower, upper } => {
            let _ = writeln!(err, "budget exhausted: rn in [{lower}, {upper}]");
            Ok(EXIT_BUDGET)
        }
    }
}

#[derive(Serialize)]
struct MdstOutput<'a> {
    #[serde(flatten)]
    tree: &'a RootedSpanningSubgraph,
    observation: crate::reductions::ObservationReport,
}

fn cmd_mdst(path: &Path, center: &str, out: &mut dyn Write) -> CmdResult {
    let graph = load_graph(path)?;
    let dist = all_pairs_distances(&graph);
    let set = CenterSet::new(&graph, &dist, &parse_center(center)?)?;
    let tree = mdst(&graph, &dist, &set)?;
    let observation = check_observation(&graph, &dist, &tree.graph(&graph)?, set.vertices())?;
    let ok = observation.levels_preserved && observation.total_preserved && observation.distances_dominate;
    emit(out, &MdstOutput { tree: &tree, observation })?;
    Ok(if ok { EXIT_OK } else { EXIT_FAILED })
}

#[derive(Serialize)]
struct ReduceOutput {
    target_edges: usize,
    all_certified: bool,
    constant_span: bool,
    #[serde(flatten)]
    sequence: crate::reductions::DeletionSequence,
}

#[allow(clippy::too_many_arguments)]
fn cmd_reduce(
    family: Option<Family>,
    m: Option<usize>,
    n: Option<usize>,
    graph_path: Option<PathBuf>,
    center: Option<String>,
    labeling: Option<PathBuf>,
    target: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let (graph, root, ordering) = match (family, graph_path) {
        (Some(family), None) => {
            let spec = FamilySpec::new(family, m.unwrap_or(0), n.unwrap_or(0));
            let r = build_family(spec, BuildOptions { allow_outside_hypothesis: true })?;
            (r.graph, r.center.vertices().to_vec(), r.ordering)
        }
        (None, Some(path)) => {
            let graph = load_graph(&path)?;
            let root = parse_center(center.as_deref().unwrap_or(""))?;
            let file = load_labeling(labeling.as_deref().expect("required by clap"))?;
            let ordering = match file.ordering {
                Some(seq) => Ordering::new(seq, graph.order())?,
                None => file.labeling(graph.order())?.induced_ordering()?,
            };
            (graph, root, ordering)
        }
        _ => return Err(Failure::input("give either --family/-m/-n or --graph/--center/--labeling")),
    };
    let dist = all_pairs_distances(&graph);
    let set = CenterSet::new(&graph, &dist, &root)?;
    let target = match target {
        Some(path) => {
            let t = load_graph(&path)?;
            if t.order() != graph.order() {
                return Err(Failure::input("target graph has a different vertex count"));
            }
            RootedSpanningSubgraph { order: t.order(), kept_edges: t.edges(), root: root.clone() }
        }
        None => mdst(&graph, &dist, &set)?,
    };
    let sequence = edge_deletion_sequence(&graph, &target, &root, &ordering)?;
    let output = ReduceOutput {
        target_edges: target.kept_edges.len(),
        all_certified: sequence.all_certified(),
        constant_span: sequence.constant_span(),
        sequence,
    };
    let ok = output.all_certified && output.constant_span;
    if !ok {
        let _ = writeln!(err, "edge-deletion sequence lost certification");
    }
    emit(out, &output)?;
    Ok(if ok { EXIT_OK } else { EXIT_FAILED })
}

#[derive(Debug, Clone, Serialize)]
pub struct GridRow {
    pub m: usize,
    pub n: usize,
    pub closed_form: i64,
    pub span: Option<u64>,
    pub bound: i64,
    pub certified: bool,
    pub within_hypothesis: bool,
}

/// Builds and certifies every `(m, n)` in the grid.
pub fn grid_rows(
    family: Family,
    ms: RangeInclusive<usize>,
    ns: RangeInclusive<usize>,
    experimental: bool,
) -> crate::Result<Vec<GridRow>> {
    let cells: Vec<(usize, usize)> = ms.flat_map(|m| ns.clone().map(move |n| (m, n))).collect();
    cells
        .par_iter()
        .map(|&(m, n)| {
            let spec = FamilySpec::new(family, m, n);
            let r = build_family(spec, BuildOptions { allow_outside_hypothesis: experimental })?;
            Ok(GridRow {
                m,
                n,
                closed_form: r.closed_form,
                span: r.span(),
                bound: r.certificate.bound.bound,
                certified: r.certified(),
                within_hypothesis: r.within_hypothesis,
            })
        })
        .collect()
}

fn cmd_grid(
    family: Family,
    m_range: &str,
    n_range: &str,
    experimental: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let (ms, ns) = (parse_range(m_range)?, parse_range(n_range)?);
    if !experimental {
        FamilySpec::new(family, *ms.start(), *ns.start())
            .check_hypothesis()
            .map_err(|e| Failure::input(format!("{e}; pass --experimental to run anyway")))?;
    }
    let rows = grid_rows(family, ms, ns, experimental).map_err(Failure::from)?;
    let bad: Vec<_> = rows
        .iter()
        .filter(|r| !r.certified || r.span.map(|s| s as i64) != Some(r.closed_form))
        .collect();
    for r in &bad {
        let _ = writeln!(
            err,
            "m={} n={}: certified={} span={:?} closed form {}",
            r.m, r.n, r.certified, r.span, r.closed_form
        );
    }
    let all_ok = bad.is_empty();
    emit(out, &rows)?;
    if !all_ok {
        return Err(Failure::failed(format!("{} grid cell(s) failed", bad.len())));
    }
    Ok(EXIT_OK)
}
