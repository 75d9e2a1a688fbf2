//! Exact radio numbers for small graphs.
//!
//! For a fixed vertex order the pointwise smallest valid labels are the greedy
//! ones, so `rn(G)` is the minimum greedy span over all orderings. The solver
//! searches orderings depth first, extending the current prefix and pruning
//! with a scheduling bound on the labels still to be placed.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering as AtomicOrdering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph, VertexId};
use crate::labeling::{greedy_min_span, Labeling, LabelingFile, Ordering};
use crate::layers::best_lower_bound;

pub const DEFAULT_MAX_VERTICES: usize = 12;
/// Largest order accepted by [`brute_force_radio_number`].
pub const BRUTE_FORCE_MAX_VERTICES: usize = 8;

#[derive(Debug, Clone)]
pub struct SolverConfig {
    /// Hard cap on graph order unless `time_budget` is set.
    pub max_vertices: usize,
    pub time_budget: Option<Duration>,
    /// A known valid upper bound; the search looks for spans at most this.
    pub initial_upper_bound: Option<u64>,
    /// Stop as soon as a labeling with this span is found. Must be a true
    /// lower bound, since reaching it is reported as proved optimal.
    pub known_lower_bound: Option<u64>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            max_vertices: DEFAULT_MAX_VERTICES,
            time_budget: None,
            initial_upper_bound: None,
            known_lower_bound: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SolveStatus {
    ProvedOptimal,
    /// `rn` lies in `[lower, upper]`.
    BudgetExhausted { lower: u64, upper: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    /// Best span found; the radio number when proved optimal.
    pub rn: u64,
    pub witness: Labeling,
    pub ordering: Ordering,
    pub status: SolveStatus,
    pub nodes: u64,
}

impl SolveResult {
    pub fn proved(&self) -> bool {
        self.status == SolveStatus::ProvedOptimal
    }

    pub fn to_output(&self) -> SolveOutput {
        SolveOutput {
            file: LabelingFile::new(&self.witness, Some(&self.ordering)),
            rn: self.rn,
            status: self.status,
            nodes: self.nodes,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SolveOutput {
    #[serde(flatten)]
    pub file: LabelingFile,
    pub rn: u64,
    pub status: SolveStatus,
    pub nodes: u64,
}

struct Shared {
    best: AtomicU64,
    witness: Mutex<Option<(u64, Vec<VertexId>)>>,
    stop: AtomicBool,
    timed_out: AtomicBool,
    nodes: AtomicU64,
    deadline: Option<Instant>,
    target: Option<u64>,
}

impl Shared {
    fn offer(&self, span: u64, seq: &[VertexId]) {
        let mut w = self.witness.lock().unwrap();
        let better = match &*w {
            None => true,
            Some((s, o)) => span < *s || (span == *s && seq < o.as_slice()),
        };
        if better {
            *w = Some((span, seq.to_vec()));
        }
        self.best.fetch_min(span, AtomicOrdering::SeqCst);
        if self.target.is_some_and(|t| span <= t) {
            self.stop.store(true, AtomicOrdering::SeqCst);
        }
    }
}

struct Search<'a> {
    dist: &'a DistanceMatrix,
    d1: u64,
    seq: Vec<VertexId>,
    placed: Vec<bool>,
    /// Smallest label each unplaced vertex may take given the prefix.
    req: Vec<u64>,
    shared: &'a Shared,
    local_nodes: u64,
}

impl Search<'_> {
    fn gap(&self, u: VertexId, v: VertexId) -> u64 {
        self.d1 - u64::from(self.dist.get(u, v))
    }

    /// Lower bound on the final span once `v` is placed at `label`: the
    /// remaining vertices need distinct labels above `label`, each at least
    /// its own requirement.
    fn completion_bound(&self, v: VertexId, label: u64, scratch: &mut Vec<u64>) -> u64 {
        scratch.clear();
        let p = self.placed.len();
        for w in 0..p {
            if !self.placed[w] && w != v {
                scratch.push(self.req[w].max(label + self.gap(v, w)));
            }
        }
        scratch.sort_unstable();
        let r = scratch.len() as u64;
        scratch
            .iter()
            .enumerate()
            .map(|(i, &q)| q + (r - 1 - i as u64))
            .max()
            .unwrap_or(label)
    }

    fn tick(&mut self) -> bool {
        self.local_nodes += 1;
        if self.local_nodes.is_multiple_of(2048) {
            self.shared.nodes.fetch_add(2048, AtomicOrdering::Relaxed);
            if let Some(deadline) = self.shared.deadline {
                if Instant::now() >= deadline {
                    self.shared.timed_out.store(true, AtomicOrdering::SeqCst);
                    self.shared.stop.store(true, AtomicOrdering::SeqCst);
                }
            }
        }
        !self.shared.stop.load(AtomicOrdering::Relaxed)
    }

    fn run(&mut self, last_label: u64) {
        if !self.tick() {
            return;
        }
        let p = self.placed.len();
        let last = *self.seq.last().unwrap();
        let mut candidates: Vec<VertexId> = (0..p).filter(|&v| !self.placed[v]).collect();
        candidates.sort_by_key(|&v| (std::cmp::Reverse(self.dist.get(last, v)), v));
        let mut scratch = Vec::with_capacity(p);
        for v in candidates {
            let label = self.req[v].max(last_label + 1);
            let bound = self.completion_bound(v, label, &mut scratch);
            if bound >= self.shared.best.load(AtomicOrdering::Relaxed) {
                continue;
            }
            self.seq.push(v);
            if self.seq.len() == p {
                self.shared.offer(label, &self.seq);
                self.seq.pop();
                continue;
            }
            self.placed[v] = true;
            let saved = self.req.clone();
            for w in 0..p {
                if !self.placed[w] {
                    self.req[w] = self.req[w].max(label + self.gap(v, w));
                }
            }
            self.run(label);
            self.req = saved;
            self.placed[v] = false;
            self.seq.pop();
            if self.shared.stop.load(AtomicOrdering::Relaxed) {
                return;
            }
        }
    }
}

/// Greedy completion from every start vertex, always taking the vertex with
/// the smallest admissible next label.
fn heuristic_ordering(dist: &DistanceMatrix) -> (u64, Vec<VertexId>) {
    let p = dist.order();
    let d1 = u64::from(dist.diameter()) + 1;
    (0..p)
        .map(|start| {
            let mut seq = vec![start];
            let mut placed = vec![false; p];
            placed[start] = true;
            let mut req: Vec<u64> = (0..p).map(|w| d1 - u64::from(dist.get(start, w))).collect();
            let mut label = 0;
            while seq.len() < p {
                let v = (0..p)
                    .filter(|&w| !placed[w])
                    .min_by_key(|&w| (req[w], std::cmp::Reverse(dist.get(*seq.last().unwrap(), w)), w))
                    .unwrap();
                label = req[v];
                placed[v] = true;
                seq.push(v);
                for w in 0..p {
                    if !placed[w] {
                        req[w] = req[w].max(label + d1 - u64::from(dist.get(v, w)));
                    }
                }
            }
            (label, seq)
        })
        .min()
        .expect("nonempty graph")
}

/// One representative per automorphism orbit, smallest id first.
pub fn orbit_representatives(graph: &Graph, dist: &DistanceMatrix) -> Vec<VertexId> {
    let p = graph.order();
    let colors: Vec<(usize, Vec<u32>)> = (0..p)
        .map(|v| {
            let mut row = dist.row(v).to_vec();
            row.sort_unstable();
            (graph.degree(v), row)
        })
        .collect();
    let mut reps: Vec<VertexId> = Vec::new();
    for v in 0..p {
        let equivalent = reps
            .iter()
            .any(|&r| colors[r] == colors[v] && maps_by_automorphism(dist, &colors, r, v));
        if !equivalent {
            reps.push(v);
        }
    }
    reps
}

/// Whether some distance-preserving bijection sends `from` to `to`.
fn maps_by_automorphism(
    dist: &DistanceMatrix,
    colors: &[(usize, Vec<u32>)],
    from: VertexId,
    to: VertexId,
) -> bool {
    let p = dist.order();
    // Assign vertices in order of distance from `from` so constraints bite early.
    let mut order: Vec<VertexId> = (0..p).filter(|&v| v != from).collect();
    order.sort_by_key(|&v| (dist.get(from, v), v));
    let mut image = vec![usize::MAX; p];
    let mut used = vec![false; p];
    image[from] = to;
    used[to] = true;
    let mut mapped = vec![from];

    fn extend(
        idx: usize,
        order: &[VertexId],
        dist: &DistanceMatrix,
        colors: &[(usize, Vec<u32>)],
        image: &mut [usize],
        used: &mut [bool],
        mapped: &mut Vec<VertexId>,
    ) -> bool {
        let Some(&u) = order.get(idx) else {
            return true;
        };
        for w in 0..dist.order() {
            if used[w] || colors[w] != colors[u] {
                continue;
            }
            if mapped.iter().all(|&x| dist.get(u, x) == dist.get(w, image[x])) {
                image[u] = w;
                used[w] = true;
                mapped.push(u);
                if extend(idx + 1, order, dist, colors, image, used, mapped) {
                    return true;
                }
                mapped.pop();
                used[w] = false;
                image[u] = usize::MAX;
            }
        }
        false
    }

    extend(0, &order, dist, colors, &mut image, &mut used, &mut mapped)
}

/// Branch-and-bound radio number.
pub fn exact_radio_number(graph: &Graph, dist: &DistanceMatrix, config: &SolverConfig) -> Result<SolveResult> {
    let p = graph.order();
    if p > config.max_vertices && config.time_budget.is_none() {
        return Err(Error::TooLarge { order: p, limit: config.max_vertices });
    }
    if p == 1 {
        return Ok(SolveResult {
            rn: 0,
            witness: Labeling::new(vec![0]),
            ordering: Ordering::identity(1),
            status: SolveStatus::ProvedOptimal,
            nodes: 0,
        });
    }

    let (heur_span, heur_seq) = heuristic_ordering(dist);
    let (start_best, seed) = match config.initial_upper_bound {
        Some(u) if u < heur_span => (u + 1, None),
        _ => (heur_span, Some((heur_span, heur_seq.clone()))),
    };
    let have_seed = seed.is_some();
    let shared = Shared {
        best: AtomicU64::new(start_best),
        witness: Mutex::new(seed),
        stop: AtomicBool::new(false),
        timed_out: AtomicBool::new(false),
        nodes: AtomicU64::new(0),
        deadline: config.time_budget.map(|b| Instant::now() + b),
        target: config.known_lower_bound,
    };
    if have_seed && config.known_lower_bound.is_some_and(|t| start_best <= t) {
        shared.stop.store(true, AtomicOrdering::SeqCst);
    }

    let d1 = u64::from(dist.diameter()) + 1;
    let reps = orbit_representatives(graph, dist);
    let node_total: u64 = reps
        .par_iter()
        .map(|&first| {
            let mut placed = vec![false; p];
            placed[first] = true;
            let req = (0..p).map(|w| d1 - u64::from(dist.get(first, w))).collect();
            let mut search = Search {
                dist,
                d1,
                seq: vec![first],
                placed,
                req,
                shared: &shared,
                local_nodes: 0,
            };
            if !shared.stop.load(AtomicOrdering::Relaxed) {
                search.run(0);
            }
            search.local_nodes % 2048
        })
        .sum();
    let nodes = shared.nodes.load(AtomicOrdering::Relaxed) + node_total;

    let timed_out = shared.timed_out.load(AtomicOrdering::SeqCst);
    let witness = shared.witness.into_inner().unwrap();
    let (span, seq) = match witness {
        Some(w) => w,
        None if timed_out => (heur_span, heur_seq),
        None => return Err(Error::UpperBoundTooLow(config.initial_upper_bound.unwrap_or(0))),
    };
    let ordering = Ordering::new(seq, p)?;
    let labeling = greedy_min_span(dist, &ordering);
    if labeling.span() != span {
        return Err(Error::Inconsistent(format!(
            "search span {span} disagrees with greedy labeling span {}",
            labeling.span()
        )));
    }
    let status = if timed_out {
        let mut lower = (p as u64) - 1;
        if let Ok(b) = best_lower_bound(graph, dist, 2.min(p)) {
            lower = lower.max(b.bound.max(0) as u64);
        }
        if let Some(k) = config.known_lower_bound {
            lower = lower.max(k);
        }
        if lower >= span {
            SolveStatus::ProvedOptimal
        } else {
            SolveStatus::BudgetExhausted { lower, upper: span }
        }
    } else {
        SolveStatus::ProvedOptimal
    };
    Ok(SolveResult { rn: span, witness: labeling, ordering, status, nodes })
}

/// Minimum greedy span over all `p!` orderings, without pruning.
pub fn brute_force_radio_number(dist: &DistanceMatrix) -> Result<u64> {
    let p = dist.order();
    if p > BRUTE_FORCE_MAX_VERTICES {
        return Err(Error::TooLarge { order: p, limit: BRUTE_FORCE_MAX_VERTICES });
    }
    let best = (0..p)
        .permutations(p)
        .map(|seq| greedy_min_span(dist, &Ordering::new(seq, p).expect("permutation")).span())
        .min()
        .unwrap_or(0);
    Ok(best)
}
