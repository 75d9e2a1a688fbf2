//! Level structure of a graph around a center set `L0`, and the lower bound
//!
//! ```text
//! rn(G) >= (p - 1)(d - k + 1) + delta - 2 L(G)
//! ```
//!
//! where `k = diam(L0)`, `delta = 1` iff `|L0| = 1`, and `L(G)` is the sum of
//! all vertex levels `d(v, L0)`.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{induces_connected, DistanceMatrix, Graph, VertexId};

/// Default cap on candidate center size for automatic search.
pub const DEFAULT_MAX_CENTER_SIZE: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterSet {
    vertices: Vec<VertexId>,
    k: u32,
    connected_induced: bool,
}

impl CenterSet {
    pub fn new(graph: &Graph, dist: &DistanceMatrix, vertices: &[VertexId]) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut vertices = vertices.to_vec();
        vertices.sort_unstable();
        vertices.dedup();
        if let Some(&v) = vertices.iter().find(|&&v| v >= graph.order()) {
            return Err(Error::VertexOutOfRange { vertex: v, order: graph.order() });
        }
        let k = dist.set_diameter(&vertices);
        let connected_induced = induces_connected(graph, &vertices);
        Ok(Self { vertices, k, connected_induced })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// `diam(L0)` measured in the host graph.
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn connected_induced(&self) -> bool {
        self.connected_induced
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn delta(&self) -> u32 {
        u32::from(self.vertices.len() == 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerDecomposition {
    pub level: Vec<u32>,
    pub h: u32,
    pub layer_sizes: Vec<usize>,
    /// `L(G) = sum_i i * |L_i|`.
    pub total: u64,
    pub delta: u32,
}

impl LayerDecomposition {
    fn from_levels(level: Vec<u32>, center_size: usize) -> Self {
        let h = level.iter().copied().max().unwrap_or(0);
        let mut layer_sizes = vec![0; h as usize + 1];
        for &l in &level {
            layer_sizes[l as usize] += 1;
        }
        let total = level.iter().map(|&l| u64::from(l)).sum();
        Self { level, h, layer_sizes, total, delta: u32::from(center_size == 1) }
    }
}

/// Levels `d(v, L0)` read off the distance matrix.
pub fn layer_decomposition(dist: &DistanceMatrix, center: &CenterSet) -> LayerDecomposition {
    let level = (0..dist.order()).map(|v| dist.to_set(v, center.vertices())).collect();
    LayerDecomposition::from_levels(level, center.len())
}

/// Levels built layer by layer, `L_{i+1} = N(L_i)`, without a distance matrix.
pub fn layers_by_recursion(graph: &Graph, center: &[VertexId]) -> LayerDecomposition {
    let mut level = vec![u32::MAX; graph.order()];
    let mut frontier: Vec<VertexId> = center.to_vec();
    for &v in &frontier {
        level[v] = 0;
    }
    let mut i = 0;
    while !frontier.is_empty() {
        i += 1;
        let mut next = BTreeSet::new();
        for &u in &frontier {
            for &w in graph.neighbors(u) {
                if level[w] == u32::MAX {
                    next.insert(w);
                }
            }
        }
        for &w in &next {
            level[w] = i;
        }
        frontier = next.into_iter().collect();
    }
    let mut unique = center.to_vec();
    unique.sort_unstable();
    unique.dedup();
    LayerDecomposition::from_levels(level, unique.len())
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DecompositionCheck {
    /// Pairs where `d(u,v) > d(u,L0) + d(v,L0) + k`; always empty for a metric.
    pub violations: Vec<(VertexId, VertexId)>,
    /// Unordered pairs `u < v` attaining equality.
    pub equality_pairs: Vec<(VertexId, VertexId)>,
}

impl DecompositionCheck {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `d(u,v) <= d(u,L0) + d(v,L0) + diam(L0)` over all pairs.
pub fn distance_decomposition_check(dist: &DistanceMatrix, center: &CenterSet) -> DecompositionCheck {
    let layers = layer_decomposition(dist, center);
    let k = center.k();
    let mut check = DecompositionCheck::default();
    for u in 0..dist.order() {
        for v in u + 1..dist.order() {
            let rhs = layers.level[u] + layers.level[v] + k;
            let d = dist.get(u, v);
            if d > rhs {
                check.violations.push((u, v));
            } else if d == rhs {
                check.equality_pairs.push((u, v));
            }
        }
    }
    check
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub p: usize,
    pub d: u32,
    pub k: u32,
    pub delta: u32,
    #[serde(rename = "L")]
    pub total: u64,
    pub bound: i64,
    pub center: Vec<VertexId>,
}

impl BoundReport {
    /// Re-evaluates the bound from the stored components.
    pub fn recompute(&self) -> i64 {
        bound_formula(self.p, self.d, self.k, self.delta, self.total)
    }
}

pub fn bound_formula(p: usize, d: u32, k: u32, delta: u32, total: u64) -> i64 {
    (p as i64 - 1) * (i64::from(d) - i64::from(k) + 1) + i64::from(delta) - 2 * total as i64
}

pub fn lower_bound(dist: &DistanceMatrix, center: &CenterSet) -> BoundReport {
    let layers = layer_decomposition(dist, center);
    let p = dist.order();
    let d = dist.diameter();
    BoundReport {
        p,
        d,
        k: center.k(),
        delta: layers.delta,
        total: layers.total,
        bound: bound_formula(p, d, center.k(), layers.delta, layers.total),
        center: center.vertices().to_vec(),
    }
}

/// Every vertex set of size `1..=max_size` inducing a connected subgraph,
/// ordered by size, then lexicographically.
pub fn enumerate_candidate_centers(
    graph: &Graph,
    dist: &DistanceMatrix,
    max_size: usize,
) -> Result<Vec<CenterSet>> {
    if max_size == 0 {
        return Err(Error::ParameterTooSmall { what: "center size", min: 1, got: 0 });
    }
    if max_size > graph.order() {
        return Err(Error::TooLarge { order: max_size, limit: graph.order() });
    }
    let mut all: Vec<Vec<VertexId>> = Vec::new();
    let mut layer: BTreeSet<Vec<VertexId>> = (0..graph.order()).map(|v| vec![v]).collect();
    for size in 1..=max_size {
        all.extend(layer.iter().cloned());
        if size == max_size {
            break;
        }
        let mut next = BTreeSet::new();
        for set in &layer {
            for &v in set {
                for &w in graph.neighbors(v) {
                    if set.binary_search(&w).is_err() {
                        let mut grown = set.clone();
                        let pos = grown.binary_search(&w).unwrap_err();
                        grown.insert(pos, w);
                        next.insert(grown);
                    }
                }
            }
        }
        layer = next;
    }
    all.iter().map(|s| CenterSet::new(graph, dist, s)).collect()
}

/// Maximum of [`lower_bound`] over all candidate centers up to `max_size`.
/// Ties go to the smaller center, then the lexicographically smaller one.
pub fn best_lower_bound(graph: &Graph, dist: &DistanceMatrix, max_size: usize) -> Result<BoundReport> {
    let candidates = enumerate_candidate_centers(graph, dist, max_size)?;
    let reports: Vec<BoundReport> = candidates.par_iter().map(|c| lower_bound(dist, c)).collect();
    // Candidates are already in tie-break order, so keep the first maximum.
    let best = reports
        .into_iter()
        .reduce(|best, r| if r.bound > best.bound { r } else { best })
        .expect("at least one candidate");
    Ok(best)
}
