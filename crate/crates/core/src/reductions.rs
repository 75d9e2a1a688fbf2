//! Level-preserving spanning trees rooted at a center set, and edge-deletion
//! sequences from a graph down to such a tree.
//!
//! Deleting edges never shortens a distance, so as long as every vertex keeps
//! its level and the diameter is unchanged, an ordering that certifies the
//! original graph keeps certifying each intermediate subgraph.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph, VertexId};
use crate::labeling::{certify_optimal, Ordering};
use crate::layers::{layer_decomposition, CenterSet};

/// Spanning subgraph of a parent graph that contains every edge inside the
/// root set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootedSpanningSubgraph {
    pub order: usize,
    /// `(u, v)` with `u < v`, sorted.
    pub kept_edges: Vec<(VertexId, VertexId)>,
    pub root: Vec<VertexId>,
}

impl RootedSpanningSubgraph {
    pub fn graph(&self, parent: &Graph) -> Result<Graph> {
        parent.spanning_subgraph(&self.kept_edges)
    }
}

/// Minimum distance spanning tree rooted at the center: every edge inside the
/// center plus, for each vertex at level `i >= 1`, the edge to its
/// smallest-id neighbor at level `i - 1`.
pub fn mdst(graph: &Graph, dist: &DistanceMatrix, center: &CenterSet) -> Result<RootedSpanningSubgraph> {
    if !center.connected_induced() {
        return Err(Error::CenterNotConnected);
    }
    let level = layer_decomposition(dist, center).level;
    let mut kept = BTreeSet::new();
    for &u in center.vertices() {
        for &v in graph.neighbors(u) {
            if u < v && center.contains(v) {
                kept.insert((u, v));
            }
        }
    }
    for v in 0..graph.order() {
        if level[v] == 0 {
            continue;
        }
        // Neighbor lists are sorted, so the first match is the smallest id.
        let parent = graph
            .neighbors(v)
            .iter()
            .copied()
            .find(|&w| level[w] + 1 == level[v])
            .expect("BFS level has a parent");
        kept.insert((parent.min(v), parent.max(v)));
    }
    Ok(RootedSpanningSubgraph {
        order: graph.order(),
        kept_edges: kept.into_iter().collect(),
        root: center.vertices().to_vec(),
    })
}

/// The four properties a level-preserving spanning tree is expected to have,
/// each with a witness when it fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObservationReport {
    pub parent_diameter: u32,
    pub tree_diameter: u32,
    /// (a) `diam(T) = diam(G)`.
    pub diameter_equal: bool,
    /// A pair realizing the larger diameter when (a) fails.
    pub diameter_witness: Option<(VertexId, VertexId)>,
    /// (b) `d_T(u, L0) = d_G(u, L0)` for every vertex.
    pub levels_preserved: bool,
    pub level_witness: Option<VertexId>,
    /// (c) `L(T) = L(G)`.
    pub total_preserved: bool,
    /// (d) `d_T(u, v) >= d_G(u, v)` for every pair.
    pub distances_dominate: bool,
    pub distance_witness: Option<(VertexId, VertexId)>,
}

impl ObservationReport {
    pub fn all_hold(&self) -> bool {
        self.diameter_equal && self.levels_preserved && self.total_preserved && self.distances_dominate
    }
}

pub fn check_observation(
    parent: &Graph,
    parent_dist: &DistanceMatrix,
    tree: &Graph,
    root: &[VertexId],
) -> Result<ObservationReport> {
    if tree.order() != parent.order() {
        return Err(Error::Inconsistent("tree does not span the parent graph".into()));
    }
    let tree_dist = all_pairs_distances(tree);
    let parent_center = CenterSet::new(parent, parent_dist, root)?;
    let tree_center = CenterSet::new(tree, &tree_dist, root)?;
    let parent_layers = layer_decomposition(parent_dist, &parent_center);
    let tree_layers = layer_decomposition(&tree_dist, &tree_center);

    let p = parent.order();
    let pairs = || (0..p).flat_map(|u| (u + 1..p).map(move |v| (u, v)));
    let (dg, dt) = (parent_dist.diameter(), tree_dist.diameter());
    let diameter_witness = (dg != dt).then(|| {
        let target = dg.max(dt);
        pairs()
            .find(|&(u, v)| parent_dist.get(u, v).max(tree_dist.get(u, v)) == target)
            .expect("diameter attained")
    });
    let level_witness = (0..p).find(|&v| parent_layers.level[v] != tree_layers.level[v]);
    let distance_witness = pairs().find(|&(u, v)| tree_dist.get(u, v) < parent_dist.get(u, v));

    Ok(ObservationReport {
        parent_diameter: dg,
        tree_diameter: dt,
        diameter_equal: dg == dt,
        diameter_witness,
        levels_preserved: level_witness.is_none(),
        level_witness,
        total_preserved: parent_layers.total == tree_layers.total,
        distances_dominate: distance_witness.is_none(),
        distance_witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeletionStep {
    pub deleted: (VertexId, VertexId),
    pub certified: bool,
    pub span: Option<u64>,
    pub bound: i64,
    pub diameter: u32,
    /// No distance shrank relative to the previous graph.
    pub distances_nondecreasing: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeletionSequence {
    pub initial_certified: bool,
    pub initial_span: Option<u64>,
    pub steps: Vec<DeletionStep>,
}

impl DeletionSequence {
    pub fn all_certified(&self) -> bool {
        self.initial_certified && self.steps.iter().all(|s| s.certified)
    }

    /// Every step reports the initial span.
    pub fn constant_span(&self) -> bool {
        self.steps.iter().all(|s| s.span == self.initial_span)
    }
}

/// Deletes the edges of `graph` outside `target` one at a time in
/// lexicographic order, recertifying `ordering` after each deletion.
pub fn edge_deletion_sequence(
    graph: &Graph,
    target: &RootedSpanningSubgraph,
    root: &[VertexId],
    ordering: &Ordering,
) -> Result<DeletionSequence> {
    let keep: BTreeSet<_> = target.kept_edges.iter().copied().collect();
    for &(u, v) in &keep {
        if u >= graph.order() || v >= graph.order() || !graph.has_edge(u, v) {
            return Err(Error::EdgeNotInParent(u, v));
        }
    }
    let surplus: Vec<_> = graph.edges().into_iter().filter(|e| !keep.contains(e)).collect();

    let mut current = graph.clone();
    let mut dist = all_pairs_distances(&current);
    let initial = certify_optimal(&dist, &CenterSet::new(&current, &dist, root)?, ordering)?;
    let mut steps = Vec::with_capacity(surplus.len());
    for edge in surplus {
        let next = current.without_edges(&[edge]).map_err(|e| match e {
            Error::Disconnected => Error::Inconsistent(format!(
                "deleting {}-{} disconnects the graph; target is not spanning",
                edge.0, edge.1
            )),
            other => other,
        })?;
        let next_dist = all_pairs_distances(&next);
        let p = next.order();
        let distances_nondecreasing =
            (0..p).all(|u| (0..p).all(|v| next_dist.get(u, v) >= dist.get(u, v)));
        let center = CenterSet::new(&next, &next_dist, root)?;
        let cert = certify_optimal(&next_dist, &center, ordering)?;
        steps.push(DeletionStep {
            deleted: edge,
            certified: cert.certified,
            span: cert.labeling.as_ref().map(|l| l.span()),
            bound: cert.bound.bound,
            diameter: next_dist.diameter(),
            distances_nondecreasing,
        });
        current = next;
        dist = next_dist;
    }
    Ok(DeletionSequence {
        initial_certified: initial.certified,
        initial_span: initial.labeling.as_ref().map(|l| l.span()),
        steps,
    })
}
