//! Radio labelings of graphs.
//!
//! A radio labeling of a connected graph `G` with diameter `d` assigns
//! non-negative integers to vertices so that
//! `|f(u) - f(v)| >= d + 1 - d(u, v)` for every pair of distinct vertices.
//! The radio number `rn(G)` is the smallest achievable span.
//!
//! The crate provides:
//!
//! * [`graph`]: graphs, generators, Cartesian products, BFS distances.
//! * [`layers`]: levels around a center set and the resulting lower bound.
//! * [`labeling`]: verification, labelings generated from vertex orderings,
//!   and the ordering conditions that certify a labeling optimal.
//! * [`families`]: explicit optimal orderings for paths times wheels, stars
//!   and friendship graphs.
//! * [`reductions`]: level-preserving spanning trees and edge-deletion
//!   sequences that keep a certificate valid.
//! * [`exact`]: branch-and-bound radio numbers for small graphs.

pub mod cli;
pub mod error;
pub mod exact;
pub mod families;
pub mod graph;
pub mod labeling;
pub mod layers;
pub mod reductions;

pub use error::{Error, Result};
pub use graph::{all_pairs_distances, DistanceMatrix, Graph, VertexId};
pub use labeling::{Labeling, Ordering};
pub use layers::{BoundReport, CenterSet};
