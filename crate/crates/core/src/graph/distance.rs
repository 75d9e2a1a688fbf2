use std::collections::VecDeque;

use rayon::prelude::*;

use super::{Graph, VertexId};

/// Hop distances from `source` to every vertex. Unreachable vertices get `u32::MAX`.
pub fn bfs_from(graph: &Graph, source: VertexId) -> Vec<u32> {
    multi_source_bfs(graph, &[source])
}

pub(crate) fn multi_source_bfs(graph: &Graph, sources: &[VertexId]) -> Vec<u32> {
    let mut dist = vec![u32::MAX; graph.order()];
    let mut queue = VecDeque::with_capacity(graph.order());
    for &s in sources {
        if dist[s] != 0 {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &v in graph.neighbors(u) {
            if dist[v] == u32::MAX {
                dist[v] = next;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Dense all-pairs hop-count matrix with the diameter cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    dist: Vec<u32>,
    diameter: u32,
}

impl DistanceMatrix {
    #[inline]
    pub fn get(&self, u: VertexId, v: VertexId) -> u32 {
        self.dist[u * self.order + v]
    }

    pub fn row(&self, u: VertexId) -> &[u32] {
        &self.dist[u * self.order..(u + 1) * self.order]
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    /// `min_{w in set} d(v, w)`.
    pub fn to_set(&self, v: VertexId, set: &[VertexId]) -> u32 {
        set.iter().map(|&w| self.get(v, w)).min().unwrap_or(u32::MAX)
    }

    /// `max_{u,w in set} d(u, w)`.
    pub fn set_diameter(&self, set: &[VertexId]) -> u32 {
        let mut best = 0;
        for (i, &u) in set.iter().enumerate() {
            for &w in &set[i + 1..] {
                best = best.max(self.get(u, w));
            }
        }
        best
    }
}

/// One BFS per source, sources processed in parallel.
pub fn all_pairs_distances(graph: &Graph) -> DistanceMatrix {
    let p = graph.order();
    let rows: Vec<Vec<u32>> = if p >= 64 {
        (0..p).into_par_iter().map(|s| bfs_from(graph, s)).collect()
    } else {
        (0..p).map(|s| bfs_from(graph, s)).collect()
    };
    let dist: Vec<u32> = rows.concat();
    let diameter = dist.iter().copied().max().unwrap_or(0);
    debug_assert!(diameter != u32::MAX, "graph must be connected");
    DistanceMatrix { order: p, dist, diameter }
}
