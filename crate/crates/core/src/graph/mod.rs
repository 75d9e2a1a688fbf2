//! Simple undirected connected graphs over dense vertex ids.
//!
//! Vertices are `0..p`. Display names (such as `(u_4,v_0)` for product
//! vertices) live in a side table and never act as identity.

mod distance;
pub mod edgelist;
mod generators;

pub use distance::{all_pairs_distances, bfs_from, DistanceMatrix};
pub use generators::{
    cartesian_product, complete, cycle, friendship, path, product_index, star, wheel,
};

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub type VertexId = usize;

/// How [`Graph::build`] treats an edge listed more than once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DuplicatePolicy {
    #[default]
    Reject,
    /// Keep one copy and log a warning.
    Merge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
    names: Vec<Option<String>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a connected simple graph on `p` vertices, rejecting duplicates.
    pub fn new(p: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        Self::build(p, edges, DuplicatePolicy::Reject)
    }

    pub fn build(
        p: usize,
        edges: &[(VertexId, VertexId)],
        duplicates: DuplicatePolicy,
    ) -> Result<Self> {
        let graph = Self::build_unchecked_connectivity(p, edges, duplicates)?;
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(graph)
    }

    fn build_unchecked_connectivity(
        p: usize,
        edges: &[(VertexId, VertexId)],
        duplicates: DuplicatePolicy,
    ) -> Result<Self> {
        if p == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adjacency = vec![Vec::new(); p];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= p {
                    return Err(Error::VertexOutOfRange { vertex: w, order: p });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut edge_count = 0;
        for (u, nbrs) in adjacency.iter_mut().enumerate() {
            nbrs.sort_unstable();
            let before = nbrs.len();
            nbrs.dedup();
            if nbrs.len() != before {
                match duplicates {
                    DuplicatePolicy::Reject => {
                        let dup = first_duplicate(edges, u).expect("duplicate exists");
                        return Err(Error::DuplicateEdge(u.min(dup), u.max(dup)));
                    }
                    DuplicatePolicy::Merge => {
                        log::warn!("merged {} duplicate edge(s) at vertex {u}", before - nbrs.len());
                    }
                }
            }
            edge_count += nbrs.len();
        }
        Ok(Self {
            adjacency,
            names: vec![None; p],
            edge_count: edge_count / 2,
        })
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    pub fn name(&self, v: VertexId) -> Option<&str> {
        self.names[v].as_deref()
    }

    /// Name if present, otherwise the numeric id.
    pub fn label_of(&self, v: VertexId) -> String {
        self.names[v].clone().unwrap_or_else(|| v.to_string())
    }

    pub fn set_name(&mut self, v: VertexId, name: impl Into<String>) {
        self.names[v] = Some(name.into());
    }

    pub fn with_names<I, S>(mut self, names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        for (v, name) in names.into_iter().enumerate().take(self.order()) {
            self.names[v] = Some(name.into());
        }
        self
    }

    pub fn find_by_name(&self, name: &str) -> Option<VertexId> {
        self.names.iter().position(|n| n.as_deref() == Some(name))
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.order()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.order()
    }

    /// Same vertex set and names, with `removed` edges dropped.
    pub fn without_edges(&self, removed: &[(VertexId, VertexId)]) -> Result<Graph> {
        let removed: std::collections::HashSet<(VertexId, VertexId)> =
            removed.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        let kept: Vec<_> = self
            .edges()
            .into_iter()
            .filter(|e| !removed.contains(e))
            .collect();
        let mut g = Graph::new(self.order(), &kept)?;
        g.names = self.names.clone();
        Ok(g)
    }

    /// Spanning subgraph on the same vertices keeping only `kept` edges.
    pub fn spanning_subgraph(&self, kept: &[(VertexId, VertexId)]) -> Result<Graph> {
        for &(u, v) in kept {
            if u >= self.order() || v >= self.order() || !self.has_edge(u, v) {
                return Err(Error::EdgeNotInParent(u, v));
            }
        }
        let mut g = Graph::new(self.order(), kept)?;
        g.names = self.names.clone();
        Ok(g)
    }
}

fn first_duplicate(edges: &[(VertexId, VertexId)], u: VertexId) -> Option<VertexId> {
    let mut seen = std::collections::HashSet::new();
    edges.iter().find_map(|&(a, b)| {
        let other = if a == u {
            b
        } else if b == u {
            a
        } else {
            return None;
        };
        (!seen.insert(other)).then_some(other)
    })
}

/// Subgraph induced by a vertex set. Connectivity is reported, not required.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    /// Parent ids, sorted; position `i` is vertex `i` of the subgraph.
    pub vertices: Vec<VertexId>,
    /// Edges in subgraph-local ids.
    pub edges: Vec<(VertexId, VertexId)>,
    pub connected: bool,
}

impl InducedSubgraph {
    pub fn into_graph(self, parent: &Graph) -> Result<Graph> {
        let mut g = Graph::new(self.vertices.len(), &self.edges)?;
        for (local, &v) in self.vertices.iter().enumerate() {
            if let Some(name) = parent.name(v) {
                g.set_name(local, name);
            }
        }
        Ok(g)
    }
}

pub fn induced_subgraph(graph: &Graph, set: &[VertexId]) -> Result<InducedSubgraph> {
    if set.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let mut vertices = set.to_vec();
    vertices.sort_unstable();
    vertices.dedup();
    if let Some(&v) = vertices.iter().find(|&&v| v >= graph.order()) {
        return Err(Error::VertexOutOfRange { vertex: v, order: graph.order() });
    }
    let mut local = vec![usize::MAX; graph.order()];
    for (i, &v) in vertices.iter().enumerate() {
        local[v] = i;
    }
    let mut edges = Vec::new();
    for (i, &v) in vertices.iter().enumerate() {
        for &w in graph.neighbors(v) {
            let j = local[w];
            if j != usize::MAX && i < j {
                edges.push((i, j));
            }
        }
    }
    let connected = Graph::build_unchecked_connectivity(vertices.len(), &edges, DuplicatePolicy::Reject)
        .map(|g| g.is_connected())
        .unwrap_or(false);
    Ok(InducedSubgraph { vertices, edges, connected })
}

/// True when `set` induces a connected subgraph of `graph`.
pub fn induces_connected(graph: &Graph, set: &[VertexId]) -> bool {
    induced_subgraph(graph, set).map(|s| s.connected).unwrap_or(false)
}
