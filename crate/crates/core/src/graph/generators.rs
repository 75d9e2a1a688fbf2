//! Standard graph families and the Cartesian product.
//!
//! Indexing follows the usual textbook naming: path vertices `u_1..u_m` sit
//! at ids `0..m`; hub-and-rim graphs (wheel, star, friendship) put the hub
//! `v_0` at id 0 and rim vertex `v_j` at id `j`.

use super::{Graph, VertexId};
use crate::error::{Error, Result};

fn require(what: &'static str, min: usize, got: usize) -> Result<()> {
    if got < min {
        return Err(Error::ParameterTooSmall { what, min, got });
    }
    Ok(())
}

fn named(graph: Graph, prefix: &str, offset: usize) -> Graph {
    let p = graph.order();
    graph.with_names((0..p).map(|i| format!("{prefix}_{}", i + offset)))
}

/// `P_m`, vertices `u_1..u_m`.
pub fn path(m: usize) -> Result<Graph> {
    require("path", 1, m)?;
    let edges: Vec<_> = (1..m).map(|i| (i - 1, i)).collect();
    Ok(named(Graph::new(m, &edges)?, "u", 1))
}

/// `C_n`, vertices `v_1..v_n`.
pub fn cycle(n: usize) -> Result<Graph> {
    require("cycle", 3, n)?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(named(Graph::new(n, &edges)?, "v", 1))
}

/// `K_n`, vertices `v_1..v_n`.
pub fn complete(n: usize) -> Result<Graph> {
    require("complete graph", 1, n)?;
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Ok(named(Graph::new(n, &edges)?, "v", 1))
}

/// `W_n`: hub `v_0` joined to every vertex of the rim cycle `v_1 .. v_n`.
pub fn wheel(n: usize) -> Result<Graph> {
    require("wheel", 3, n)?;
    let mut edges: Vec<_> = (1..=n).map(|i| (0, i)).collect();
    edges.extend((1..n).map(|i| (i, i + 1)));
    edges.push((1, n));
    Ok(named(Graph::new(n + 1, &edges)?, "v", 0))
}

/// `K_{1,n}`: hub `v_0` and leaves `v_1 .. v_n`.
pub fn star(n: usize) -> Result<Graph> {
    require("star", 1, n)?;
    let edges: Vec<_> = (1..=n).map(|i| (0, i)).collect();
    Ok(named(Graph::new(n + 1, &edges)?, "v", 0))
}

/// `F_n`: `n` triangles `v_0 v_{2i-1} v_{2i}` sharing the hub `v_0`.
pub fn friendship(n: usize) -> Result<Graph> {
    require("friendship graph", 1, n)?;
    let mut edges: Vec<_> = (1..=2 * n).map(|i| (0, i)).collect();
    edges.extend((1..=n).map(|i| (2 * i - 1, 2 * i)));
    Ok(named(Graph::new(2 * n + 1, &edges)?, "v", 0))
}

/// Id of `(g, h)` in `G □ H` where `H` has `h_order` vertices.
#[inline]
pub fn product_index(g: VertexId, h: VertexId, h_order: usize) -> VertexId {
    g * h_order + h
}

/// `G □ H`. Vertex `(g, h)` gets id `g * |V(H)| + h` and name `(name_g,name_h)`.
pub fn cartesian_product(left: &Graph, right: &Graph) -> Result<Graph> {
    let (pg, ph) = (left.order(), right.order());
    let mut edges = Vec::with_capacity(pg * right.edge_count() + ph * left.edge_count());
    for g in 0..pg {
        for (a, b) in right.edges() {
            edges.push((product_index(g, a, ph), product_index(g, b, ph)));
        }
    }
    for (a, b) in left.edges() {
        for h in 0..ph {
            edges.push((product_index(a, h, ph), product_index(b, h, ph)));
        }
    }
    let product = Graph::new(pg * ph, &edges)?;
    let names = (0..pg).flat_map(|g| {
        (0..ph).map(move |h| format!("({},{})", left.label_of(g), right.label_of(h)))
    });
    Ok(product.with_names(names))
}
