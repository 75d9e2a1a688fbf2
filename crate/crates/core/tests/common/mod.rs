#![allow(dead_code)]

pub mod tables;

use std::path::Path;
use std::process::{Command, Output};

use rand::seq::SliceRandom;
use rand::Rng;
use radiolab::{Graph, VertexId};

/// Random connected graph on `p` vertices: a random spanning tree plus each
/// remaining pair independently with probability `extra`.
pub fn random_connected<R: Rng>(rng: &mut R, p: usize, extra: f64) -> Graph {
    let mut perm: Vec<VertexId> = (0..p).collect();
    perm.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..p {
        let parent = perm[rng.gen_range(0..i)];
        edges.push((parent.min(perm[i]), parent.max(perm[i])));
    }
    for u in 0..p {
        for v in u + 1..p {
            if !edges.contains(&(u, v)) && rng.gen_bool(extra) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(p, &edges).expect("tree plus extras is connected")
}

/// Connected subsets of size 1 and 2 (single vertices and edges).
pub fn small_centers(graph: &Graph) -> Vec<Vec<VertexId>> {
    let mut out: Vec<Vec<VertexId>> = (0..graph.order()).map(|v| vec![v]).collect();
    out.extend(graph.edges().into_iter().map(|(u, v)| vec![u, v]));
    out
}

/// Vertex id of `(u_i, v_j)` in `P_m x H` with `|H| = h_order`, `i` 1-based.
pub fn product_id(i: usize, j: usize, h_order: usize) -> VertexId {
    (i - 1) * h_order + j
}

pub fn radiolab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_radiolab"))
        .args(args)
        .env("RUST_LOG", "off")
        .output()
        .expect("binary runs")
}

pub fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

pub fn path_str(p: &Path) -> &str {
    p.to_str().expect("utf-8 temp path")
}
