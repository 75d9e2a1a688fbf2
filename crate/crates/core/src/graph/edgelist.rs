//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! 3
//! 0 1
//! 1 2
//! name 0 (u_1,v_0)
//! ```
//!
//! The first non-comment line is the vertex count. Each following line is
//! either an edge `u v` (0-based ids) or `name u <string>`. Everything after
//! a `#` is ignored.

use std::fmt::Write as _;

use super::{DuplicatePolicy, Graph, VertexId};
use crate::error::{Error, Result};

pub fn parse(text: &str, duplicates: DuplicatePolicy) -> Result<Graph> {
    let mut order: Option<usize> = None;
    let mut edges = Vec::new();
    let mut names: Vec<(usize, VertexId, String)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        let Some(p) = order else {
            let p = line
                .parse::<usize>()
                .map_err(|_| err(format!("expected vertex count, found {line:?}")))?;
            order = Some(p);
            continue;
        };
        if let Some(rest) = line.strip_prefix("name") {
            let rest = rest.trim_start();
            let (id, name) = rest
                .split_once(char::is_whitespace)
                .ok_or_else(|| err("expected `name <id> <string>`".into()))?;
            let id: VertexId = id
                .parse()
                .map_err(|_| err(format!("bad vertex id {id:?}")))?;
            if id >= p {
                return Err(err(format!("vertex {id} out of range 0..{p}")));
            }
            names.push((line_no, id, name.trim().to_string()));
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err(format!("expected `u v`, found {line:?}")));
        };
        let parse_id = |s: &str| s.parse::<VertexId>().map_err(|_| err(format!("bad vertex id {s:?}")));
        edges.push((parse_id(a)?, parse_id(b)?));
    }

    let p = order.ok_or(Error::Parse { line: 0, message: "missing vertex count".into() })?;
    let mut graph = Graph::build(p, &edges, duplicates)?;
    for (_, id, name) in names {
        graph.set_name(id, name);
    }
    Ok(graph)
}

/// Serializes edges in lexicographic order, then any names.
pub fn write(graph: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", graph.order());
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    for v in 0..graph.order() {
        if let Some(name) = graph.name(v) {
            let _ = writeln!(out, "name {v} {name}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cartesian_product, path, wheel};

    #[test]
    fn parses_comments_and_names() {
        let text = "# P3\n3\n0 1 # first\n\n1 2\nname 1 middle vertex\n";
        let g = parse(text, DuplicatePolicy::Reject).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(g.name(1), Some("middle vertex"));
        assert_eq!(g.name(0), None);
    }

    #[test]
    fn round_trip() {
        let g = cartesian_product(&path(3).unwrap(), &wheel(7).unwrap()).unwrap();
        let text = write(&g);
        let back = parse(&text, DuplicatePolicy::Reject).unwrap();
        assert_eq!(back, g);
        assert_eq!(write(&back), text);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse("", DuplicatePolicy::Reject), Err(Error::Parse { .. })));
        assert!(matches!(
            parse("2\n0 x\n", DuplicatePolicy::Reject),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse("2\n0 1 2\n", DuplicatePolicy::Reject),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse("2\n0 1\nname 5 x\n", DuplicatePolicy::Reject),
            Err(Error::Parse { line: 3, .. })
        ));
        assert_eq!(parse("4\n0 1\n2 3\n", DuplicatePolicy::Reject), Err(Error::Disconnected));
        assert_eq!(
            parse("2\n0 1\n1 0\n", DuplicatePolicy::Reject),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(parse("2\n0 1\n1 0\n", DuplicatePolicy::Merge).is_ok());
    }
}
