//! Text formats for graphs, representations and weights.
//!
//! * Graph JSON: `{"vertices": ["x1", ...], "edges": [["x1", "x2"], ...]}`.
//! * Edge list: one `u v` pair per line; a line holding a single label
//!   declares an isolated vertex; `#` starts a comment line.
//! * DOT: an undirected `graph G { ... }` for visualisation.
//! * Representation JSON: `{"kind", "t", "circumferences"?, "pieces"}` with
//!   pieces keyed by label in label order.
//! * Weights JSON: `{"x1": 3, ...}` with nonnegative integers.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{build_graph, Graph, VertexLabel, Weights};
use crate::representation::{Piece, RepKind, Representation};

fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    vertices: Vec<VertexLabel>,
    edges: Vec<(VertexLabel, VertexLabel)>,
}

/// Serializes a graph as pretty-printed JSON.
pub fn graph_to_json(g: &Graph) -> String {
    let doc = GraphDoc {
        vertices: g.vertices().to_vec(),
        edges: g.edges().collect(),
    };
    serde_json::to_string_pretty(&doc).expect("graph documents always serialize")
}

/// Parses graph JSON.
pub fn graph_from_json(text: &str) -> Result<Graph> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(parse_error)?;
    build_graph(doc.vertices, doc.edges)
}

/// Writes edges one per line, followed by isolated vertices.
pub fn graph_to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    for (i, label) in g.vertices().iter().enumerate() {
        if g.degree(i) == 0 {
            let _ = writeln!(out, "{label}");
        }
    }
    out
}

/// Parses an edge list; the vertex set is every label mentioned.
pub fn graph_from_edge_list(text: &str) -> Result<Graph> {
    let mut vertices = BTreeMap::new();
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let labels: Vec<VertexLabel> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_>>()?;
        match labels.as_slice() {
            [v] => {
                vertices.insert(v.clone(), ());
            }
            [u, v] => {
                vertices.insert(u.clone(), ());
                vertices.insert(v.clone(), ());
                edges.push((u.clone(), v.clone()));
            }
            _ => {
                return Err(Error::Parse(format!(
                    "line {}: expected one or two labels",
                    lineno + 1
                )))
            }
        }
    }
    build_graph(vertices.into_keys().collect(), edges)
}

/// Writes an undirected DOT graph.
pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for label in g.vertices() {
        let _ = writeln!(out, "  \"{label}\";");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  \"{u}\" -- \"{v}\";");
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize, Deserialize)]
struct RepDoc {
    kind: RepKind,
    t: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    circumferences: Vec<i64>,
    pieces: BTreeMap<VertexLabel, Vec<Piece>>,
}

/// Serializes a representation as pretty-printed JSON.
pub fn rep_to_json(rep: &Representation) -> String {
    let doc = RepDoc {
        kind: rep.kind(),
        t: rep.t(),
        circumferences: rep.circumferences().to_vec(),
        pieces: rep.pieces().clone(),
    };
    serde_json::to_string_pretty(&doc).expect("representation documents always serialize")
}

/// Parses and validates representation JSON.
pub fn rep_from_json(text: &str) -> Result<Representation> {
    let doc: RepDoc = serde_json::from_str(text).map_err(parse_error)?;
    Representation::new(doc.kind, doc.t, doc.circumferences, doc.pieces)
}

/// Serializes weights as a JSON object keyed by label.
pub fn weights_to_json(w: &Weights) -> String {
    let map: BTreeMap<&VertexLabel, u64> = w.iter().collect();
    serde_json::to_string_pretty(&map).expect("weight maps always serialize")
}

/// Parses a JSON object of nonnegative integer weights.
pub fn weights_from_json(text: &str) -> Result<Weights> {
    let map: BTreeMap<VertexLabel, u64> = serde_json::from_str(text).map_err(parse_error)?;
    Ok(Weights::from_pairs(map))
}
