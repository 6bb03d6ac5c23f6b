use std::fmt::Write;

use crate::drawing::{NodeKind, PlanarizedMap};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz text of the planarization: vertices as circles, crossings as
/// small squares, one line per segment labelled with its edge.
pub fn to_dot(map: &PlanarizedMap) -> String {
    let mut out = String::from("graph drawing {\n  node [shape=circle];\n");
    for v in 0..map.node_count() {
        let id = quote(map.node_id(v).as_str());
        match map.node_kind(v) {
            NodeKind::Vertex => writeln!(out, "  {id};").unwrap(),
            NodeKind::Crossing { .. } => {
                writeln!(out, "  {id} [shape=square, label=\"\", width=0.12, height=0.12];").unwrap()
            }
        }
    }
    for e in 0..map.edge_count() {
        let label = quote(map.edge_id(e).as_str());
        for w in map.edge_points(e).windows(2) {
            let (a, b) = (quote(map.node_id(w[0]).as_str()), quote(map.node_id(w[1]).as_str()));
            writeln!(out, "  {a} -- {b} [label={label}];").unwrap();
        }
    }
    out.push_str("}\n");
    out
}
