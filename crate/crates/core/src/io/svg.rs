//! Tutte-style barycentric layout and SVG rendering. The outer face of each
//! connected component is pinned to a circle and every other node is moved
//! to the average of its neighbours until the positions settle.

use std::collections::BTreeSet;
use std::fmt::Write;

use super::ExportError;
use crate::drawing::{NodeKind, PlanarizedMap};
use crate::scalar::Coord;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LayoutOptions {
    pub outer_face: Option<usize>,
    pub radius: f64,
    pub max_sweeps: usize,
    pub tolerance: f64,
}

impl Default for LayoutOptions {
    fn default() -> Self {
        Self { outer_face: None, radius: 200.0, max_sweeps: 2000, tolerance: 1e-6 }
    }
}

/// Node positions, indexed like the map's nodes.
#[derive(Clone, Debug, PartialEq)]
pub struct Layout<T: Coord> {
    pub positions: Vec<(T, T)>,
}

fn c<T: Coord>(x: f64) -> T {
    T::from_f64(x).expect("representable coordinate")
}

pub fn layout<T: Coord>(map: &PlanarizedMap, options: LayoutOptions) -> Result<Layout<T>, ExportError> {
    let faces = map.faces();
    if let Some(hint) = options.outer_face {
        if hint >= faces.len() {
            return Err(ExportError::BadHint { hint, faces: faces.len() });
        }
    }
    let n = map.node_count();
    let mut neighbours: Vec<Vec<usize>> = vec![Vec::new(); n];
    for d in (0..map.dart_count()).step_by(2) {
        let (a, b) = (map.origin(d), map.head(d));
        if a != b {
            neighbours[a].push(b);
            neighbours[b].push(a);
        }
    }

    let radius: T = c(options.radius);
    let mut pos: Vec<(T, T)> = vec![(T::zero(), T::zero()); n];
    let mut pinned = vec![false; n];
    for comp in 0..map.component_count().max(1) {
        let offset: T = c(3.0 * options.radius * comp as f64);
        let members: Vec<usize> = (0..n).filter(|&v| map.component_of(v) == comp).collect();
        let outer = options
            .outer_face
            .filter(|&h| map.component_of(faces[h].nodes[0]) == comp)
            .or_else(|| {
                faces
                    .iter()
                    .filter(|f| map.component_of(f.nodes[0]) == comp)
                    .max_by(|a, b| a.len().cmp(&b.len()).then(b.id.cmp(&a.id)))
                    .map(|f| f.id)
            });
        let ring: Vec<usize> = match outer {
            Some(f) => {
                let mut seen = BTreeSet::new();
                faces[f].nodes.iter().copied().filter(|v| seen.insert(*v)).collect()
            }
            None => members.clone(),
        };
        let k = ring.len().max(1);
        for (i, &v) in ring.iter().enumerate() {
            let angle: T = c(std::f64::consts::TAU * i as f64 / k as f64);
            let r = if ring.len() == 1 { T::zero() } else { radius };
            // Clockwise walk placed clockwise: negate the angle.
            pos[v] = (offset + r * angle.cos(), -(r * angle.sin()));
            pinned[v] = true;
        }
        for &v in &members {
            if !pinned[v] {
                pos[v] = (offset, T::zero());
            }
        }
    }

    let tol: T = c(options.tolerance);
    for _ in 0..options.max_sweeps {
        let mut moved = T::zero();
        for v in 0..n {
            if pinned[v] || neighbours[v].is_empty() {
                continue;
            }
            let k: T = c(neighbours[v].len() as f64);
            let (sx, sy) = neighbours[v].iter().fold((T::zero(), T::zero()), |(x, y), &w| (x + pos[w].0, y + pos[w].1));
            let next = (sx / k, sy / k);
            moved = moved.max((next.0 - pos[v].0).abs().max((next.1 - pos[v].1).abs()));
            pos[v] = next;
        }
        if moved < tol {
            break;
        }
    }
    Ok(Layout { positions: pos })
}

/// SVG picture: one polyline per edge through its crossings, circles for
/// vertices and small squares for crossings.
pub fn to_svg(map: &PlanarizedMap, outer_face: Option<usize>) -> Result<String, ExportError> {
    let lay = layout::<f64>(map, LayoutOptions { outer_face, ..Default::default() })?;
    let pos = &lay.positions;
    let pad = 20.0;
    let (mut min_x, mut min_y, mut max_x, mut max_y) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for &(x, y) in pos {
        min_x = min_x.min(x);
        min_y = min_y.min(y);
        max_x = max_x.max(x);
        max_y = max_y.max(y);
    }
    let (w, h) = (max_x - min_x + 2.0 * pad, max_y - min_y + 2.0 * pad);
    let tx = |x: f64| x - min_x + pad;
    let ty = |y: f64| y - min_y + pad;
    let mut out = String::new();
    writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.1}" height="{h:.1}" viewBox="0 0 {w:.1} {h:.1}">"#).unwrap();
    writeln!(out, r#"<g fill="none" stroke="black" stroke-width="1">"#).unwrap();
    for e in 0..map.edge_count() {
        let points: Vec<String> =
            map.edge_points(e).iter().map(|&v| format!("{:.2},{:.2}", tx(pos[v].0), ty(pos[v].1))).collect();
        writeln!(out, r#"<polyline data-edge="{}" points="{}"/>"#, escape(map.edge_id(e).as_str()), points.join(" ")).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    for v in 0..map.node_count() {
        let (x, y) = (tx(pos[v].0), ty(pos[v].1));
        match map.node_kind(v) {
            NodeKind::Vertex => {
                writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="4" fill="white" stroke="black"/>"#).unwrap();
                writeln!(out, r#"<text x="{:.2}" y="{:.2}" font-size="9">{}</text>"#, x + 5.0, y - 5.0, escape(map.node_id(v).as_str()))
                    .unwrap();
            }
            NodeKind::Crossing { .. } => {
                writeln!(out, r#"<rect x="{:.2}" y="{:.2}" width="3" height="3" fill="gray"/>"#, x - 1.5, y - 1.5).unwrap()
            }
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::straight_line::straight_line_drawing;

    fn wheel() -> PlanarizedMap {
        let spec = straight_line_drawing(
            &["a", "b", "c", "hub"],
            &[(0.0, 10.0), (9.0, -5.0), (-9.0, -5.0), (0.0, 0.0)],
            &[("ab", 0, 1), ("bc", 1, 2), ("ca", 2, 0), ("ah", 0, 3), ("bh", 1, 3), ("ch", 2, 3)],
        );
        PlanarizedMap::build(&spec).unwrap()
    }

    #[test]
    fn hub_sits_at_barycentre() {
        let map = wheel();
        let outer = map.faces().iter().find(|f| !f.nodes.contains(&3)).unwrap().id;
        let lay = layout::<f64>(&map, LayoutOptions { outer_face: Some(outer), ..Default::default() }).unwrap();
        let (x, y) = lay.positions[3];
        assert!(x.abs() < 1e-4 && y.abs() < 1e-4);
    }

    #[test]
    fn single_precision_layout() {
        let lay = layout::<f32>(&wheel(), LayoutOptions::default()).unwrap();
        assert!(lay.positions.iter().all(|p| p.0.is_finite() && p.1.is_finite()));
    }

    #[test]
    fn bad_hint() {
        let map = wheel();
        assert_eq!(to_svg(&map, Some(99)), Err(ExportError::BadHint { hint: 99, faces: 4 }));
        let svg = to_svg(&map, None).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 6);
    }
}
