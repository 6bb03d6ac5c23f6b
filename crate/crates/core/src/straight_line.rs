//! Drawings induced by straight-line segments between points in the plane.
//!
//! Handy for building fixtures: crossings, their order along each edge and
//! all rotations are read off the geometry. Points are assumed to be in
//! general position (no three collinear, no three segments through a point).

use std::collections::BTreeMap;

use crate::drawing::{CrossingId, DrawingSpec, EdgeDecl, EdgeId, NodeId, RotationEntry};
use crate::scalar::Coord;

/// Builds the drawing of `edges` (id, endpoint index, endpoint index) drawn
/// straight between `points`. Vertex `i` is named `names[i]`; crossings are
/// named `x0, x1, ...` in order of discovery over edge pairs.
pub fn straight_line_drawing<T: Coord>(
    names: &[&str],
    points: &[(T, T)],
    edges: &[(&str, usize, usize)],
) -> DrawingSpec {
    assert_eq!(names.len(), points.len(), "one name per point");
    let mut spec = DrawingSpec {
        vertices: names.iter().map(|&n| NodeId::from(n)).collect(),
        edges: edges.iter().map(|&(id, a, b)| EdgeDecl::new(id, names[a], names[b])).collect(),
        ..Default::default()
    };

    // Crossings along each edge as (parameter, crossing index).
    let mut along: Vec<Vec<(T, usize)>> = vec![Vec::new(); edges.len()];
    let mut spots: Vec<((T, T), [usize; 2])> = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (_, a, b) = edges[i];
            let (_, c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if let Some((s, t)) = proper_intersection(points[a], points[b], points[c], points[d]) {
                let k = spots.len();
                let p = lerp(points[a], points[b], s);
                spots.push((p, [i, j]));
                along[i].push((s, k));
                along[j].push((t, k));
            }
        }
    }
    let crossing_name = |k: usize| CrossingId::new(format!("x{k}"));
    for (ei, list) in along.iter_mut().enumerate() {
        list.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
        spec.chains.insert(EdgeId::from(edges[ei].0), list.iter().map(|&(_, k)| crossing_name(k)).collect());
    }
    for (k, (_, [i, j])) in spots.iter().enumerate() {
        spec.crossings.insert(crossing_name(k), [EdgeId::from(edges[*i].0), EdgeId::from(edges[*j].0)]);
    }

    // Rotations: darts sorted counter-clockwise by the direction they leave in.
    let mut at_vertex: Vec<Vec<(T, RotationEntry)>> = vec![Vec::new(); points.len()];
    for &(id, a, b) in edges {
        at_vertex[a].push((angle(points[a], points[b]), RotationEntry::forward(id)));
        at_vertex[b].push((angle(points[b], points[a]), RotationEntry::backward(id)));
    }
    for (vi, mut darts) in at_vertex.into_iter().enumerate() {
        darts.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
        spec.rotations.insert(NodeId::from(names[vi]), darts.into_iter().map(|(_, r)| r).collect());
    }
    for (k, (p, pair)) in spots.iter().enumerate() {
        let mut darts: Vec<(T, RotationEntry)> = Vec::with_capacity(4);
        for &ei in pair {
            let (id, a, b) = edges[ei];
            darts.push((angle(*p, points[b]), RotationEntry::forward(id)));
            darts.push((angle(*p, points[a]), RotationEntry::backward(id)));
        }
        darts.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
        spec.rotations.insert(NodeId::from(&crossing_name(k)), darts.into_iter().map(|(_, r)| r).collect());
    }
    spec
}

fn angle<T: Coord>(from: (T, T), to: (T, T)) -> T {
    (to.1 - from.1).atan2(to.0 - from.0)
}

fn lerp<T: Coord>(a: (T, T), b: (T, T), t: T) -> (T, T) {
    (a.0 + (b.0 - a.0) * t, a.1 + (b.1 - a.1) * t)
}

fn cross<T: Coord>(o: (T, T), a: (T, T), b: (T, T)) -> T {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Parameters `(s, t)` of the interior intersection of segments `ab` and
/// `cd`, if they properly cross.
fn proper_intersection<T: Coord>(a: (T, T), b: (T, T), c: (T, T), d: (T, T)) -> Option<(T, T)> {
    let d1 = cross(a, b, c);
    let d2 = cross(a, b, d);
    let d3 = cross(c, d, a);
    let d4 = cross(c, d, b);
    let zero = T::zero();
    if (d1 > zero) == (d2 > zero) || (d3 > zero) == (d4 > zero) {
        return None;
    }
    if d1 == zero || d2 == zero || d3 == zero || d4 == zero {
        return None;
    }
    let s = d3 / (d3 - d4);
    let t = d1 / (d1 - d2);
    Some((s, t))
}

/// Counts of crossings per edge, keyed by edge id.
pub fn crossing_counts(spec: &DrawingSpec) -> BTreeMap<EdgeId, usize> {
    spec.edges.iter().map(|e| (e.id.clone(), spec.chain(&e.id).len())).collect()
}
