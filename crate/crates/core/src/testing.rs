//! Shared fixtures for unit tests.

use crate::drawing::{DrawingSpec, PlanarizedMap};
use crate::straight_line::straight_line_drawing;

/// Convex hexagon v1..v6 (listed clockwise) with its boundary h1..h6 and the
/// eight gadget chords.
pub fn convex_gadget() -> DrawingSpec {
    let names = ["v1", "v2", "v3", "v4", "v5", "v6"];
    let points = [(0.0, 10.0), (8.5, 5.2), (9.0, -4.8), (0.5, -10.0), (-8.8, -5.5), (-9.2, 4.6)];
    let edges = [
        ("h1", 0, 1),
        ("h2", 1, 2),
        ("h3", 2, 3),
        ("h4", 3, 4),
        ("h5", 4, 5),
        ("h6", 5, 0),
        ("a1", 0, 2),
        ("a2", 2, 4),
        ("a3", 0, 4),
        ("b1", 1, 3),
        ("b2", 3, 5),
        ("b3", 1, 5),
        ("c1", 0, 3),
        ("c2", 1, 4),
    ];
    straight_line_drawing(&names, &points, &edges)
}

pub fn convex_gadget_map() -> PlanarizedMap {
    PlanarizedMap::build(&convex_gadget()).unwrap()
}

/// Index of the face whose boundary visits exactly the given vertices.
pub fn face_with(map: &PlanarizedMap, vertices: &[&str]) -> usize {
    let mut want: Vec<&str> = vertices.to_vec();
    want.sort_unstable();
    map.faces()
        .iter()
        .position(|f| {
            let mut got = map.face_node_ids(f.id);
            got.sort_unstable();
            got == want
        })
        .unwrap_or_else(|| panic!("no face on {vertices:?}"))
}
