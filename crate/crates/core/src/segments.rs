//! Residual edges cut into sticks and middle parts at their crossings with
//! the skeleton, plus per-face profiles.
//!
//! Pieces are oriented: a stick runs from its vertex to its first skeleton
//! crossing, a middle part runs along its edge from `end_a` towards `end_b`.
//! Positions on a face boundary are occurrences in the face walk: vertex
//! occurrence `i` is `nodes[i]` and edge occurrence `i` joins `nodes[i]` to
//! `nodes[i + 1]`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;
use thiserror::Error;

use crate::drawing::{CrossingId, EdgeId, FaceWalk, NodeId, NodeKind, PlanarizedMap};
use crate::skeleton::SkeletonDecomposition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PieceKind {
    Stick,
    Middle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StickClass {
    Short,
    Long,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MiddleClass {
    Short,
    Far,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Anchor {
    Stick {
        vertex: NodeId,
        /// `None` when the vertex is not on the boundary of the host face.
        vertex_occurrence: Option<usize>,
        crossed: EdgeId,
        edge_occurrence: usize,
        class: StickClass,
    },
    Middle {
        crossed: [EdgeId; 2],
        occurrences: [usize; 2],
        class: MiddleClass,
    },
}

/// A crossing between two residual pieces inside their common face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PieceCrossing {
    pub crossing: CrossingId,
    pub other: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SegmentPiece {
    pub id: usize,
    pub edge: EdgeId,
    /// Position of the piece along its edge, from `end_a`.
    pub index: usize,
    pub face: usize,
    pub anchor: Anchor,
    pub crossings: Vec<PieceCrossing>,
}

impl SegmentPiece {
    pub fn kind(&self) -> PieceKind {
        match self.anchor {
            Anchor::Stick { .. } => PieceKind::Stick,
            Anchor::Middle { .. } => PieceKind::Middle,
        }
    }

    pub fn is_stick(&self) -> bool {
        self.kind() == PieceKind::Stick
    }

    pub fn intra_face_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn crosses(&self, other: usize) -> bool {
        self.crossings.iter().any(|c| c.other == other)
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Segmentation {
    pub pieces: Vec<SegmentPiece>,
    pub warnings: Vec<String>,
}

impl Segmentation {
    pub fn sticks(&self) -> impl Iterator<Item = &SegmentPiece> {
        self.pieces.iter().filter(|p| p.is_stick())
    }

    pub fn middles(&self) -> impl Iterator<Item = &SegmentPiece> {
        self.pieces.iter().filter(|p| !p.is_stick())
    }

    pub fn pieces_of(&self, edge: &str) -> Vec<&SegmentPiece> {
        self.pieces.iter().filter(|p| p.edge.as_str() == edge).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SegmentError {
    #[error("residual edge {0} crosses no skeleton edge")]
    Uncrossed(EdgeId),
}

/// Splits every residual edge at its skeleton crossings.
pub fn decompose(dec: &SkeletonDecomposition<'_>) -> Result<Segmentation, SegmentError> {
    let map = dec.map;
    let skel = &dec.skeleton;
    let kept: Vec<bool> = (0..map.edge_count()).map(|e| dec.kept.contains(map.edge_id(e))).collect();
    let mut out = Segmentation::default();
    // (crossing node, edge) -> piece holding that crossing in its interior.
    let mut inner: HashMap<(usize, usize), usize> = HashMap::new();

    let mut residual: Vec<usize> = (0..map.edge_count()).filter(|&e| !kept[e]).collect();
    residual.sort_by(|&a, &b| map.edge_id(a).cmp(map.edge_id(b)));

    for e in residual {
        let points = map.edge_points(e);
        let last = points.len() - 1;
        let cuts: Vec<usize> = (1..last)
            .filter(|&j| match map.node_kind(points[j]) {
                NodeKind::Crossing { edges: [a, b] } => a != b && kept[if a == e { b } else { a }],
                NodeKind::Vertex => false,
            })
            .collect();
        if cuts.is_empty() {
            return Err(SegmentError::Uncrossed(map.edge_id(e).clone()));
        }
        let mut bounds = vec![0];
        bounds.extend(&cuts);
        bounds.push(last);

        for (index, w) in bounds.windows(2).enumerate() {
            let (from, to) = (w[0], w[1]);
            let id = out.pieces.len();
            let edge_id = map.edge_id(e).clone();
            let is_first = index == 0;
            let is_last = to == last;
            let (face, anchor) = if is_first || is_last {
                // A stick, oriented from its vertex to the cut it touches.
                let (vertex, leaving, outward) = if is_first {
                    (points[0], map.segment_dart(e, 0, true), map.segment_dart(e, to - 1, false))
                } else {
                    (points[last], map.segment_dart(e, last - 1, false), map.segment_dart(e, from, true))
                };
                let (face, crossed, j) = host_at_crossing(map, skel, outward);
                let occurrence = match host_at_vertex(map, skel, &kept, leaving) {
                    Some((f, i)) if f == face => Some(i),
                    Some(_) => {
                        out.warnings.push(format!(
                            "stick of {edge_id} at {} leaves from a different face walk than it ends in",
                            map.node_id(vertex)
                        ));
                        None
                    }
                    None => {
                        out.warnings.push(format!(
                            "stick of {edge_id} at {} starts at a vertex with no skeleton edge",
                            map.node_id(vertex)
                        ));
                        None
                    }
                };
                let s = skel.face(face).len();
                let class = occurrence.map_or(StickClass::Long, |i| stick_class(i, j, s));
                let anchor = Anchor::Stick {
                    vertex: map.node_id(vertex).clone(),
                    vertex_occurrence: occurrence,
                    crossed,
                    edge_occurrence: j,
                    class,
                };
                (face, anchor)
            } else {
                let (face, g1, o1) = host_at_crossing(map, skel, map.segment_dart(e, from, true));
                let (face2, g2, o2) = host_at_crossing(map, skel, map.segment_dart(e, to - 1, false));
                if face2 != face {
                    out.warnings.push(format!("middle part {index} of {edge_id} ends in a different face walk"));
                }
                if g1 == g2 {
                    out.warnings.push(format!(
                        "middle part {index} of {edge_id} crosses skeleton edge {g1} twice; occurrences compared"
                    ));
                }
                let s = skel.face(face).len();
                (face, Anchor::Middle { class: middle_class(o1, o2, s), crossed: [g1, g2], occurrences: [o1, o2] })
            };
            for j in from + 1..to {
                inner.insert((points[j], e), id);
            }
            out.pieces.push(SegmentPiece { id, edge: edge_id, index, face, anchor, crossings: Vec::new() });
        }
    }

    // Pair up residual-residual crossings.
    let mut keys: Vec<(usize, usize)> = inner.keys().copied().collect();
    keys.sort_unstable();
    for (node, e) in keys {
        let NodeKind::Crossing { edges: [a, b] } = map.node_kind(node) else { continue };
        if a == b {
            out.warnings.push(format!("edge {} crosses itself at {}", map.edge_id(a), map.node_id(node)));
            continue;
        }
        let f = if a == e { b } else { a };
        if let (Some(&p), Some(&q)) = (inner.get(&(node, e)), inner.get(&(node, f))) {
            out.pieces[p].crossings.push(PieceCrossing { crossing: CrossingId::new(map.node_id(node).as_str()), other: q });
        }
    }
    for piece in &mut out.pieces {
        piece.crossings.sort_by_key(|c| c.other);
    }
    Ok(out)
}

/// Skeleton dart with the same edge and direction as a full-map dart of a
/// skeleton edge.
fn skeleton_dart(map: &PlanarizedMap, skel: &PlanarizedMap, dart: usize) -> usize {
    let (g, _, forward) = map.dart_edge(dart);
    let sg = skel.edge_index(map.edge_id(g).as_str()).expect("skeleton edge present in skeleton map");
    skel.segment_dart(sg, 0, forward)
}

/// `(face, crossed skeleton edge, edge occurrence)` for a piece end at a
/// skeleton crossing, where `outward` leaves the crossing along the piece.
/// The piece lies clockwise of the next dart, i.e. on that dart's right.
fn host_at_crossing(map: &PlanarizedMap, skel: &PlanarizedMap, outward: usize) -> (usize, EdgeId, usize) {
    let q = map.rot_next(outward);
    let sd = skeleton_dart(map, skel, q);
    let g = map.edge_id(map.dart_edge(q).0).clone();
    (skel.face_of(sd), g, skel.face_position(sd))
}

/// `(face, vertex occurrence)` of the corner a dart leaves its vertex into.
fn host_at_vertex(map: &PlanarizedMap, skel: &PlanarizedMap, kept: &[bool], leaving: usize) -> Option<(usize, usize)> {
    let mut q = map.rot_next(leaving);
    while q != leaving {
        if kept[map.dart_edge(q).0] {
            let sd = skeleton_dart(map, skel, q);
            return Some((skel.face_of(sd), skel.face_position(sd)));
        }
        q = map.rot_next(q);
    }
    None
}

fn stick_class(vertex_occurrence: usize, edge_occurrence: usize, s: usize) -> StickClass {
    let (i, j) = (vertex_occurrence, edge_occurrence);
    let forward = (j + s - i) % s;
    let backward = (i + 2 * s - j - 1) % s;
    if forward == 1 || backward == 1 {
        StickClass::Short
    } else {
        StickClass::Long
    }
}

fn middle_class(o1: usize, o2: usize, s: usize) -> MiddleClass {
    let d = (o1 + s - o2) % s;
    if o1 != o2 && (d == 1 || d == s - 1) {
        MiddleClass::Short
    } else {
        MiddleClass::Far
    }
}

/// Short iff, in one of the two directions around the face, the boundary
/// walk from the stick's vertex to the crossed edge passes exactly one other
/// vertex occurrence. Sticks without a vertex occurrence are long.
pub fn classify_stick(piece: &SegmentPiece, face: &FaceWalk) -> Option<StickClass> {
    match piece.anchor {
        Anchor::Stick { vertex_occurrence: Some(i), edge_occurrence, .. } => {
            Some(stick_class(i, edge_occurrence, face.len()))
        }
        Anchor::Stick { vertex_occurrence: None, .. } => Some(StickClass::Long),
        Anchor::Middle { .. } => None,
    }
}

/// Short iff the two crossed edge occurrences are consecutive on the walk.
pub fn classify_middle(piece: &SegmentPiece, face: &FaceWalk) -> Option<MiddleClass> {
    match piece.anchor {
        Anchor::Middle { occurrences: [a, b], .. } => Some(middle_class(a, b, face.len())),
        Anchor::Stick { .. } => None,
    }
}

/// Side of a stick: right when it crosses the edge occurrence right after
/// the one leaving its vertex occurrence, left otherwise.
pub fn stick_side(piece: &SegmentPiece, s: usize) -> Option<Side> {
    match piece.anchor {
        Anchor::Stick { vertex_occurrence: Some(i), edge_occurrence: j, .. } => {
            Some(if j == (i + 1) % s { Side::Right } else { Side::Left })
        }
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StickPair {
    pub sticks: [usize; 2],
    pub opposite: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceProfile {
    pub face: usize,
    pub size: usize,
    pub boundary: Vec<NodeId>,
    pub boundary_edges: Vec<EdgeId>,
    /// Face across each edge occurrence.
    pub neighbors: Vec<usize>,
    /// Sticks per vertex occurrence.
    pub tau: Vec<usize>,
    pub sticks: Vec<usize>,
    pub middles: Vec<usize>,
    pub bridges: Vec<EdgeId>,
    pub bridge_count: usize,
    pub non_bridge_count: usize,
    pub uncrossed_non_bridges: usize,
    pub sides: BTreeMap<usize, Side>,
    pub crossing_sticks: Vec<StickPair>,
}

impl FaceProfile {
    pub fn stick_count(&self) -> usize {
        self.sticks.len()
    }

    pub fn is_triangle(&self) -> bool {
        self.size == 3
    }

    /// `tau` as sorted descending, e.g. `[3, 0, 0]`.
    pub fn type_signature(&self) -> Vec<usize> {
        let mut t = self.tau.clone();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }
}

pub fn face_profiles(dec: &SkeletonDecomposition<'_>, seg: &Segmentation) -> Vec<FaceProfile> {
    let skel = &dec.skeleton;
    let mut by_face: BTreeMap<usize, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for p in &seg.pieces {
        let entry = by_face.entry(p.face).or_default();
        if p.is_stick() {
            entry.0.push(p.id);
        } else {
            entry.1.push(p.id);
        }
    }

    skel.faces()
        .iter()
        .map(|walk| {
            let s = walk.len();
            let (sticks, middles) = by_face.remove(&walk.id).unwrap_or_default();
            let edge_of = |d: usize| skel.edge_id(skel.dart_edge(d).0).clone();
            let boundary_edges: Vec<EdgeId> = walk.darts.iter().map(|&d| edge_of(d)).collect();
            let mut seen: BTreeMap<&EdgeId, usize> = BTreeMap::new();
            for e in &boundary_edges {
                *seen.entry(e).or_default() += 1;
            }
            let bridges: Vec<EdgeId> = seen.iter().filter(|(_, &c)| c == 2).map(|(e, _)| (*e).clone()).collect();
            let mut crossed_occurrences = BTreeSet::new();
            for &m in &middles {
                if let Anchor::Middle { occurrences, .. } = seg.pieces[m].anchor {
                    crossed_occurrences.extend(occurrences);
                }
            }
            let uncrossed_non_bridges = (0..s)
                .filter(|&i| seen[&boundary_edges[i]] == 1 && !crossed_occurrences.contains(&i))
                .count();
            let mut tau = vec![0; s];
            let mut sides = BTreeMap::new();
            for &st in &sticks {
                if let Anchor::Stick { vertex_occurrence: Some(i), .. } = seg.pieces[st].anchor {
                    tau[i] += 1;
                }
                if let Some(side) = stick_side(&seg.pieces[st], s) {
                    sides.insert(st, side);
                }
            }
            let mut crossing_sticks = Vec::new();
            for (k, &a) in sticks.iter().enumerate() {
                for &b in &sticks[k + 1..] {
                    if seg.pieces[a].crosses(b) {
                        let opposite = matches!((sides.get(&a), sides.get(&b)), (Some(x), Some(y)) if x != y);
                        crossing_sticks.push(StickPair { sticks: [a, b], opposite });
                    }
                }
            }
            FaceProfile {
                face: walk.id,
                size: s,
                boundary: walk.nodes.iter().map(|&n| skel.node_id(n).clone()).collect(),
                neighbors: walk.darts.iter().map(|&d| skel.face_of(PlanarizedMap::twin(d))).collect(),
                tau,
                bridge_count: bridges.len(),
                non_bridge_count: s - 2 * bridges.len(),
                uncrossed_non_bridges,
                bridges,
                boundary_edges,
                sticks,
                middles,
                sides,
                crossing_sticks,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skeleton::{extract_skeleton, skeleton_from_edges, SkeletonMode};
    use crate::straight_line::straight_line_drawing;
    use crate::testing::{convex_gadget_map, face_with};

    #[test]
    fn stick_classes_by_walk_distance() {
        // Triangle: any opposite edge is reached after one vertex.
        assert_eq!(stick_class(0, 1, 3), StickClass::Short);
        // Hexagon, vertex 0 to edge (v2, v3): two vertices either way.
        assert_eq!(stick_class(0, 2, 6), StickClass::Long);
        assert_eq!(stick_class(0, 1, 6), StickClass::Short);
        assert_eq!(stick_class(0, 4, 6), StickClass::Short);
        assert_eq!(stick_class(3, 4, 6), StickClass::Short);
    }

    #[test]
    fn middle_classes_by_adjacency() {
        assert_eq!(middle_class(0, 1, 6), MiddleClass::Short);
        assert_eq!(middle_class(5, 0, 6), MiddleClass::Short);
        assert_eq!(middle_class(0, 3, 6), MiddleClass::Far);
        assert_eq!(middle_class(2, 2, 6), MiddleClass::Far);
        for (a, b) in [(0, 1), (1, 2), (2, 0)] {
            assert_eq!(middle_class(a, b, 3), MiddleClass::Short);
        }
    }

    #[test]
    fn single_crossing_gives_two_sticks() {
        let spec = straight_line_drawing(
            &["a", "b", "c", "d"],
            &[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)],
            &[("ab", 0, 1), ("bc", 1, 2), ("cd", 2, 3), ("da", 3, 0), ("ac", 0, 2), ("bd", 1, 3)],
        );
        let map = PlanarizedMap::build(&spec).unwrap();
        let dec = extract_skeleton(&map, SkeletonMode::Exact).unwrap();
        let seg = decompose(&dec).unwrap();
        assert_eq!(seg.pieces.len(), 2);
        assert!(seg.pieces.iter().all(|p| p.is_stick()));
        assert_ne!(seg.pieces[0].face, seg.pieces[1].face);
        for p in &seg.pieces {
            let face = dec.skeleton.face(p.face);
            assert_eq!(face.len(), 3);
            assert_eq!(classify_stick(p, face), Some(StickClass::Short));
        }
        assert!(seg.warnings.is_empty());
    }

    #[test]
    fn gadget_pieces_follow_convex_order() {
        let map = convex_gadget_map();
        let dec = extract_skeleton(&map, SkeletonMode::Exact).unwrap();
        assert!(["a1", "a2", "a3"].iter().all(|e| dec.kept.contains(*e)));
        let seg = decompose(&dec).unwrap();
        let skel = &dec.skeleton;
        let t123 = face_with(skel, &["v1", "v2", "v3"]);
        let t135 = face_with(skel, &["v1", "v3", "v5"]);
        let t345 = face_with(skel, &["v3", "v4", "v5"]);

        let b1 = seg.pieces_of("b1");
        assert_eq!(b1.iter().map(|p| p.face).collect::<Vec<_>>(), [t123, t135, t345]);
        assert_eq!(b1.iter().map(|p| p.kind()).collect::<Vec<_>>(), [PieceKind::Stick, PieceKind::Middle, PieceKind::Stick]);
        assert_eq!(classify_middle(b1[1], skel.face(t135)), Some(MiddleClass::Short));

        let c1 = seg.pieces_of("c1");
        assert_eq!(c1.len(), 2);
        assert_eq!(c1.iter().map(|p| p.face).collect::<Vec<_>>(), [t135, t345]);

        // Every residual edge yields two sticks.
        assert_eq!(seg.sticks().count(), 2 * dec.residual.len());
        assert!(seg.warnings.is_empty());
    }

    #[test]
    fn gadget_face_types() {
        let map = convex_gadget_map();
        let dec = extract_skeleton(&map, SkeletonMode::Exact).unwrap();
        let seg = decompose(&dec).unwrap();
        let profiles = face_profiles(&dec, &seg);
        let skel = &dec.skeleton;
        let sig = |vs: &[&str]| profiles[face_with(skel, vs)].type_signature();
        assert_eq!(sig(&["v1", "v2", "v3"]), [3, 0, 0]);
        assert_eq!(sig(&["v3", "v4", "v5"]), [3, 0, 0]);
        assert_eq!(sig(&["v1", "v5", "v6"]), [2, 0, 0]);
        assert_eq!(sig(&["v1", "v3", "v5"]), [1, 1, 0]);
        let outer = &profiles[face_with(skel, &["v1", "v2", "v3", "v4", "v5", "v6"])];
        assert_eq!(outer.tau, [0; 6]);
        assert_eq!(outer.uncrossed_non_bridges, outer.non_bridge_count);
        for p in &profiles {
            assert_eq!(p.tau.iter().sum::<usize>(), p.stick_count());
            assert_eq!(p.size, p.non_bridge_count + 2 * p.bridge_count);
        }
        // Sticks sharing v2 do not cross; in (v1, v3, v5) the sticks of c1
        // and c2 do, and in a triangle every stick is a right one.
        let t123 = &profiles[face_with(skel, &["v1", "v2", "v3"])];
        assert!(t123.crossing_sticks.is_empty());
        let t135 = &profiles[face_with(skel, &["v1", "v3", "v5"])];
        assert_eq!(t135.crossing_sticks.len(), 1);
        assert!(!t135.crossing_sticks[0].opposite);
        assert!(t135.sides.values().all(|&s| s == Side::Right));
    }

    #[test]
    fn sticks_stay_below_three_intra_crossings() {
        let map = convex_gadget_map();
        let dec = extract_skeleton(&map, SkeletonMode::Exact).unwrap();
        let seg = decompose(&dec).unwrap();
        assert!(seg.sticks().all(|p| p.intra_face_crossings() <= 2));
        // Crossings are recorded symmetrically.
        for p in &seg.pieces {
            for c in &p.crossings {
                assert!(seg.pieces[c.other].crosses(p.id));
            }
        }
    }

    #[test]
    fn long_stick_in_hexagon() {
        // Hexagon skeleton with one chord from v1 to beyond (v3, v4).
        let names = ["v1", "v2", "v3", "v4", "v5", "v6", "o"];
        let pts = [(0.0, 10.0), (8.5, 5.2), (9.0, -4.8), (0.5, -10.0), (-8.8, -5.5), (-9.2, 4.6), (9.0, -12.0)];
        let edges = [
            ("h1", 0, 1),
            ("h2", 1, 2),
            ("h3", 2, 3),
            ("h4", 3, 4),
            ("h5", 4, 5),
            ("h6", 5, 0),
            ("o3", 2, 6),
            ("o4", 3, 6),
            ("s", 0, 6),
        ];
        let spec = straight_line_drawing(&names, &pts, &edges);
        let map = PlanarizedMap::build(&spec).unwrap();
        let keep: BTreeSet<EdgeId> = ["h1", "h2", "h3", "h4", "h5", "h6", "o3", "o4"].into_iter().map(EdgeId::from).collect();
        let dec = skeleton_from_edges(&map, keep).unwrap();
        let seg = decompose(&dec).unwrap();
        let hex = face_with(&dec.skeleton, &["v1", "v2", "v3", "v4", "v5", "v6"]);
        let stick = seg.pieces.iter().find(|p| p.face == hex).unwrap();
        assert_eq!(classify_stick(stick, dec.skeleton.face(hex)), Some(StickClass::Long));
    }
}
