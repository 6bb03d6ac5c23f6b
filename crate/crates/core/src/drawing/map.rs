use std::collections::{BTreeSet, HashMap};

use super::spec::{DrawingSpec, EdgeId, NodeId};
use super::DrawingError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Vertex,
    /// A crossing of two edges, given by edge index. Both indices are equal
    /// for a (forbidden) self-crossing.
    Crossing { edges: [usize; 2] },
}

#[derive(Clone, Debug)]
struct Node {
    id: NodeId,
    kind: NodeKind,
}

#[derive(Clone, Debug)]
struct Edge {
    id: EdgeId,
    /// Node indices from `end_a` through the crossings to `end_b`.
    points: Vec<usize>,
    first_segment: usize,
}

/// A face given by its boundary walk. The walk keeps the face on its right,
/// so it runs clockwise around the face. Vertices and edges may repeat.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceWalk {
    pub id: usize,
    /// Darts along the boundary; dart `i` leaves `nodes[i]`.
    pub darts: Vec<usize>,
    pub nodes: Vec<usize>,
}

impl FaceWalk {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// `(node, incoming segment)` for each step of the walk.
    pub fn steps(&self) -> Vec<(usize, usize)> {
        let s = self.darts.len();
        (0..s).map(|i| (self.nodes[i], self.darts[(i + s - 1) % s] / 2)).collect()
    }
}

/// Planarization of a drawing on the sphere.
///
/// Segment `s` owns darts `2s` (towards `end_b` of its edge) and `2s + 1`.
/// Faces are numbered in order of their lowest dart. The map is immutable
/// once built.
#[derive(Clone, Debug)]
pub struct PlanarizedMap {
    spec: DrawingSpec,
    nodes: Vec<Node>,
    node_lookup: HashMap<NodeId, usize>,
    edges: Vec<Edge>,
    edge_lookup: HashMap<EdgeId, usize>,
    segment_edge: Vec<(usize, usize)>,
    origin: Vec<usize>,
    rotation: Vec<Vec<usize>>,
    rot_pos: Vec<usize>,
    face_of: Vec<usize>,
    face_pos: Vec<usize>,
    faces: Vec<FaceWalk>,
    component: Vec<usize>,
    component_count: usize,
}

impl PlanarizedMap {
    pub fn build(spec: &DrawingSpec) -> Result<Self, DrawingError> {
        let mut spec = spec.clone();
        spec.fill_empty_chains();
        spec.check()?;

        let mut nodes = Vec::with_capacity(spec.vertices.len() + spec.crossings.len());
        for v in &spec.vertices {
            nodes.push(Node { id: v.clone(), kind: NodeKind::Vertex });
        }
        let edge_lookup: HashMap<EdgeId, usize> =
            spec.edges.iter().enumerate().map(|(i, e)| (e.id.clone(), i)).collect();
        for (c, pair) in &spec.crossings {
            nodes.push(Node {
                id: NodeId::from(c),
                kind: NodeKind::Crossing { edges: [edge_lookup[&pair[0]], edge_lookup[&pair[1]]] },
            });
        }
        let node_lookup: HashMap<NodeId, usize> =
            nodes.iter().enumerate().map(|(i, n)| (n.id.clone(), i)).collect();

        let mut edges = Vec::with_capacity(spec.edges.len());
        let mut segment_edge = Vec::new();
        for (ei, decl) in spec.edges.iter().enumerate() {
            let chain = spec.chain(&decl.id);
            let mut points = Vec::with_capacity(chain.len() + 2);
            points.push(node_lookup[&decl.end_a]);
            points.extend(chain.iter().map(|c| node_lookup[c.as_str()]));
            points.push(node_lookup[&decl.end_b]);
            let first_segment = segment_edge.len();
            segment_edge.extend((0..points.len() - 1).map(|k| (ei, k)));
            edges.push(Edge { id: decl.id.clone(), points, first_segment });
        }

        let dart_count = 2 * segment_edge.len();
        let mut origin = vec![usize::MAX; dart_count];
        for edge in &edges {
            for k in 0..edge.points.len() - 1 {
                let s = edge.first_segment + k;
                origin[2 * s] = edge.points[k];
                origin[2 * s + 1] = edge.points[k + 1];
            }
        }

        // Translate rotation entries into darts.
        let mut rotation = vec![Vec::new(); nodes.len()];
        for (ni, node) in nodes.iter().enumerate() {
            let entries = spec.rotations.get(&node.id).map(Vec::as_slice).unwrap_or(&[]);
            match node.kind {
                NodeKind::Vertex => {
                    for r in entries {
                        let e = &edges[edge_lookup[&r.edge]];
                        let last = e.points.len() - 2;
                        rotation[ni].push(if r.forward {
                            2 * e.first_segment
                        } else {
                            2 * (e.first_segment + last) + 1
                        });
                    }
                }
                NodeKind::Crossing { .. } => {
                    // entries[i] and entries[i + 2] are the two ends of one pass.
                    let mut used = Vec::new();
                    let mut darts = [0usize; 4];
                    for i in 0..2 {
                        let e = &edges[edge_lookup[&entries[i].edge]];
                        let pos = (1..e.points.len() - 1)
                            .find(|&p| e.points[p] == ni && !used.contains(&(e.first_segment, p)))
                            .expect("crossing occurs on the chain of its edge");
                        used.push((e.first_segment, pos));
                        for j in [i, i + 2] {
                            darts[j] = if entries[j].forward {
                                2 * (e.first_segment + pos)
                            } else {
                                2 * (e.first_segment + pos - 1) + 1
                            };
                        }
                    }
                    rotation[ni].extend_from_slice(&darts);
                }
            }
        }
        let mut rot_pos = vec![usize::MAX; dart_count];
        for darts in &rotation {
            for (i, &d) in darts.iter().enumerate() {
                rot_pos[d] = i;
            }
        }

        let mut map = PlanarizedMap {
            spec,
            nodes,
            node_lookup,
            edges,
            edge_lookup,
            segment_edge,
            origin,
            rotation,
            rot_pos,
            face_of: vec![usize::MAX; dart_count],
            face_pos: vec![usize::MAX; dart_count],
            faces: Vec::new(),
            component: Vec::new(),
            component_count: 0,
        };
        map.trace_faces();
        map.label_components();
        map.check_euler()?;
        Ok(map)
    }

    fn trace_faces(&mut self) {
        for start in 0..self.origin.len() {
            if self.face_of[start] != usize::MAX {
                continue;
            }
            let id = self.faces.len();
            let mut darts = Vec::new();
            let mut d = start;
            loop {
                self.face_of[d] = id;
                self.face_pos[d] = darts.len();
                darts.push(d);
                d = self.face_next(d);
                if d == start {
                    break;
                }
            }
            let nodes = darts.iter().map(|&d| self.origin[d]).collect();
            self.faces.push(FaceWalk { id, darts, nodes });
        }
    }

    fn label_components(&mut self) {
        let n = self.nodes.len();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = count;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &d in &self.rotation[v] {
                    let w = self.origin[d ^ 1];
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        self.component = comp;
        self.component_count = count;
    }

    fn check_euler(&self) -> Result<(), DrawingError> {
        let c = self.component_count;
        let mut v = vec![0i64; c];
        let mut e = vec![0i64; c];
        let mut f = vec![0i64; c];
        for (i, _) in self.nodes.iter().enumerate() {
            v[self.component[i]] += 1;
        }
        for s in 0..self.segment_edge.len() {
            e[self.component[self.origin[2 * s]]] += 1;
        }
        for face in &self.faces {
            f[self.component[face.nodes[0]]] += 1;
        }
        for k in 0..c {
            // An isolated vertex has no darts and hence no traced face.
            if e[k] == 0 {
                continue;
            }
            let euler = v[k] - e[k] + f[k];
            if euler != 2 {
                let node = self.nodes[self.component.iter().position(|&x| x == k).unwrap()].id.to_string();
                return Err(DrawingError::NonSpherical { node, euler });
            }
        }
        Ok(())
    }

    /// Sub-drawing on the edges in `keep`; crossings with dropped edges are
    /// dissolved and faces are recomputed.
    pub fn restrict(&self, keep: &BTreeSet<EdgeId>) -> Result<PlanarizedMap, DrawingError> {
        PlanarizedMap::build(&self.spec.restricted(keep))
    }

    pub fn spec(&self) -> &DrawingSpec {
        &self.spec
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.spec.vertices.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.nodes.len() - self.spec.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn segment_count(&self) -> usize {
        self.segment_edge.len()
    }

    pub fn dart_count(&self) -> usize {
        self.origin.len()
    }

    pub fn node_id(&self, node: usize) -> &NodeId {
        &self.nodes[node].id
    }

    pub fn node_kind(&self, node: usize) -> NodeKind {
        self.nodes[node].kind
    }

    pub fn node_index(&self, id: &str) -> Option<usize> {
        self.node_lookup.get(id).copied()
    }

    pub fn edge_id(&self, edge: usize) -> &EdgeId {
        &self.edges[edge].id
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edge_lookup.get(id).copied()
    }

    /// Node indices along the edge, from `end_a` to `end_b`.
    pub fn edge_points(&self, edge: usize) -> &[usize] {
        &self.edges[edge].points
    }

    /// Number of crossings along the edge.
    pub fn edge_crossings(&self, edge: usize) -> usize {
        self.edges[edge].points.len() - 2
    }

    pub fn segment_dart(&self, edge: usize, segment: usize, forward: bool) -> usize {
        let s = self.edges[edge].first_segment + segment;
        2 * s + usize::from(!forward)
    }

    /// `(edge, segment index along the edge, forward)` for a dart.
    pub fn dart_edge(&self, dart: usize) -> (usize, usize, bool) {
        let (e, k) = self.segment_edge[dart / 2];
        (e, k, dart % 2 == 0)
    }

    pub fn origin(&self, dart: usize) -> usize {
        self.origin[dart]
    }

    pub fn head(&self, dart: usize) -> usize {
        self.origin[dart ^ 1]
    }

    pub fn twin(dart: usize) -> usize {
        dart ^ 1
    }

    /// Darts leaving `node` in counter-clockwise order.
    pub fn rotation(&self, node: usize) -> &[usize] {
        &self.rotation[node]
    }

    pub fn rot_next(&self, dart: usize) -> usize {
        let r = &self.rotation[self.origin[dart]];
        r[(self.rot_pos[dart] + 1) % r.len()]
    }

    pub fn rot_prev(&self, dart: usize) -> usize {
        let r = &self.rotation[self.origin[dart]];
        r[(self.rot_pos[dart] + r.len() - 1) % r.len()]
    }

    /// Next dart on the boundary of the face to the right of `dart`.
    pub fn face_next(&self, dart: usize) -> usize {
        self.rot_next(dart ^ 1)
    }

    pub fn faces(&self) -> &[FaceWalk] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> &FaceWalk {
        &self.faces[id]
    }

    pub fn face_of(&self, dart: usize) -> usize {
        self.face_of[dart]
    }

    /// Index of `dart` within the walk of its face.
    pub fn face_position(&self, dart: usize) -> usize {
        self.face_pos[dart]
    }

    pub fn component_of(&self, node: usize) -> usize {
        self.component[node]
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count <= 1
    }

    /// Face walks with node ids instead of indices, convenient in tests.
    pub fn face_node_ids(&self, face: usize) -> Vec<&str> {
        self.faces[face].nodes.iter().map(|&n| self.nodes[n].id.as_str()).collect()
    }
}

/// All faces of the map, each dart in exactly one walk.
pub fn faces_of(map: &PlanarizedMap) -> &[FaceWalk] {
    map.faces()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::{EdgeDecl, RotationEntry as R};

    fn cycle(n: usize) -> DrawingSpec {
        let mut spec = DrawingSpec::default();
        for i in 0..n {
            spec.vertices.push(format!("v{i}").into());
        }
        for i in 0..n {
            let j = (i + 1) % n;
            spec.edges.push(EdgeDecl::new(format!("e{i}"), format!("v{i}"), format!("v{j}")));
        }
        for i in 0..n {
            let prev = (i + n - 1) % n;
            spec.rotations.insert(
                format!("v{i}").into(),
                vec![R::forward(format!("e{i}")), R::backward(format!("e{prev}"))],
            );
        }
        spec
    }

    /// 4-cycle a b c d with both diagonals crossing at x.
    pub(crate) fn crossed_square() -> DrawingSpec {
        let mut spec = cycle(4);
        spec.edges.push(EdgeDecl::new("d02", "v0", "v2"));
        spec.edges.push(EdgeDecl::new("d13", "v1", "v3"));
        spec.chains.insert("d02".into(), vec!["x".into()]);
        spec.chains.insert("d13".into(), vec!["x".into()]);
        spec.crossings.insert("x".into(), ["d02".into(), "d13".into()]);
        // Square v0(0,0) v1(1,0) v2(1,1) v3(0,1), counter-clockwise rotations.
        spec.rotations.insert("v0".into(), vec![R::forward("e0"), R::forward("d02"), R::backward("e3")]);
        spec.rotations.insert("v1".into(), vec![R::forward("e1"), R::forward("d13"), R::backward("e0")]);
        spec.rotations.insert("v2".into(), vec![R::forward("e2"), R::backward("d02"), R::backward("e1")]);
        spec.rotations.insert("v3".into(), vec![R::backward("e2"), R::forward("e3"), R::backward("d13")]);
        spec.rotations.insert(
            "x".into(),
            vec![R::forward("d02"), R::forward("d13"), R::backward("d02"), R::backward("d13")],
        );
        spec
    }

    #[test]
    fn triangle_has_two_three_walks() {
        let map = PlanarizedMap::build(&cycle(3)).unwrap();
        assert_eq!(map.faces().len(), 2);
        assert!(map.faces().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn hexagon_cycle_faces() {
        let map = PlanarizedMap::build(&cycle(6)).unwrap();
        assert_eq!(faces_of(&map).iter().map(FaceWalk::len).collect::<Vec<_>>(), vec![6, 6]);
    }

    #[test]
    fn single_crossing_planarization() {
        let map = PlanarizedMap::build(&crossed_square()).unwrap();
        assert_eq!(map.node_count(), 5);
        assert_eq!(map.segment_count(), 8);
        assert_eq!(map.faces().len(), 5);
        let total: usize = map.faces().iter().map(FaceWalk::len).sum();
        assert_eq!(total, 2 * map.segment_count());
        let x = map.node_index("x").unwrap();
        assert_eq!(map.rotation(x).len(), 4);
    }

    #[test]
    fn restrict_dissolves_crossing() {
        let map = PlanarizedMap::build(&crossed_square()).unwrap();
        let keep: BTreeSet<EdgeId> = ["e0", "e1", "e2", "e3", "d02"].into_iter().map(EdgeId::from).collect();
        let sub = map.restrict(&keep).unwrap();
        assert_eq!(sub.crossing_count(), 0);
        assert_eq!(sub.node_count(), 4);
        assert_eq!(sub.segment_count(), 5);
        assert_eq!(sub.faces().len(), 3);
        assert!(sub.faces().iter().all(|f| f.len() == 3 || f.len() == 4));
    }

    #[test]
    fn restrict_to_all_is_identity() {
        let map = PlanarizedMap::build(&crossed_square()).unwrap();
        let all = map.spec().edges.iter().map(|e| e.id.clone()).collect();
        let same = map.restrict(&all).unwrap();
        assert_eq!(same.spec(), map.spec());
        assert_eq!(same.faces(), map.faces());
    }

    #[test]
    fn twisted_rotation_is_not_spherical() {
        let mut spec = crossed_square();
        // Swapping two ends at a vertex puts the drawing on a torus.
        spec.rotations.insert("v0".into(), vec![R::forward("d02"), R::forward("e0"), R::backward("e3")]);
        assert!(matches!(PlanarizedMap::build(&spec), Err(DrawingError::NonSpherical { .. })));
    }

    #[test]
    fn non_alternating_crossing_rejected() {
        let mut spec = crossed_square();
        spec.rotations.insert(
            "x".into(),
            vec![R::forward("d02"), R::backward("d02"), R::forward("d13"), R::backward("d13")],
        );
        assert!(matches!(PlanarizedMap::build(&spec), Err(DrawingError::InvalidRotation { .. })));
    }

    #[test]
    fn disconnected_components_checked_separately() {
        let mut a = cycle(3);
        let b = cycle(4);
        for v in &b.vertices {
            a.vertices.push(format!("w{}", v).into());
        }
        for e in &b.edges {
            a.edges.push(EdgeDecl::new(format!("f{}", e.id), format!("w{}", e.end_a), format!("w{}", e.end_b)));
        }
        for (v, rot) in &b.rotations {
            a.rotations.insert(
                format!("w{v}").into(),
                rot.iter().map(|r| R { edge: format!("f{}", r.edge).into(), forward: r.forward }).collect(),
            );
        }
        a.vertices.push("lonely".into());
        let map = PlanarizedMap::build(&a).unwrap();
        assert_eq!(map.component_count(), 3);
        assert_eq!(map.faces().len(), 4);
    }
}
