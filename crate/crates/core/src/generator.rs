//! Drawings of 3-planar graphs with exactly `11n/2 - 11` edges.
//!
//! The frame is a generalized theta graph: poles `u` and `w` joined by
//! `m = (n - 2)/2` paths `u - a_i - b_i - w`, so every face is a hexagon.
//! Each hexagon receives the same 8 chords, drawn as in a convex hexagon.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::drawing::{CrossingId, DrawingError, DrawingSpec, EdgeDecl, EdgeId, FaceWalk, NodeId, PlanarizedMap, RotationEntry};
use crate::straight_line::straight_line_drawing;

/// Environment variable that turns on the divisible-by-4 requirement.
pub const MODE_ENV: &str = "CROSSING_LEDGER_MODE";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GeneratorOptions {
    /// Require `n - 2` divisible by 4, as in the original construction.
    pub strict_paper: bool,
}

impl GeneratorOptions {
    /// Options with strictness also switched on by `CROSSING_LEDGER_MODE=strict-paper`.
    pub fn from_env(strict_paper: bool) -> Self {
        let env = std::env::var(MODE_ENV).is_ok_and(|v| v == "strict-paper");
        Self { strict_paper: strict_paper || env }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("bad n = {n}: {reason}")]
    BadN { n: usize, reason: &'static str },
    #[error("face {0} is not a hexagon on six distinct vertices")]
    NotHexagon(usize),
    #[error(transparent)]
    Drawing(#[from] DrawingError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameSpec {
    pub n: usize,
    pub m: usize,
    pub poles: (NodeId, NodeId),
    /// `(a_i, b_i)` for each path, in rotation order around `u`.
    pub paths: Vec<(NodeId, NodeId)>,
}

impl FrameSpec {
    pub fn new(n: usize, options: GeneratorOptions) -> Result<Self, GeneratorError> {
        if n < 6 {
            return Err(GeneratorError::BadN { n, reason: "need n >= 6" });
        }
        if n % 2 != 0 {
            return Err(GeneratorError::BadN { n, reason: "n must be even" });
        }
        if options.strict_paper && (n - 2) % 4 != 0 {
            return Err(GeneratorError::BadN { n, reason: "strict mode needs n - 2 divisible by 4" });
        }
        let m = (n - 2) / 2;
        let paths = (1..=m).map(|i| (NodeId::new(format!("a{i:02}")), NodeId::new(format!("b{i:02}")))).collect();
        Ok(Self { n, m, poles: (NodeId::from("u"), NodeId::from("w")), paths })
    }

    fn path_edge(i: usize, k: usize) -> EdgeId {
        EdgeId::new(format!("p{i:02}.{k}"))
    }

    pub fn to_spec(&self) -> DrawingSpec {
        let (u, w) = self.poles.clone();
        let mut spec = DrawingSpec { vertices: vec![u.clone(), w.clone()], ..Default::default() };
        for (i, (a, b)) in self.paths.iter().enumerate() {
            let i = i + 1;
            spec.vertices.push(a.clone());
            spec.vertices.push(b.clone());
            spec.edges.push(EdgeDecl::new(Self::path_edge(i, 0), u.clone(), a.clone()));
            spec.edges.push(EdgeDecl::new(Self::path_edge(i, 1), a.clone(), b.clone()));
            spec.edges.push(EdgeDecl::new(Self::path_edge(i, 2), b.clone(), w.clone()));
            spec.rotations.insert(
                a.clone(),
                vec![RotationEntry::backward(Self::path_edge(i, 0)), RotationEntry::forward(Self::path_edge(i, 1))],
            );
            spec.rotations.insert(
                b.clone(),
                vec![RotationEntry::backward(Self::path_edge(i, 1)), RotationEntry::forward(Self::path_edge(i, 2))],
            );
        }
        spec.rotations.insert(u, (1..=self.m).map(|i| RotationEntry::forward(Self::path_edge(i, 0))).collect());
        spec.rotations.insert(w, (1..=self.m).rev().map(|i| RotationEntry::backward(Self::path_edge(i, 2))).collect());
        spec.fill_empty_chains();
        spec
    }
}

pub fn theta_frame(n: usize) -> Result<DrawingSpec, GeneratorError> {
    theta_frame_with(n, GeneratorOptions::default())
}

pub fn theta_frame_with(n: usize, options: GeneratorOptions) -> Result<DrawingSpec, GeneratorError> {
    Ok(FrameSpec::new(n, options)?.to_spec())
}

/// Chord names and corner pairs (0-based) of the gadget.
pub const GADGET_CHORDS: [(&str, usize, usize); 8] = [
    ("a1", 0, 2),
    ("a2", 2, 4),
    ("a3", 0, 4),
    ("b1", 1, 3),
    ("b2", 3, 5),
    ("b3", 1, 5),
    ("c1", 0, 3),
    ("c2", 1, 4),
];

/// Corners of an irregular convex hexagon, listed clockwise. Irregular so
/// that the long chords do not meet in a common point.
const TEMPLATE_POINTS: [(f64, f64); 6] = [(0.0, 10.0), (8.5, 5.2), (9.0, -4.8), (0.5, -10.0), (-8.8, -5.5), (-9.2, 4.6)];

/// The gadget read off the straight-line template, in chord indices.
struct Template {
    /// Crossings as chord index pairs.
    crossings: Vec<[usize; 2]>,
    /// Crossing indices along each chord, from its first corner.
    chains: Vec<Vec<usize>>,
    /// Counter-clockwise `(chord, forward)` entries around each crossing.
    crossing_rotations: Vec<Vec<(usize, bool)>>,
    /// Chord entries inside each corner, counter-clockwise from the side to
    /// the previous corner.
    corners: Vec<Vec<(usize, bool)>>,
}

impl Template {
    fn build() -> Self {
        let names = ["t0", "t1", "t2", "t3", "t4", "t5"];
        let mut edges: Vec<(&str, usize, usize)> = GADGET_CHORDS.to_vec();
        let sides = ["s0", "s1", "s2", "s3", "s4", "s5"];
        edges.extend((0..6).map(|i| (sides[i], i, (i + 1) % 6)));
        let spec = straight_line_drawing(&names, &TEMPLATE_POINTS, &edges);

        let chord_index = |e: &EdgeId| GADGET_CHORDS.iter().position(|c| c.0 == e.as_str());
        let crossing_ids: Vec<&CrossingId> = spec.crossings.keys().collect();
        let crossing_index = |c: &CrossingId| crossing_ids.iter().position(|x| *x == c).unwrap();
        let crossings = spec
            .crossings
            .values()
            .map(|[e, f]| [chord_index(e).expect("sides are uncrossed"), chord_index(f).expect("sides are uncrossed")])
            .collect();
        let chains = GADGET_CHORDS.iter().map(|c| spec.chain(&EdgeId::from(c.0)).iter().map(crossing_index).collect()).collect();
        let entry = |r: &RotationEntry| (chord_index(&r.edge).unwrap(), r.forward);
        let crossing_rotations = crossing_ids
            .iter()
            .map(|c| spec.rotations[&NodeId::from(*c)].iter().map(entry).collect())
            .collect();
        let corners = (0..6)
            .map(|i| {
                let rot = &spec.rotations[&NodeId::from(names[i])];
                // Side towards the previous corner is s_{i-1}, entered backwards.
                let prev = RotationEntry::backward(sides[(i + 5) % 6]);
                let start = rot.iter().position(|r| *r == prev).unwrap();
                (1..rot.len())
                    .map(|k| &rot[(start + k) % rot.len()])
                    .take_while(|r| chord_index(&r.edge).is_some())
                    .map(entry)
                    .collect()
            })
            .collect();
        Self { crossings, chains, crossing_rotations, corners }
    }
}

/// The 8 chords of one hexagonal face with their crossings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HexGadget {
    pub corners: [NodeId; 6],
    pub edges: Vec<EdgeDecl>,
    pub chains: BTreeMap<EdgeId, Vec<CrossingId>>,
    pub crossings: BTreeMap<CrossingId, [EdgeId; 2]>,
    pub crossing_rotations: BTreeMap<NodeId, Vec<RotationEntry>>,
    /// Per corner: the boundary entry to insert before and the chord
    /// entries that go there.
    pub corner_inserts: Vec<(NodeId, RotationEntry, Vec<RotationEntry>)>,
}

impl HexGadget {
    pub fn crossing_counts(&self) -> BTreeMap<EdgeId, usize> {
        self.chains.iter().map(|(e, c)| (e.clone(), c.len())).collect()
    }

    /// Adds the chords to a drawing that contains the hexagon.
    pub fn apply(&self, spec: &mut DrawingSpec) {
        spec.edges.extend(self.edges.iter().cloned());
        spec.chains.extend(self.chains.clone());
        spec.crossings.extend(self.crossings.clone());
        spec.rotations.extend(self.crossing_rotations.clone());
        for (corner, before, entries) in &self.corner_inserts {
            let rot = spec.rotations.get_mut(corner).expect("corner has a rotation");
            let at = rot.iter().position(|r| r == before).expect("boundary entry present");
            rot.splice(at..at, entries.iter().cloned());
        }
    }
}

fn gadget_from(template: &Template, map: &PlanarizedMap, face: &FaceWalk, label: &str) -> Result<HexGadget, GeneratorError> {
    let distinct: std::collections::BTreeSet<usize> = face.nodes.iter().copied().collect();
    if face.len() != 6 || distinct.len() != 6 || face.nodes.iter().any(|&v| v >= map.vertex_count()) {
        return Err(GeneratorError::NotHexagon(face.id));
    }
    let corners: [NodeId; 6] = std::array::from_fn(|i| map.node_id(face.nodes[i]).clone());
    let edge_id = |c: usize| EdgeId::new(format!("{label}.{}", GADGET_CHORDS[c].0));
    let crossing_id = |t: usize| CrossingId::new(format!("x{}.{t}", label.trim_start_matches('h')));
    let entry = |&(c, forward): &(usize, bool)| RotationEntry { edge: edge_id(c), forward };

    let edges = GADGET_CHORDS
        .iter()
        .enumerate()
        .map(|(c, &(_, i, j))| EdgeDecl::new(edge_id(c), corners[i].clone(), corners[j].clone()))
        .collect();
    let chains = template
        .chains
        .iter()
        .enumerate()
        .map(|(c, chain)| (edge_id(c), chain.iter().map(|&t| crossing_id(t)).collect()))
        .collect();
    let crossings = template.crossings.iter().enumerate().map(|(t, &[c, d])| (crossing_id(t), [edge_id(c), edge_id(d)])).collect();
    let crossing_rotations = template
        .crossing_rotations
        .iter()
        .enumerate()
        .map(|(t, rot)| (NodeId::from(&crossing_id(t)), rot.iter().map(entry).collect()))
        .collect();
    let corner_inserts = (0..6)
        .map(|i| {
            let (e, _, forward) = map.dart_edge(face.darts[i]);
            let before = RotationEntry { edge: map.edge_id(e).clone(), forward };
            (corners[i].clone(), before, template.corners[i].iter().map(entry).collect())
        })
        .collect();
    Ok(HexGadget { corners, edges, chains, crossings, crossing_rotations, corner_inserts })
}

/// Gadget for a hexagonal face of `map`; corner `i` is `face.nodes[i]` and
/// chord ids are prefixed with `label`.
pub fn hexagon_gadget(map: &PlanarizedMap, face: &FaceWalk, label: &str) -> Result<HexGadget, GeneratorError> {
    gadget_from(&Template::build(), map, face, label)
}

pub fn generate_optimal(n: usize) -> Result<DrawingSpec, GeneratorError> {
    generate_optimal_with(n, GeneratorOptions::default())
}

pub fn generate_optimal_with(n: usize, options: GeneratorOptions) -> Result<DrawingSpec, GeneratorError> {
    let frame = FrameSpec::new(n, options)?;
    let spec = frame.to_spec();
    let map = PlanarizedMap::build(&spec)?;
    let template = Template::build();
    let u = map.node_index("u").expect("pole u");
    let mut out = spec.clone();
    for face in map.faces() {
        // Rotate the walk to start at u; the next corner a_i names the face.
        let start = face.nodes.iter().position(|&v| v == u).ok_or(GeneratorError::NotHexagon(face.id))?;
        let rotate = |v: &Vec<usize>| -> Vec<usize> { (0..v.len()).map(|k| v[(start + k) % v.len()]).collect() };
        let walk = FaceWalk { id: face.id, darts: rotate(&face.darts), nodes: rotate(&face.nodes) };
        let a = map.node_id(walk.nodes[1]).as_str();
        let label = format!("h{}", a.trim_start_matches('a'));
        gadget_from(&template, &map, &walk, &label)?.apply(&mut out);
    }
    Ok(out)
}
