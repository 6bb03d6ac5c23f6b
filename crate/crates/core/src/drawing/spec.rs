use std::borrow::Borrow;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use super::DrawingError;

macro_rules! string_id {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
        #[serde(transparent)]
        pub struct $name(pub String);

        impl $name {
            pub fn new(id: impl Into<String>) -> Self {
                Self(id.into())
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl Borrow<str> for $name {
            fn borrow(&self) -> &str {
                &self.0
            }
        }

        impl From<&str> for $name {
            fn from(s: &str) -> Self {
                Self(s.to_owned())
            }
        }

        impl From<String> for $name {
            fn from(s: String) -> Self {
                Self(s)
            }
        }

        impl<'de> Deserialize<'de> for $name {
            fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
                deserializer.deserialize_any(IdVisitor).map($name)
            }
        }
    };
}

/// Accepts identifiers written either as strings or as integers.
struct IdVisitor;

impl<'de> Visitor<'de> for IdVisitor {
    type Value = String;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a string or integer identifier")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<String, E> {
        Ok(v.to_owned())
    }

    fn visit_string<E: de::Error>(self, v: String) -> Result<String, E> {
        Ok(v)
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<String, E> {
        Ok(v.to_string())
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<String, E> {
        Ok(v.to_string())
    }
}

string_id!(
    /// Identifier of a node: a real vertex or a crossing point.
    NodeId
);
string_id!(EdgeId);
string_id!(CrossingId);

impl From<&CrossingId> for NodeId {
    fn from(c: &CrossingId) -> Self {
        NodeId(c.0.clone())
    }
}

/// One entry of a rotation: the end of a segment of `edge` that touches the
/// node. `forward` means the segment leads towards `end_b` of the edge.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RotationEntry {
    pub edge: EdgeId,
    pub forward: bool,
}

impl RotationEntry {
    pub fn forward(edge: impl Into<EdgeId>) -> Self {
        Self { edge: edge.into(), forward: true }
    }

    pub fn backward(edge: impl Into<EdgeId>) -> Self {
        Self { edge: edge.into(), forward: false }
    }
}

impl fmt::Display for RotationEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.forward { '+' } else { '-' }, self.edge)
    }
}

impl FromStr for RotationEntry {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let forward = match s.chars().next() {
            Some('+') => true,
            Some('-') => false,
            _ => return Err(format!("rotation entry `{s}` must start with `+` or `-`")),
        };
        let edge = &s[1..];
        if edge.is_empty() {
            return Err(format!("rotation entry `{s}` names no edge"));
        }
        Ok(Self { edge: EdgeId::from(edge), forward })
    }
}

impl Serialize for RotationEntry {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RotationEntry {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDecl {
    pub id: EdgeId,
    pub end_a: NodeId,
    pub end_b: NodeId,
}

impl EdgeDecl {
    pub fn new(id: impl Into<EdgeId>, end_a: impl Into<NodeId>, end_b: impl Into<NodeId>) -> Self {
        Self { id: id.into(), end_a: end_a.into(), end_b: end_b.into() }
    }

    pub fn is_loop(&self) -> bool {
        self.end_a == self.end_b
    }
}

/// A topological drawing given combinatorially.
///
/// `chains` lists, for every edge, the crossings met when walking from
/// `end_a` to `end_b`. `rotations` gives the counter-clockwise cyclic order of
/// segment ends around every node, real vertices and crossings alike. Maps are
/// ordered so that serialization is byte-stable.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrawingSpec {
    pub vertices: Vec<NodeId>,
    pub edges: Vec<EdgeDecl>,
    #[serde(default)]
    pub chains: BTreeMap<EdgeId, Vec<CrossingId>>,
    #[serde(default)]
    pub crossings: BTreeMap<CrossingId, [EdgeId; 2]>,
    #[serde(default)]
    pub rotations: BTreeMap<NodeId, Vec<RotationEntry>>,
    /// Face id used as the outer face when laying out figures.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer_face_hint: Option<usize>,
}

impl DrawingSpec {
    pub fn chain(&self, edge: &EdgeId) -> &[CrossingId] {
        self.chains.get(edge).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Fills in an empty chain for every edge that has none.
    pub fn fill_empty_chains(&mut self) {
        for e in &self.edges {
            self.chains.entry(e.id.clone()).or_default();
        }
    }

    /// Drops every edge outside `keep` together with the crossings it took
    /// part in. Crossings between kept edges survive.
    pub fn restricted(&self, keep: &BTreeSet<EdgeId>) -> DrawingSpec {
        let dissolved: BTreeSet<&str> = self
            .crossings
            .iter()
            .filter(|(_, pair)| !keep.contains(&pair[0]) || !keep.contains(&pair[1]))
            .map(|(c, _)| c.as_str())
            .collect();
        let edges: Vec<EdgeDecl> = self.edges.iter().filter(|e| keep.contains(&e.id)).cloned().collect();
        let chains = self
            .chains
            .iter()
            .filter(|(e, _)| keep.contains(*e))
            .map(|(e, chain)| {
                (e.clone(), chain.iter().filter(|c| !dissolved.contains(c.as_str())).cloned().collect())
            })
            .collect();
        let crossings = self
            .crossings
            .iter()
            .filter(|(c, _)| !dissolved.contains(c.as_str()))
            .map(|(c, p)| (c.clone(), p.clone()))
            .collect();
        let rotations = self
            .rotations
            .iter()
            .filter(|(node, _)| !dissolved.contains(node.as_str()))
            .map(|(node, entries)| {
                (node.clone(), entries.iter().filter(|r| keep.contains(&r.edge)).cloned().collect())
            })
            .collect();
        let outer_face_hint = if edges.len() == self.edges.len() { self.outer_face_hint } else { None };
        DrawingSpec {
            vertices: self.vertices.clone(),
            edges,
            chains,
            crossings,
            rotations,
            outer_face_hint,
        }
    }

    /// Checks the combinatorial invariants of a drawing. Euler's formula is
    /// checked later, when the map is built.
    pub fn check(&self) -> Result<(), DrawingError> {
        let mut vertex_set = BTreeSet::new();
        for v in &self.vertices {
            if !vertex_set.insert(v.as_str()) {
                return Err(DrawingError::DuplicateId { kind: "vertex", id: v.to_string() });
            }
        }
        let mut edge_set = BTreeSet::new();
        for e in &self.edges {
            if !edge_set.insert(e.id.as_str()) {
                return Err(DrawingError::DuplicateId { kind: "edge", id: e.id.to_string() });
            }
            for end in [&e.end_a, &e.end_b] {
                if !vertex_set.contains(end.as_str()) {
                    return Err(DrawingError::UnknownVertex { edge: e.id.to_string(), vertex: end.to_string() });
                }
            }
        }
        for (c, pair) in &self.crossings {
            if vertex_set.contains(c.as_str()) {
                return Err(DrawingError::DuplicateId { kind: "crossing/vertex", id: c.to_string() });
            }
            for e in pair {
                if !edge_set.contains(e.as_str()) {
                    return Err(DrawingError::UnknownEdge { context: format!("crossing {c}"), edge: e.to_string() });
                }
            }
        }

        // Each crossing must be met exactly twice, once per listed edge.
        let mut seen: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
        for (e, chain) in &self.chains {
            if !edge_set.contains(e.as_str()) {
                return Err(DrawingError::UnknownEdge { context: "chains".into(), edge: e.to_string() });
            }
            for c in chain {
                if !self.crossings.contains_key(c.as_str()) {
                    return Err(DrawingError::DanglingCrossing {
                        crossing: c.to_string(),
                        reason: format!("listed in the chain of {e} but not declared"),
                    });
                }
                seen.entry(c.as_str()).or_default().push(e.as_str());
            }
        }
        for (c, pair) in &self.crossings {
            let mut found = seen.remove(c.as_str()).unwrap_or_default();
            if found.len() != 2 {
                return Err(DrawingError::DanglingCrossing {
                    crossing: c.to_string(),
                    reason: format!("referenced by {} chain positions, expected 2", found.len()),
                });
            }
            let mut declared = vec![pair[0].as_str(), pair[1].as_str()];
            found.sort_unstable();
            declared.sort_unstable();
            if found != declared {
                return Err(DrawingError::DanglingCrossing {
                    crossing: c.to_string(),
                    reason: format!("declared on {declared:?} but met on {found:?}"),
                });
            }
        }

        for node in self.rotations.keys() {
            if !vertex_set.contains(node.as_str()) && !self.crossings.contains_key(node.as_str()) {
                return Err(DrawingError::UnknownNode(node.to_string()));
            }
        }
        let empty = Vec::new();
        let mut expected: BTreeMap<&str, Vec<RotationEntry>> =
            self.vertices.iter().map(|v| (v.as_str(), Vec::new())).collect();
        for e in &self.edges {
            expected.get_mut(e.end_a.as_str()).unwrap().push(RotationEntry::forward(e.id.clone()));
            expected.get_mut(e.end_b.as_str()).unwrap().push(RotationEntry::backward(e.id.clone()));
        }
        for (v, mut want) in expected {
            let mut got = self.rotations.get(v).unwrap_or(&empty).clone();
            want.sort();
            got.sort();
            if want != got {
                return Err(DrawingError::InvalidRotation {
                    node: v.to_string(),
                    reason: "must list exactly the segment ends of the incident edges".into(),
                });
            }
        }
        for (c, pair) in &self.crossings {
            let rot = self.rotations.get(c.as_str()).unwrap_or(&empty);
            check_crossing_rotation(c, pair, rot)?;
        }
        Ok(())
    }
}

fn check_crossing_rotation(c: &CrossingId, pair: &[EdgeId; 2], rot: &[RotationEntry]) -> Result<(), DrawingError> {
    let bad = |reason: &str| DrawingError::InvalidRotation { node: c.to_string(), reason: reason.into() };
    if rot.len() != 4 {
        return Err(bad("a crossing has exactly four segment ends"));
    }
    let mut want = vec![
        RotationEntry::forward(pair[0].clone()),
        RotationEntry::backward(pair[0].clone()),
        RotationEntry::forward(pair[1].clone()),
        RotationEntry::backward(pair[1].clone()),
    ];
    let mut got = rot.to_vec();
    want.sort();
    got.sort();
    if want != got {
        return Err(bad("entries must be both ends of both crossing edges"));
    }
    // Opposite positions carry the two ends of the same pass.
    for i in 0..2 {
        let (x, y) = (&rot[i], &rot[i + 2]);
        if x.edge != y.edge || x.forward == y.forward {
            return Err(bad("the two edges must alternate around a crossing"));
        }
    }
    Ok(())
}
