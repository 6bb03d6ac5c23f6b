//! Topological drawings as planarized combinatorial maps.
//!
//! A drawing is stored as a [`DrawingSpec`] (the interchange form) and
//! compiled into a [`PlanarizedMap`], where every crossing becomes a node of
//! degree four and every edge becomes a chain of segments.

mod map;
mod spec;

pub use map::{faces_of, FaceWalk, NodeKind, PlanarizedMap};
pub use spec::{CrossingId, DrawingSpec, EdgeDecl, EdgeId, NodeId, RotationEntry};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DrawingError {
    #[error("duplicate {kind} id `{id}`")]
    DuplicateId { kind: &'static str, id: String },
    #[error("edge `{edge}` references unknown vertex `{vertex}`")]
    UnknownVertex { edge: String, vertex: String },
    #[error("{context}: unknown edge `{edge}`")]
    UnknownEdge { context: String, edge: String },
    #[error("rotation given for unknown node `{0}`")]
    UnknownNode(String),
    #[error("invalid rotation at `{node}`: {reason}")]
    InvalidRotation { node: String, reason: String },
    #[error("dangling crossing `{crossing}`: {reason}")]
    DanglingCrossing { crossing: String, reason: String },
    #[error("rotation system is not spherical: component containing `{node}` has V - E + F = {euler}")]
    NonSpherical { node: String, euler: i64 },
}
