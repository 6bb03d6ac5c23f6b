//! Topological drawings of k-planar graphs and the counting argument behind
//! the `11n/2 - 11` edge bound for 3-planar graphs.
//!
//! A [`DrawingSpec`] is planarized into a [`PlanarizedMap`]. From there the
//! crate validates k-planarity, extracts a maximum crossing-free skeleton,
//! cuts the remaining edges into sticks and middle parts, and audits the
//! edge count against the bound table. [`generate_optimal`] builds drawings
//! that meet the 3-planar bound exactly.
//!
//! Counting code is generic over [`Scalar`] and layout code over [`Coord`];
//! the aliases below fix the usual choices.

pub mod audit;
pub mod drawing;
pub mod generator;
pub mod io;
pub mod scalar;
pub mod segments;
pub mod skeleton;
pub mod straight_line;
pub mod validate;

#[cfg(test)]
mod testing;

pub use audit::{density_report, k_bound, AuditK, AuditReport, DensityLedger, Verdict};
pub use drawing::{DrawingError, DrawingSpec, FaceWalk, PlanarizedMap};
pub use generator::{generate_optimal, theta_frame};
pub use scalar::{Coord, Scalar};
pub use segments::{decompose, face_profiles, FaceProfile, SegmentPiece, Segmentation};
pub use skeleton::{extract_skeleton, SkeletonDecomposition, SkeletonMode};
pub use validate::{check_homotopy, check_k_planar, check_sanity, ValidationReport};

/// Exact rational arithmetic for ledgers and bounds.
pub type Exact = num_rational::Rational64;
pub type ExactLedger = DensityLedger<Exact>;
pub type ExactAuditReport = AuditReport<Exact>;
pub type FloatLedger = DensityLedger<f64>;
pub type Layout64 = io::Layout<f64>;
