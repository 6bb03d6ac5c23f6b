//! Counting audit of a decomposed drawing: stick caps per triangle, the
//! triangle association, the density ledger against the bound table, and
//! the structural predicates on larger faces.

mod associate;
mod bounds;
mod ledger;
mod predicates;

pub use associate::{associate, AssociateError, Association, Diagnosis, DiagnosisKind, Reassignment};
pub use bounds::{general_bound, k_bound, k_bound_exact, BoundEntry, BoundError, BoundTable, GENERAL_COEFFICIENT};
pub use ledger::{DensityLedger, LedgerInputs, LedgerStep, Relation, Verdict};
pub use predicates::{structural_predicates, Outcome, Predicate, PredicateReport, PredicateResult};

use serde::Serialize;

use crate::scalar::Scalar;
use crate::segments::{FaceProfile, Segmentation};
use crate::skeleton::SkeletonDecomposition;

/// Which chain to run. The k = 4 chain rests on an unproven premise.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum AuditK {
    #[default]
    #[serde(rename = "3")]
    Three,
    #[serde(rename = "4")]
    Four,
}

impl AuditK {
    pub fn k(self) -> usize {
        match self {
            AuditK::Three => 3,
            AuditK::Four => 4,
        }
    }

    pub fn from_k(k: usize) -> Option<Self> {
        match k {
            3 => Some(AuditK::Three),
            4 => Some(AuditK::Four),
            _ => None,
        }
    }
}

/// Triangular faces hosting more than `cap` sticks.
pub fn stick_cap_check(profiles: &[FaceProfile], cap: usize) -> Vec<usize> {
    profiles.iter().filter(|p| p.is_triangle() && p.stick_count() > cap).map(|p| p.face).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Scalar"))]
pub struct AuditReport<T: Scalar> {
    pub k: usize,
    pub n: usize,
    pub edges: usize,
    pub skeleton_edges: usize,
    pub connected: bool,
    pub triangulated: bool,
    /// Triangles by stick count, index = number of sticks.
    pub counts: Vec<usize>,
    pub triangles: usize,
    pub sticks: usize,
    /// `t_p = 2n - 4`, checked when the skeleton is triangulated.
    pub triangle_count_ok: Option<bool>,
    /// `t1 + 2t2 + 3t3 (+ 4t4) = 2(|E| - |E_p|)`, checked when triangulated.
    pub stick_identity_ok: Option<bool>,
    pub over_cap: Vec<usize>,
    pub association: Option<Association>,
    pub ledger: Option<DensityLedger<T>>,
    #[serde(serialize_with = "ledger::as_display")]
    pub bound: T,
    pub bound_floor: i64,
    pub verdict: Verdict,
    pub predicates: PredicateReport,
    pub notes: Vec<String>,
}

impl<T: Scalar> AuditReport<T> {
    /// Rule violations as opposed to diagnoses: too many edges, or a
    /// triangle above the stick cap.
    pub fn is_violation(&self) -> bool {
        self.verdict == Verdict::Exceeds || !self.over_cap.is_empty()
    }
}

pub fn density_report<T: Scalar>(
    dec: &SkeletonDecomposition<'_>,
    seg: &Segmentation,
    profiles: &[FaceProfile],
    k: AuditK,
) -> Result<AuditReport<T>, BoundError> {
    let map = dec.map;
    let n = map.vertex_count();
    let edges = map.edge_count();
    let skeleton_edges = dec.kept.len();
    let connected = dec.is_connected();
    let triangulated = dec.is_triangulated();
    let sticks = seg.sticks().count();
    let mut notes = Vec::new();

    let bound = k_bound_exact::<T>(n, k.k())?;
    let verdict = Verdict::compare(T::from_count(edges), bound);

    let max_sticks = profiles.iter().filter(|p| p.is_triangle()).map(|p| p.stick_count()).max().unwrap_or(0);
    let mut counts = vec![0; max_sticks.max(k.k()) + 1];
    for p in profiles.iter().filter(|p| p.is_triangle()) {
        counts[p.stick_count()] += 1;
    }
    let triangles = counts.iter().sum();
    let over_cap = stick_cap_check(profiles, k.k());

    let (triangle_count_ok, stick_identity_ok) = if triangulated {
        let weighted: usize = counts.iter().enumerate().map(|(i, t)| i * t).sum();
        (Some(n >= 3 && triangles == 2 * n - 4), Some(weighted == 2 * (edges - skeleton_edges)))
    } else {
        (None, None)
    };

    let association = match associate(profiles) {
        Ok(a) => Some(a),
        Err(e) => {
            notes.push(format!("association skipped: {e}"));
            None
        }
    };
    if let Some(a) = &association {
        if !a.is_complete() {
            notes.push(format!("association left {} diagnoses", a.diagnoses.len()));
        }
    }

    let ledger = if !connected || !triangulated {
        notes.push("ledger skipped: skeleton is not a connected triangulation".to_owned());
        None
    } else if !over_cap.is_empty() {
        notes.push(format!("ledger skipped: triangles {over_cap:?} exceed the stick cap"));
        None
    } else {
        let inputs = LedgerInputs { n, edges, skeleton_edges, counts: counts.clone(), triangles };
        Some(match k {
            AuditK::Three => DensityLedger::three(&inputs),
            AuditK::Four => DensityLedger::four(&inputs),
        })
    };

    Ok(AuditReport {
        k: k.k(),
        n,
        edges,
        skeleton_edges,
        connected,
        triangulated,
        counts,
        triangles,
        sticks,
        triangle_count_ok,
        stick_identity_ok,
        over_cap,
        association,
        ledger,
        bound,
        bound_floor: bound.floor_to_i64(),
        verdict,
        predicates: structural_predicates(dec, seg, profiles),
        notes,
    })
}
