//! Plain-text versions of the reports.

use std::fmt::Write;

use crossing_ledger::audit::{AuditReport, Relation};
use crossing_ledger::segments::{Anchor, FaceProfile, Segmentation};
use crossing_ledger::skeleton::SkeletonDecomposition;
use crossing_ledger::validate::ValidationReport;
use crossing_ledger::Exact;

pub fn validation(r: &ValidationReport) -> String {
    let mut out = String::new();
    let k = r.k.map_or_else(|| "-".to_owned(), |k| k.to_string());
    writeln!(out, "validation (k = {k}): {}", if r.is_valid() { "ok" } else { "FAILED" }).unwrap();
    writeln!(out, "  max crossings per edge: {}", r.max_crossings()).unwrap();
    for v in &r.violations {
        let edges: Vec<&str> = v.edges.iter().map(|e| e.as_str()).collect();
        writeln!(out, "  violation {:?} on {}: {}", v.rule, edges.join(", "), v.detail).unwrap();
    }
    for h in &r.homotopy {
        let edges: Vec<&str> = h.edges.iter().map(|e| e.as_str()).collect();
        writeln!(out, "  homotopic: {} (vertices per region {:?})", edges.join(", "), h.region_vertices).unwrap();
    }
    for w in &r.warnings {
        writeln!(out, "  warning: {w}").unwrap();
    }
    out
}

pub fn skeleton(dec: &SkeletonDecomposition<'_>) -> String {
    let mut out = String::new();
    let join = |set: &std::collections::BTreeSet<crossing_ledger::drawing::EdgeId>| {
        set.iter().map(|e| e.as_str()).collect::<Vec<_>>().join(" ")
    };
    writeln!(
        out,
        "skeleton ({:?}{}): {} of {} edges kept",
        dec.mode,
        if dec.optimal { ", maximum" } else { "" },
        dec.kept.len(),
        dec.map.edge_count()
    )
    .unwrap();
    writeln!(out, "  kept: {}", join(&dec.kept)).unwrap();
    writeln!(out, "  residual: {}", join(&dec.residual)).unwrap();
    writeln!(
        out,
        "  faces: {} ({}connected, {}triangulated)",
        dec.faces().len(),
        if dec.is_connected() { "" } else { "not " },
        if dec.is_triangulated() { "" } else { "not " }
    )
    .unwrap();
    out
}

pub fn segments(dec: &SkeletonDecomposition<'_>, seg: &Segmentation, profiles: &[FaceProfile]) -> String {
    let mut out = String::new();
    writeln!(out, "pieces: {} sticks, {} middle parts", seg.sticks().count(), seg.middles().count()).unwrap();
    for p in &seg.pieces {
        let what = match &p.anchor {
            Anchor::Stick { vertex, crossed, class, .. } => format!("stick from {vertex} across {crossed}, {class:?}"),
            Anchor::Middle { crossed, class, .. } => format!("middle across {} and {}, {class:?}", crossed[0], crossed[1]),
        };
        writeln!(out, "  {} #{} in face {}: {what}, {} inner crossings", p.edge, p.index, p.face, p.intra_face_crossings())
            .unwrap();
    }
    for f in profiles {
        let walk = dec.skeleton.face_node_ids(f.face).join(" ");
        writeln!(out, "face {} [{walk}]: type {:?}, {} middles", f.face, f.tau, f.middles.len()).unwrap();
    }
    for w in &seg.warnings {
        writeln!(out, "  warning: {w}").unwrap();
    }
    out
}

pub fn audit(r: &AuditReport<Exact>) -> String {
    let mut out = String::new();
    writeln!(out, "audit (k = {}): n = {}, |E| = {}, |E_p| = {}", r.k, r.n, r.edges, r.skeleton_edges).unwrap();
    let counts: Vec<String> = r.counts.iter().enumerate().map(|(i, t)| format!("t{i}={t}")).collect();
    writeln!(out, "  triangles by sticks: {} (t_p = {})", counts.join(" "), r.triangles).unwrap();
    let flag = |b: Option<bool>| match b {
        Some(true) => "ok",
        Some(false) => "FAILED",
        None => "n/a",
    };
    writeln!(out, "  t_p = 2n - 4: {}", flag(r.triangle_count_ok)).unwrap();
    writeln!(out, "  stick identity: {}", flag(r.stick_identity_ok)).unwrap();
    if !r.over_cap.is_empty() {
        writeln!(out, "  triangles over the stick cap: {:?}", r.over_cap).unwrap();
    }
    if let Some(a) = &r.association {
        writeln!(out, "  association: {} pairs, {} reassigned", a.pairs.len(), a.reassigned.len()).unwrap();
        for d in &a.diagnoses {
            writeln!(out, "    diagnosis {:?}: {}", d.kind, d.detail).unwrap();
        }
    }
    if let Some(l) = &r.ledger {
        writeln!(out, "  ledger:").unwrap();
        writeln!(out, "    |E| = {}", l.edges).unwrap();
        for s in &l.steps {
            let rel = match s.relation {
                Relation::Eq => "=",
                Relation::Le => "<=",
            };
            let mark = if s.holds { "" } else { "  <- does not hold" };
            writeln!(out, "      {rel} {} = {} (slack {}){mark}", s.expression, s.value, s.slack).unwrap();
            if let Some(a) = &s.assumption {
                writeln!(out, "        assuming {a}").unwrap();
            }
        }
    }
    writeln!(out, "  bound: |E| = {} vs {} -> {:?}", r.edges, r.bound, r.verdict).unwrap();
    let failures: Vec<_> = r.predicates.failures().collect();
    if failures.is_empty() {
        writeln!(out, "  structural checks: all hold").unwrap();
    } else {
        for f in failures {
            let face = f.face.map_or_else(String::new, |x| format!(" on face {x}"));
            if let crossing_ledger::audit::Outcome::Fails(detail) = &f.outcome {
                writeln!(out, "  structural check {:?} fails{face}: {detail}", f.predicate).unwrap();
            }
        }
    }
    for n in &r.notes {
        writeln!(out, "  note: {n}").unwrap();
    }
    out
}
