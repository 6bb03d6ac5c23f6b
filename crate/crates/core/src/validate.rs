//! Drawing rules: at most `k` crossings per edge, sane crossings, and no
//! homotopic parallel edges or self-loops.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::drawing::{EdgeId, NodeKind, PlanarizedMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    TooManyCrossings,
    SelfCrossing,
    CrossingDegree,
    CrossingAlternation,
    HomotopicEdges,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: Rule,
    pub edges: Vec<EdgeId>,
    pub detail: String,
}

/// A self-loop, pair of parallel edges or pair of loops whose closed curve
/// leaves some region of the sphere without a vertex inside.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomotopyViolation {
    pub edges: Vec<EdgeId>,
    /// Number of real vertices strictly inside each region cut out by the curve.
    pub region_vertices: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub crossing_counts: BTreeMap<EdgeId, usize>,
    pub violations: Vec<Violation>,
    pub homotopy: Vec<HomotopyViolation>,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty() && self.homotopy.is_empty()
    }

    pub fn max_crossings(&self) -> usize {
        self.crossing_counts.values().copied().max().unwrap_or(0)
    }

    pub fn merge(mut self, other: ValidationReport) -> ValidationReport {
        self.k = self.k.or(other.k);
        if self.crossing_counts.is_empty() {
            self.crossing_counts = other.crossing_counts;
        }
        self.violations.extend(other.violations);
        self.homotopy.extend(other.homotopy);
        self.warnings.extend(other.warnings);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ValidateError {
    #[error("curve of {edges:?} does not separate the sphere")]
    SelfLoopDegenerate { edges: Vec<EdgeId> },
}

fn crossing_counts(map: &PlanarizedMap) -> BTreeMap<EdgeId, usize> {
    (0..map.edge_count()).map(|e| (map.edge_id(e).clone(), map.edge_crossings(e))).collect()
}

pub fn check_k_planar(map: &PlanarizedMap, k: usize) -> ValidationReport {
    let counts = crossing_counts(map);
    let violations = (0..map.edge_count())
        .filter(|&e| map.edge_crossings(e) > k)
        .map(|e| Violation {
            rule: Rule::TooManyCrossings,
            edges: vec![map.edge_id(e).clone()],
            detail: format!("{} crossings, at most {k} allowed", map.edge_crossings(e)),
        })
        .collect();
    ValidationReport { k: Some(k), crossing_counts: counts, violations, ..Default::default() }
}

/// Re-checks the structural drawing rules on a built map. Two edges crossing
/// more than once, and parallel edges crossing each other, are warnings.
pub fn check_sanity(map: &PlanarizedMap) -> ValidationReport {
    let mut report = ValidationReport { crossing_counts: crossing_counts(map), ..Default::default() };
    let mut pair_crossings: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for node in map.vertex_count()..map.node_count() {
        let NodeKind::Crossing { edges: [e, f] } = map.node_kind(node) else { continue };
        let id = map.node_id(node);
        if e == f {
            report.violations.push(Violation {
                rule: Rule::SelfCrossing,
                edges: vec![map.edge_id(e).clone()],
                detail: format!("edge crosses itself at {id}"),
            });
        }
        let rot = map.rotation(node);
        if rot.len() != 4 {
            report.violations.push(Violation {
                rule: Rule::CrossingDegree,
                edges: vec![map.edge_id(e).clone(), map.edge_id(f).clone()],
                detail: format!("crossing {id} has degree {}", rot.len()),
            });
            continue;
        }
        for i in 0..2 {
            let (a, _, _) = map.dart_edge(rot[i]);
            let (b, _, _) = map.dart_edge(rot[i + 2]);
            let (c, _, _) = map.dart_edge(rot[i + 1]);
            if a != b || (a == c && e != f) {
                report.violations.push(Violation {
                    rule: Rule::CrossingAlternation,
                    edges: vec![map.edge_id(e).clone(), map.edge_id(f).clone()],
                    detail: format!("edges do not alternate around {id}"),
                });
                break;
            }
        }
        *pair_crossings.entry((e.min(f), e.max(f))).or_default() += 1;
    }
    for ((e, f), count) in pair_crossings {
        if e != f && count > 1 {
            report.warnings.push(format!(
                "edges {} and {} cross {count} times",
                map.edge_id(e),
                map.edge_id(f)
            ));
        }
    }
    for (e, f) in parallel_pairs(map) {
        let crossed = map.edge_points(e)[1..map.edge_points(e).len() - 1]
            .iter()
            .any(|&c| map.edge_points(f).contains(&c));
        if crossed {
            report.warnings.push(format!("parallel edges {} and {} cross each other", map.edge_id(e), map.edge_id(f)));
        }
    }
    report
}

fn endpoints(map: &PlanarizedMap, e: usize) -> (usize, usize) {
    let p = map.edge_points(e);
    (p[0], p[p.len() - 1])
}

fn parallel_pairs(map: &PlanarizedMap) -> Vec<(usize, usize)> {
    let mut groups: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for e in 0..map.edge_count() {
        let (a, b) = endpoints(map, e);
        if a != b {
            groups.entry((a.min(b), a.max(b))).or_default().push(e);
        }
    }
    let mut pairs = Vec::new();
    for group in groups.values() {
        for (i, &e) in group.iter().enumerate() {
            for &f in &group[i + 1..] {
                pairs.push((e, f));
            }
        }
    }
    pairs
}

/// For every self-loop, every pair of loops at one vertex and every pair of
/// parallel edges, cuts the sphere along their closed curve and requires a
/// real vertex strictly inside each resulting region.
pub fn check_homotopy(map: &PlanarizedMap) -> Result<ValidationReport, ValidateError> {
    let mut report = ValidationReport::default();
    let mut curves: Vec<Vec<usize>> = Vec::new();
    let mut loops_at: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for e in 0..map.edge_count() {
        let (a, b) = endpoints(map, e);
        if a == b {
            curves.push(vec![e]);
            loops_at.entry(a).or_default().push(e);
        }
    }
    for loops in loops_at.values() {
        for (i, &e) in loops.iter().enumerate() {
            for &f in &loops[i + 1..] {
                curves.push(vec![e, f]);
            }
        }
    }
    curves.extend(parallel_pairs(map).into_iter().map(|(e, f)| vec![e, f]));

    let mut unlocated = false;
    for curve in curves {
        let (counts, missed) = region_vertex_counts(map, &curve);
        unlocated |= missed;
        if counts.len() < 2 {
            return Err(ValidateError::SelfLoopDegenerate {
                edges: curve.iter().map(|&e| map.edge_id(e).clone()).collect(),
            });
        }
        if counts.iter().any(|&c| c == 0) {
            report.violations.push(Violation {
                rule: Rule::HomotopicEdges,
                edges: curve.iter().map(|&e| map.edge_id(e).clone()).collect(),
                detail: format!("region vertex counts {counts:?}"),
            });
            report.homotopy.push(HomotopyViolation {
                edges: curve.iter().map(|&e| map.edge_id(e).clone()).collect(),
                region_vertices: counts,
            });
        }
    }
    if unlocated {
        report
            .warnings
            .push("vertices in other components or without edges could not be placed in a region".into());
    }
    Ok(report)
}

/// Real-vertex counts per region of the sphere cut along the given edges,
/// plus whether some vertex could not be located.
fn region_vertex_counts(map: &PlanarizedMap, curve: &[usize]) -> (Vec<usize>, bool) {
    let mut cut = BTreeSet::new();
    let mut on_curve = BTreeSet::new();
    for &e in curve {
        let (a, b) = endpoints(map, e);
        on_curve.insert(a);
        on_curve.insert(b);
        let first = map.segment_dart(e, 0, true) / 2;
        cut.extend(first..first + map.edge_points(e).len() - 1);
    }
    let mut parent: Vec<usize> = (0..map.faces().len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for s in 0..map.segment_count() {
        if cut.contains(&s) {
            continue;
        }
        let (f, g) = (find(&mut parent, map.face_of(2 * s)), find(&mut parent, map.face_of(2 * s + 1)));
        parent[f] = g;
    }
    let mut regions: BTreeMap<usize, usize> = BTreeMap::new();
    for &s in &cut {
        for d in [2 * s, 2 * s + 1] {
            let r = find(&mut parent, map.face_of(d));
            regions.entry(r).or_insert(0);
        }
    }
    let component = map.component_of(*on_curve.iter().next().unwrap());
    let mut missed = false;
    for w in 0..map.vertex_count() {
        if on_curve.contains(&w) {
            continue;
        }
        let rot = map.rotation(w);
        if rot.is_empty() || map.component_of(w) != component {
            missed = true;
            continue;
        }
        let r = find(&mut parent, map.face_of(rot[0]));
        if let Some(count) = regions.get_mut(&r) {
            *count += 1;
        }
    }
    (regions.into_values().collect(), missed)
}
