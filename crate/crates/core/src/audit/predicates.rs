//! Structural facts that hold in every crossing-minimal optimal 3-planar
//! drawing, checked on a concrete one. A failure shows the input is not such
//! a drawing; nothing is modified.

use serde::Serialize;

use crate::segments::{Anchor, FaceProfile, MiddleClass, Segmentation, StickClass};
use crate::skeleton::SkeletonDecomposition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    /// Each stick is crossed at least once inside the face.
    StickCrossedInFace,
    /// Each middle part crosses consecutive boundary edges.
    MiddleShort,
    /// Each stick is short.
    StickShort,
    /// The skeleton is connected.
    SkeletonConnected,
    /// Without sticks, fewer than half the non-bridges are uncrossed.
    FewUncrossedNonBridges,
    HasStick,
    /// No three sticks pairwise cross.
    NoMutualStickTriple,
    /// Each stick is crossed exactly once inside the face.
    StickCrossedOnce,
    /// No stick crosses a middle part.
    NoStickMiddleCrossing,
    /// Sticks are crossed only by opposite sticks.
    StickCrossedOnlyByOpposite,
    ExactlyTwoSticks,
    /// Every skeleton face is a triangle.
    FullyTriangulated,
}

impl Predicate {
    pub const PER_FACE: [Predicate; 10] = [
        Predicate::StickCrossedInFace,
        Predicate::MiddleShort,
        Predicate::StickShort,
        Predicate::FewUncrossedNonBridges,
        Predicate::HasStick,
        Predicate::NoMutualStickTriple,
        Predicate::StickCrossedOnce,
        Predicate::NoStickMiddleCrossing,
        Predicate::StickCrossedOnlyByOpposite,
        Predicate::ExactlyTwoSticks,
    ];
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "detail", rename_all = "kebab-case")]
pub enum Outcome {
    Holds,
    Fails(String),
    Vacuous,
}

impl Outcome {
    pub fn fails(&self) -> bool {
        matches!(self, Outcome::Fails(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredicateResult {
    pub predicate: Predicate,
    /// `None` for whole-drawing predicates.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub face: Option<usize>,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PredicateReport {
    pub results: Vec<PredicateResult>,
}

impl PredicateReport {
    pub fn get(&self, predicate: Predicate, face: Option<usize>) -> Option<&Outcome> {
        self.results.iter().find(|r| r.predicate == predicate && r.face == face).map(|r| &r.outcome)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PredicateResult> {
        self.results.iter().filter(|r| r.outcome.fails())
    }

    pub fn all_hold(&self) -> bool {
        self.failures().next().is_none()
    }
}

fn check(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Holds
    } else {
        Outcome::Fails(detail())
    }
}

/// Evaluates the global predicates and, on every face of size at least 4,
/// the per-face ones. Faces without relevant pieces get `Vacuous`.
pub fn structural_predicates(dec: &SkeletonDecomposition<'_>, seg: &Segmentation, profiles: &[FaceProfile]) -> PredicateReport {
    let mut results = vec![
        PredicateResult {
            predicate: Predicate::SkeletonConnected,
            face: None,
            outcome: check(dec.is_connected(), || {
                format!("skeleton has {} components", dec.skeleton.component_count())
            }),
        },
        PredicateResult {
            predicate: Predicate::FullyTriangulated,
            face: None,
            outcome: check(dec.is_triangulated(), || {
                let big: Vec<usize> = profiles.iter().filter(|p| !p.is_triangle()).map(|p| p.face).collect();
                if big.is_empty() {
                    "skeleton is disconnected".to_owned()
                } else {
                    format!("faces {big:?} are not triangles")
                }
            }),
        },
    ];
    for p in profiles.iter().filter(|p| p.size >= 4) {
        for predicate in Predicate::PER_FACE {
            results.push(PredicateResult { predicate, face: Some(p.face), outcome: evaluate(predicate, seg, p) });
        }
    }
    PredicateReport { results }
}

fn evaluate(predicate: Predicate, seg: &Segmentation, p: &FaceProfile) -> Outcome {
    let piece = |i: usize| &seg.pieces[i];
    let name = |i: usize| format!("{} (piece {i})", piece(i).edge);
    let has_sticks = !p.sticks.is_empty();
    let over_sticks = |bad: &dyn Fn(usize) -> bool, what: &str| {
        if !has_sticks {
            return Outcome::Vacuous;
        }
        let offenders: Vec<String> = p.sticks.iter().copied().filter(|&s| bad(s)).map(name).collect();
        check(offenders.is_empty(), || format!("sticks {} {what}", offenders.join(", ")))
    };
    match predicate {
        Predicate::StickCrossedInFace => {
            over_sticks(&|s| piece(s).intra_face_crossings() == 0, "are not crossed inside the face")
        }
        Predicate::StickShort => over_sticks(
            &|s| matches!(piece(s).anchor, Anchor::Stick { class: StickClass::Long, .. }),
            "are long",
        ),
        Predicate::StickCrossedOnce => {
            over_sticks(&|s| piece(s).intra_face_crossings() != 1, "are not crossed exactly once inside the face")
        }
        Predicate::StickCrossedOnlyByOpposite => over_sticks(
            &|s| {
                piece(s).crossings.iter().any(|c| {
                    !p.crossing_sticks.iter().any(|pair| pair.opposite && pair.sticks.contains(&s) && pair.sticks.contains(&c.other))
                })
            },
            "are crossed by a piece that is not an opposite stick",
        ),
        Predicate::MiddleShort => {
            if p.middles.is_empty() {
                return Outcome::Vacuous;
            }
            let far: Vec<String> = p
                .middles
                .iter()
                .copied()
                .filter(|&m| matches!(piece(m).anchor, Anchor::Middle { class: MiddleClass::Far, .. }))
                .map(name)
                .collect();
            check(far.is_empty(), || format!("middle parts {} cross non-consecutive edges", far.join(", ")))
        }
        Predicate::FewUncrossedNonBridges => {
            if has_sticks {
                return Outcome::Vacuous;
            }
            check(2 * p.uncrossed_non_bridges < p.non_bridge_count, || {
                format!("{} of {} non-bridges are uncrossed", p.uncrossed_non_bridges, p.non_bridge_count)
            })
        }
        Predicate::HasStick => check(has_sticks, || "face has no sticks".to_owned()),
        Predicate::NoMutualStickTriple => {
            if p.sticks.len() < 3 {
                return Outcome::Vacuous;
            }
            let crossing = |a: usize, b: usize| piece(a).crosses(b);
            let s = &p.sticks;
            let mut triple = None;
            'outer: for i in 0..s.len() {
                for j in i + 1..s.len() {
                    if !crossing(s[i], s[j]) {
                        continue;
                    }
                    for k in j + 1..s.len() {
                        if crossing(s[i], s[k]) && crossing(s[j], s[k]) {
                            triple = Some([s[i], s[j], s[k]]);
                            break 'outer;
                        }
                    }
                }
            }
            match triple {
                None => Outcome::Holds,
                Some(t) => Outcome::Fails(format!("sticks {} mutually cross", t.map(name).join(", "))),
            }
        }
        Predicate::NoStickMiddleCrossing => {
            if !has_sticks || p.middles.is_empty() {
                return Outcome::Vacuous;
            }
            let hits: Vec<String> = p
                .sticks
                .iter()
                .flat_map(|&s| piece(s).crossings.iter().filter(|c| !piece(c.other).is_stick()).map(move |c| (s, c.other)))
                .map(|(s, m)| format!("{} x {}", name(s), name(m)))
                .collect();
            check(hits.is_empty(), || format!("stick/middle crossings: {}", hits.join(", ")))
        }
        Predicate::ExactlyTwoSticks => check(p.sticks.len() == 2, || format!("face has {} sticks", p.sticks.len())),
        Predicate::SkeletonConnected | Predicate::FullyTriangulated => Outcome::Vacuous,
    }
}
