//! Pairing each triangle with three sticks to a neighbouring triangle that
//! hosts at most two.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::segments::FaceProfile;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiagnosisKind {
    /// Type (1,1,1): the three sticks mutually cross; the hexagon formed with
    /// the three neighbours could hold 8 interior edges instead of 6.
    MutualSticks,
    /// The designated neighbour already hosts three or more sticks.
    CrowdedTarget,
    /// Two or more triangles compete for one neighbour and no free
    /// replacement exists.
    Conflict,
    /// Sticks whose corner could not be determined.
    Unanchored,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnosis {
    pub kind: DiagnosisKind,
    pub faces: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reassignment {
    pub source: usize,
    pub from: usize,
    pub to: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Association {
    /// Three-stick triangle to its associated neighbour.
    pub pairs: BTreeMap<usize, usize>,
    pub reassigned: Vec<Reassignment>,
    pub diagnoses: Vec<Diagnosis>,
}

impl Association {
    /// Every three-stick triangle is paired and no two share a target.
    pub fn is_complete(&self) -> bool {
        self.diagnoses.is_empty()
    }

    pub fn is_injective(&self) -> bool {
        let mut targets: Vec<usize> = self.pairs.values().copied().collect();
        targets.sort_unstable();
        targets.windows(2).all(|w| w[0] != w[1])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AssociateError {
    #[error("skeleton face {0} is not a triangle")]
    Inapplicable(usize),
}

/// Runs the association over triangular profiles (every face must be a
/// triangle). Failures are returned as diagnoses inside the result.
pub fn associate(profiles: &[FaceProfile]) -> Result<Association, AssociateError> {
    if let Some(p) = profiles.iter().find(|p| !p.is_triangle()) {
        return Err(AssociateError::Inapplicable(p.face));
    }
    let by_face: BTreeMap<usize, &FaceProfile> = profiles.iter().map(|p| (p.face, p)).collect();
    let mut out = Association::default();
    let mut corner_kind = BTreeMap::new();

    for p in profiles.iter().filter(|p| p.stick_count() == 3) {
        if p.tau.iter().sum::<usize>() != 3 {
            out.diagnoses.push(Diagnosis {
                kind: DiagnosisKind::Unanchored,
                faces: vec![p.face],
                detail: format!("face {} has sticks without a corner", p.face),
            });
            continue;
        }
        let across = |corner: usize| p.neighbors[(corner + 1) % 3];
        let target = match p.type_signature().as_slice() {
            [3, 0, 0] => {
                let corner = p.tau.iter().position(|&t| t == 3).unwrap();
                corner_kind.insert(p.face, true);
                across(corner)
            }
            [2, 1, 0] => {
                let corner = p.tau.iter().position(|&t| t == 1).unwrap();
                corner_kind.insert(p.face, false);
                across(corner)
            }
            _ => {
                out.diagnoses.push(Diagnosis {
                    kind: DiagnosisKind::MutualSticks,
                    faces: vec![p.face],
                    detail: format!(
                        "face {} has one stick per corner; replacing the six interior edges of the hexagon around it by 8 gives a denser drawing",
                        p.face
                    ),
                });
                continue;
            }
        };
        if by_face[&target].stick_count() > 2 {
            out.diagnoses.push(Diagnosis {
                kind: DiagnosisKind::CrowdedTarget,
                faces: vec![p.face, target],
                detail: format!("face {} would pair with face {target}, which hosts {} sticks", p.face, by_face[&target].stick_count()),
            });
            continue;
        }
        out.pairs.insert(p.face, target);
    }

    let mut claims: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (&source, &target) in &out.pairs {
        claims.entry(target).or_default().push(source);
    }
    for (target, sources) in claims {
        if sources.len() == 1 {
            continue;
        }
        let both_corner_type = sources.iter().all(|s| corner_kind[s]);
        let replacement = if sources.len() == 2 && both_corner_type {
            let t = by_face[&target];
            let third: Vec<usize> = t.neighbors.iter().copied().filter(|f| !sources.contains(f)).collect();
            match third.as_slice() {
                [alt] if by_face[alt].stick_count() <= 2
                    && !out.pairs.contains_key(alt)
                    && !out.pairs.values().any(|v| v == alt) =>
                {
                    Some(*alt)
                }
                _ => None,
            }
        } else {
            None
        };
        match replacement {
            Some(alt) => {
                let source = *sources.iter().max().unwrap();
                out.pairs.insert(source, alt);
                out.reassigned.push(Reassignment { source, from: target, to: alt });
            }
            None => {
                for s in &sources {
                    out.pairs.remove(s);
                }
                let mut faces = sources.clone();
                faces.push(target);
                out.diagnoses.push(Diagnosis {
                    kind: DiagnosisKind::Conflict,
                    detail: format!("faces {sources:?} all pair with face {target} and no free neighbour takes one over"),
                    faces,
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::{EdgeId, NodeId};

    fn tri(face: usize, tau: [usize; 3], neighbors: [usize; 3]) -> FaceProfile {
        let sticks: Vec<usize> = (0..tau.iter().sum()).map(|i| face * 10 + i).collect();
        FaceProfile {
            face,
            size: 3,
            boundary: vec![NodeId::from("a"), NodeId::from("b"), NodeId::from("c")],
            boundary_edges: vec![EdgeId::from("x"), EdgeId::from("y"), EdgeId::from("z")],
            neighbors: neighbors.to_vec(),
            tau: tau.to_vec(),
            sticks,
            middles: vec![],
            bridges: vec![],
            bridge_count: 0,
            non_bridge_count: 3,
            uncrossed_non_bridges: 3,
            sides: Default::default(),
            crossing_sticks: vec![],
        }
    }

    #[test]
    fn no_three_stick_triangles_gives_empty_map() {
        let profiles = vec![tri(0, [0, 0, 0], [1, 1, 1]), tri(1, [1, 1, 0], [0, 0, 0])];
        let a = associate(&profiles).unwrap();
        assert!(a.pairs.is_empty());
        assert!(a.is_complete());
    }

    #[test]
    fn corner_type_pairs_across_opposite_edge() {
        // Corner 0 has the sticks; the opposite edge is occurrence 1.
        let profiles = vec![tri(0, [3, 0, 0], [5, 1, 6]), tri(1, [0, 0, 0], [0, 0, 0])];
        let a = associate(&profiles).unwrap();
        assert_eq!(a.pairs[&0], 1);
    }

    #[test]
    fn two_one_type_pairs_across_edge_facing_single_stick() {
        let profiles = vec![tri(0, [2, 0, 1], [1, 2, 3]), tri(1, [0; 3], [0; 3]), tri(2, [0; 3], [0; 3]), tri(3, [0; 3], [0; 3])];
        let a = associate(&profiles).unwrap();
        // Corner 2 has one stick; edge occurrence 0 faces it.
        assert_eq!(a.pairs[&0], 1);
    }

    #[test]
    fn mutual_sticks_are_diagnosed() {
        let profiles = vec![tri(0, [1, 1, 1], [1, 1, 1]), tri(1, [0; 3], [0; 3])];
        let a = associate(&profiles).unwrap();
        assert_eq!(a.diagnoses[0].kind, DiagnosisKind::MutualSticks);
        assert!(!a.is_complete());
    }

    #[test]
    fn shared_target_moves_to_free_neighbour() {
        // Faces 1 and 2 both point at 0; 0's third neighbour 3 is free.
        let profiles = vec![
            tri(0, [1, 1, 0], [1, 2, 3]),
            tri(1, [0, 3, 0], [9, 9, 0]),
            tri(2, [3, 0, 0], [9, 0, 9]),
            tri(3, [2, 0, 0], [0, 9, 9]),
            tri(9, [0, 0, 0], [1, 2, 3]),
        ];
        let a = associate(&profiles).unwrap();
        assert!(a.is_complete());
        assert!(a.is_injective());
        assert_eq!(a.pairs[&1], 0);
        assert_eq!(a.pairs[&2], 3);
        assert_eq!(a.reassigned, vec![Reassignment { source: 2, from: 0, to: 3 }]);
    }

    #[test]
    fn shared_target_without_free_neighbour_is_a_conflict() {
        let profiles = vec![
            tri(0, [1, 1, 0], [1, 2, 3]),
            tri(1, [0, 3, 0], [9, 9, 0]),
            tri(2, [3, 0, 0], [9, 0, 9]),
            tri(3, [0, 3, 0], [9, 9, 9]),
            tri(9, [0, 0, 0], [1, 2, 3]),
        ];
        let a = associate(&profiles).unwrap();
        assert!(a.diagnoses.iter().any(|d| d.kind == DiagnosisKind::Conflict));
    }

    #[test]
    fn non_triangular_face_is_inapplicable() {
        let mut quad = tri(0, [0, 0, 0], [0, 0, 0]);
        quad.size = 4;
        assert_eq!(associate(&[quad]), Err(AssociateError::Inapplicable(0)));
    }
}
