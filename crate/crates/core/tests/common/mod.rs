//! Fixtures, oracles and strategies shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use crossing_ledger::drawing::{DrawingSpec, EdgeDecl, EdgeId, PlanarizedMap, RotationEntry};
use crossing_ledger::io::{emit, parse_str};
use crossing_ledger::segments::decompose;
use crossing_ledger::skeleton::{extract_skeleton, SkeletonMode};
use crossing_ledger::straight_line::straight_line_drawing;
use crossing_ledger::validate::check_k_planar;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

/// Random points in general position (with probability one) and a random
/// subset of the straight segments between them.
pub fn drawing(max_points: usize) -> impl Strategy<Value = DrawingSpec> {
    (3usize..=max_points)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (prop::collection::vec((0.0..100.0f64, 0.0..100.0f64), n), prop::collection::vec(any::<bool>(), pairs))
        })
        .prop_map(|(points, mask)| random_drawing(&points, &mask))
}

pub fn random_drawing(points: &[(f64, f64)], mask: &[bool]) -> DrawingSpec {
    let n = points.len();
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask[k] {
                edges.push((format!("e{i}_{j}"), i, j));
            }
            k += 1;
        }
    }
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let edges: Vec<(&str, usize, usize)> = edges.iter().map(|(e, a, b)| (e.as_str(), *a, *b)).collect();
    straight_line_drawing(&names, points, &edges)
}

/// `V - E + F = 2C - I` on the planarization, where `I` counts isolated vertices.
pub fn euler_balance(map: &PlanarizedMap) -> bool {
    let isolated = (0..map.node_count()).filter(|&v| map.rotation(v).is_empty()).count();
    let lhs = map.node_count() as i64 - map.segment_count() as i64 + map.faces().len() as i64;
    lhs == 2 * map.component_count() as i64 - isolated as i64
}

/// Chords `(a, b)` and `(c, d)` of a convex polygon cross iff exactly one of
/// `c`, `d` lies strictly between `a` and `b`.
pub fn interleave(a: (usize, usize), b: (usize, usize)) -> bool {
    let inside = |x: usize, (p, q): (usize, usize)| {
        let (lo, hi) = if p < q { (p, q) } else { (q, p) };
        lo < x && x < hi
    };
    let shared = a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1;
    !shared && inside(b.0, a) != inside(b.1, a)
}

/// Lexicographically smallest maximum independent set by trying every
/// subset. `adjacency` is over node indices `0..n`, in tie-break order.
pub fn brute_force_mis(adjacency: &[BTreeSet<usize>]) -> Vec<usize> {
    let n = adjacency.len();
    assert!(n <= 20, "brute force limited to 20 nodes");
    let mut best: Vec<usize> = Vec::new();
    let mut found = false;
    for mask in 0u32..(1u32 << n) {
        let members: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        if members.iter().any(|&v| adjacency[v].iter().any(|w| mask & (1 << w) != 0)) {
            continue;
        }
        if !found || members.len() > best.len() || (members.len() == best.len() && members < best) {
            best = members;
            found = true;
        }
    }
    best
}

/// Edge `long` crossed by four short vertical edges `v0..v3`.
pub fn four_crossing_edge() -> DrawingSpec {
    let names = ["l", "r", "t0", "b0", "t1", "b1", "t2", "b2", "t3", "b3"];
    let pts = [(0.0, 0.0), (10.0, 0.0), (2.0, 1.0), (2.0, -1.0), (4.0, 1.0), (4.0, -1.0), (6.0, 1.0), (6.0, -1.0), (8.0, 1.0), (8.0, -1.0)];
    let edges = [("long", 0, 1), ("v0", 2, 3), ("v1", 4, 5), ("v2", 6, 7), ("v3", 8, 9)];
    straight_line_drawing(&names, &pts, &edges)
}

/// Parallel edges `p`, `q` between `u` and `v` bounding an empty region;
/// `x` sits outside, joined to both.
pub fn empty_bigon() -> DrawingSpec {
    let mut spec = DrawingSpec {
        vertices: vec!["u".into(), "v".into(), "x".into()],
        edges: vec![
            EdgeDecl::new("p", "u", "v"),
            EdgeDecl::new("q", "u", "v"),
            EdgeDecl::new("ux", "u", "x"),
            EdgeDecl::new("xv", "x", "v"),
        ],
        ..Default::default()
    };
    type R = RotationEntry;
    spec.rotations.insert("u".into(), vec![R::forward("p"), R::forward("q"), R::forward("ux")]);
    spec.rotations.insert("v".into(), vec![R::backward("q"), R::backward("p"), R::backward("xv")]);
    spec.rotations.insert("x".into(), vec![R::backward("ux"), R::forward("xv")]);
    spec
}

/// Square `c1..c4` with a stick `s` from `v1` leaving through `c2` towards
/// an outside vertex `x`, which also connects to `v2` and `v3`. Inside the
/// square the stick is not crossed.
pub fn uncrossed_stick_square() -> DrawingSpec {
    let names = ["v1", "v2", "v3", "v4", "x"];
    let pts = [(0.0, 0.0), (2.0, 0.0), (2.0, 2.0), (0.0, 2.0), (4.0, 1.0)];
    let edges = [("c1", 0, 1), ("c2", 1, 2), ("c3", 2, 3), ("c4", 3, 0), ("s", 0, 4), ("xv2", 4, 1), ("xv3", 4, 2)];
    straight_line_drawing(&names, &pts, &edges)
}

/// Hexagon `h1..h6` crossed by `pq` through the non-consecutive sides `h1`
/// and `h4`; `p` and `q` are attached to the ends of those sides.
pub fn far_middle_hexagon() -> DrawingSpec {
    let names = ["v1", "v2", "v3", "v4", "v5", "v6", "p", "q"];
    let pts = [(0.0, 10.0), (8.5, 5.2), (9.0, -4.8), (0.5, -10.0), (-8.8, -5.5), (-9.2, 4.6), (7.0, 11.0), (-7.0, -11.0)];
    let edges = [
        ("h1", 0, 1),
        ("h2", 1, 2),
        ("h3", 2, 3),
        ("h4", 3, 4),
        ("h5", 4, 5),
        ("h6", 5, 0),
        ("pq", 6, 7),
        ("pv1", 6, 0),
        ("pv2", 6, 1),
        ("qv4", 7, 3),
        ("qv5", 7, 4),
    ];
    straight_line_drawing(&names, &pts, &edges)
}

pub fn round_trip(spec: &DrawingSpec) -> Result<(), TestCaseError> {
    let text = emit(spec);
    let parsed = parse_str(&text).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(&parsed, spec);
    prop_assert_eq!(emit(&parsed), text);
    Ok(())
}

/// `keep_mask` is cycled over the edges to pick the kept subset.
pub fn euler_after_restrict(spec: &DrawingSpec, keep_mask: &[bool]) -> Result<(), TestCaseError> {
    let map = PlanarizedMap::build(spec).unwrap();
    prop_assert!(euler_balance(&map));
    let keep: BTreeSet<EdgeId> =
        spec.edges.iter().zip(keep_mask.iter().cycle()).filter(|(_, &k)| k).map(|(e, _)| e.id.clone()).collect();
    let sub = map.restrict(&keep).unwrap();
    prop_assert!(euler_balance(&sub));
    prop_assert_eq!(sub.edge_count(), keep.len());
    prop_assert_eq!(sub.vertex_count(), map.vertex_count());
    Ok(())
}

pub fn two_sticks_per_residual_edge(spec: &DrawingSpec) -> Result<(), TestCaseError> {
    let map = PlanarizedMap::build(spec).unwrap();
    let exact = extract_skeleton(&map, SkeletonMode::Exact).unwrap();
    let greedy = extract_skeleton(&map, SkeletonMode::Greedy).unwrap();
    prop_assert!(exact.kept.len() >= greedy.kept.len());
    for dec in [&exact, &greedy] {
        prop_assert_eq!(dec.skeleton.crossing_count(), 0);
        let seg = decompose(dec).unwrap();
        prop_assert_eq!(seg.sticks().count(), 2 * dec.residual.len());
        for e in &dec.residual {
            let pieces = seg.pieces_of(e.as_str());
            let skeleton_crossings = map
                .spec()
                .chain(e)
                .iter()
                .filter(|c| map.spec().crossings[*c].iter().any(|f| dec.kept.contains(f)))
                .count();
            prop_assert_eq!(pieces.len(), skeleton_crossings + 1);
        }
    }
    Ok(())
}

pub fn k_planarity_monotone(spec: &DrawingSpec) -> Result<(), TestCaseError> {
    let map = PlanarizedMap::build(spec).unwrap();
    let max = check_k_planar(&map, 0).max_crossings();
    let mut previous = false;
    for k in 0..8 {
        let ok = check_k_planar(&map, k).is_valid();
        prop_assert!(!previous || ok, "valid at {} but not at {}", k - 1, k);
        prop_assert_eq!(ok, k >= max);
        previous = ok;
    }
    Ok(())
}
