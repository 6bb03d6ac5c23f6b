//! Planar skeleton extraction: a maximum set of pairwise non-crossing edges.
//!
//! Crossing-freeness is independence in the crossing-conflict graph, so the
//! exact mode solves maximum independent set per connected conflict
//! component by branch and bound. Among all maximum sets the one whose
//! sorted edge-id sequence is lexicographically smallest is returned.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::drawing::{DrawingError, EdgeId, FaceWalk, NodeKind, PlanarizedMap};

/// Largest conflict component the exact solver accepts.
pub const MAX_EXACT_BUDGET: usize = 64;

/// Edges as nodes, adjacent when they cross at least once. Nodes are sorted
/// by edge id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictGraph {
    pub edges: Vec<EdgeId>,
    pub adjacency: Vec<BTreeSet<usize>>,
}

impl ConflictGraph {
    pub fn conflict_count(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn conflicts(&self) -> Vec<(EdgeId, EdgeId)> {
        let mut out = Vec::new();
        for (i, adj) in self.adjacency.iter().enumerate() {
            for &j in adj.range(i + 1..) {
                out.push((self.edges[i].clone(), self.edges[j].clone()));
            }
        }
        out
    }

    /// Connected components, each a sorted list of node indices, ordered by
    /// their smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.edges.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut i = 0;
            while i < comp.len() {
                for &w in &self.adjacency[comp[i]] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_independent(&self, set: &BTreeSet<usize>) -> bool {
        set.iter().all(|&v| self.adjacency[v].is_disjoint(set))
    }
}

pub fn conflict_graph(map: &PlanarizedMap) -> ConflictGraph {
    let mut order: Vec<usize> = (0..map.edge_count()).collect();
    order.sort_by(|&a, &b| map.edge_id(a).cmp(map.edge_id(b)));
    let mut rank = vec![0; map.edge_count()];
    for (r, &e) in order.iter().enumerate() {
        rank[e] = r;
    }
    let mut adjacency = vec![BTreeSet::new(); order.len()];
    for node in map.vertex_count()..map.node_count() {
        if let NodeKind::Crossing { edges: [e, f] } = map.node_kind(node) {
            if e != f {
                adjacency[rank[e]].insert(rank[f]);
                adjacency[rank[f]].insert(rank[e]);
            }
        }
    }
    ConflictGraph { edges: order.iter().map(|&e| map.edge_id(e).clone()).collect(), adjacency }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SkeletonMode {
    #[default]
    Exact,
    Greedy,
    /// Caller-provided edge set.
    Given,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SkeletonOptions {
    pub mode: SkeletonMode,
    /// Largest conflict component solved exactly; capped at [`MAX_EXACT_BUDGET`].
    pub budget: usize,
}

impl Default for SkeletonOptions {
    fn default() -> Self {
        Self { mode: SkeletonMode::Exact, budget: MAX_EXACT_BUDGET }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SkeletonError {
    #[error("conflict component of {size} edges exceeds the exact budget of {budget}; use greedy mode")]
    BudgetExceeded { size: usize, budget: usize },
    #[error("edges {0} and {1} cross, so they cannot both be in the skeleton")]
    NotIndependent(EdgeId, EdgeId),
    #[error("edge {0} crosses no skeleton edge, so the skeleton is not maximal")]
    NotMaximal(EdgeId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("the given mode needs an explicit edge set")]
    MissingEdgeSet,
    #[error(transparent)]
    Drawing(#[from] DrawingError),
}

/// The chosen crossing-free edge set with its inherited embedding.
#[derive(Clone, Debug)]
pub struct SkeletonDecomposition<'m> {
    pub map: &'m PlanarizedMap,
    pub skeleton: PlanarizedMap,
    pub kept: BTreeSet<EdgeId>,
    pub residual: BTreeSet<EdgeId>,
    pub mode: SkeletonMode,
    /// True when the kept set is certified maximum for this drawing.
    pub optimal: bool,
    pub conflicts: ConflictGraph,
}

impl SkeletonDecomposition<'_> {
    pub fn faces(&self) -> &[FaceWalk] {
        self.skeleton.faces()
    }

    pub fn is_connected(&self) -> bool {
        self.skeleton.is_connected()
    }

    /// Every face is a 3-walk and the skeleton is connected.
    pub fn is_triangulated(&self) -> bool {
        self.is_connected() && !self.faces().is_empty() && self.faces().iter().all(|f| f.len() == 3)
    }
}

pub fn extract_skeleton(map: &PlanarizedMap, mode: SkeletonMode) -> Result<SkeletonDecomposition<'_>, SkeletonError> {
    extract_skeleton_with(map, SkeletonOptions { mode, ..Default::default() })
}

pub fn extract_skeleton_with(
    map: &PlanarizedMap,
    options: SkeletonOptions,
) -> Result<SkeletonDecomposition<'_>, SkeletonError> {
    let conflicts = conflict_graph(map);
    let chosen = match options.mode {
        SkeletonMode::Exact => {
            let budget = options.budget.min(MAX_EXACT_BUDGET);
            let mut chosen = BTreeSet::new();
            for comp in conflicts.components() {
                if comp.len() > budget {
                    return Err(SkeletonError::BudgetExceeded { size: comp.len(), budget });
                }
                chosen.extend(exact_component(&conflicts, &comp));
            }
            chosen
        }
        SkeletonMode::Greedy => greedy(&conflicts),
        SkeletonMode::Given => return Err(SkeletonError::MissingEdgeSet),
    };
    let kept: BTreeSet<EdgeId> = chosen.iter().map(|&i| conflicts.edges[i].clone()).collect();
    finish(map, conflicts, kept, options.mode, options.mode == SkeletonMode::Exact)
}

/// Decomposition for a caller-chosen skeleton, checked for independence and
/// maximality but not for maximum size.
pub fn skeleton_from_edges(
    map: &PlanarizedMap,
    kept: BTreeSet<EdgeId>,
) -> Result<SkeletonDecomposition<'_>, SkeletonError> {
    let conflicts = conflict_graph(map);
    for e in &kept {
        if map.edge_index(e.as_str()).is_none() {
            return Err(SkeletonError::UnknownEdge(e.clone()));
        }
    }
    finish(map, conflicts, kept, SkeletonMode::Given, false)
}

fn finish(
    map: &PlanarizedMap,
    conflicts: ConflictGraph,
    kept: BTreeSet<EdgeId>,
    mode: SkeletonMode,
    optimal: bool,
) -> Result<SkeletonDecomposition<'_>, SkeletonError> {
    let index: BTreeMap<&EdgeId, usize> = conflicts.edges.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let set: BTreeSet<usize> = kept.iter().map(|e| index[e]).collect();
    for &v in &set {
        if let Some(&w) = conflicts.adjacency[v].intersection(&set).next() {
            return Err(SkeletonError::NotIndependent(conflicts.edges[v].clone(), conflicts.edges[w].clone()));
        }
    }
    let residual: BTreeSet<EdgeId> = conflicts.edges.iter().filter(|e| !kept.contains(*e)).cloned().collect();
    for e in &residual {
        if conflicts.adjacency[index[e]].is_disjoint(&set) {
            return Err(SkeletonError::NotMaximal(e.clone()));
        }
    }
    let skeleton = map.restrict(&kept)?;
    Ok(SkeletonDecomposition { map, skeleton, kept, residual, mode, optimal, conflicts })
}

/// Repeatedly drops the edge with most remaining conflicts (smallest id on
/// ties), then re-adds dropped edges that no longer conflict.
fn greedy(g: &ConflictGraph) -> BTreeSet<usize> {
    let n = g.edges.len();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = g.adjacency.iter().map(BTreeSet::len).collect();
    let mut dropped = Vec::new();
    loop {
        let worst = (0..n).filter(|&v| alive[v] && degree[v] > 0).max_by(|&a, &b| degree[a].cmp(&degree[b]).then(b.cmp(&a)));
        let Some(v) = worst else { break };
        alive[v] = false;
        dropped.push(v);
        for &w in &g.adjacency[v] {
            if alive[w] {
                degree[w] -= 1;
            }
        }
    }
    dropped.sort_unstable();
    for v in dropped {
        if g.adjacency[v].iter().all(|&w| !alive[w]) {
            alive[v] = true;
        }
    }
    (0..n).filter(|&v| alive[v]).collect()
}

/// Lexicographically first maximum independent set of one component.
fn exact_component(g: &ConflictGraph, comp: &[usize]) -> Vec<usize> {
    let k = comp.len();
    let local: BTreeMap<usize, usize> = comp.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let adj: Vec<u64> = comp
        .iter()
        .map(|&v| g.adjacency[v].iter().fold(0u64, |m, w| m | (1u64 << local[w])))
        .collect();
    let all = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    let mis = max_independent_set(&adj, all);
    (0..k).filter(|&i| mis & (1u64 << i) != 0).map(|i| comp[i]).collect()
}

/// Branch and bound over bitmask graphs (at most 64 nodes). Branches on the
/// lowest candidate, include-first, so the first maximum set found is the
/// lexicographically smallest one.
pub(crate) fn max_independent_set(adj: &[u64], candidates: u64) -> u64 {
    struct Search<'a> {
        adj: &'a [u64],
        best_size: i64,
        best: u64,
    }

    impl Search<'_> {
        fn upper_bound(&self, cand: u64) -> i64 {
            let k = cand.count_ones() as i64;
            let mut twice_m = 0i64;
            let mut max_deg = 0i64;
            let mut rest = cand;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let d = (self.adj[v] & cand).count_ones() as i64;
                twice_m += d;
                max_deg = max_deg.max(d);
            }
            if max_deg == 0 {
                return k;
            }
            // Every edge needs an endpoint outside the independent set.
            let m = twice_m / 2;
            k - (m + max_deg - 1) / max_deg
        }

        fn run(&mut self, cand: u64, current: u64, size: i64) {
            if cand == 0 {
                if size > self.best_size {
                    self.best_size = size;
                    self.best = current;
                }
                return;
            }
            if size + self.upper_bound(cand) <= self.best_size {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            let bit = 1u64 << v;
            self.run(cand & !bit & !self.adj[v], current | bit, size + 1);
            // A candidate without conflicts belongs to every maximum set.
            if self.adj[v] & cand != 0 {
                self.run(cand & !bit, current, size);
            }
        }
    }

    let lower = greedy_lower_bound(adj, candidates);
    // One below the greedy size, so equal-size sets are still discovered in
    // lexicographic order.
    let mut search = Search { adj, best_size: lower - 1, best: 0 };
    search.run(candidates, 0, 0);
    search.best
}

/// Size of a minimum-degree greedy independent set.
fn greedy_lower_bound(adj: &[u64], candidates: u64) -> i64 {
    let mut cand = candidates;
    let mut size = 0;
    while cand != 0 {
        let mut rest = cand;
        let mut pick = usize::MAX;
        let mut pick_deg = u32::MAX;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (adj[v] & cand).count_ones();
            if d < pick_deg {
                pick = v;
                pick_deg = d;
            }
        }
        cand &= !(1u64 << pick) & !adj[pick];
        size += 1;
    }
    size
}
