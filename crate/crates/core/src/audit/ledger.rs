//! The edge-counting chain for triangulated skeletons, evaluated step by
//! step with its slack.

use std::fmt::Display;

use serde::{Serialize, Serializer};

use super::bounds::BoundTable;
use crate::scalar::Scalar;

pub(crate) fn as_display<T: Display, S: Serializer>(value: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = "<=")]
    Le,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Within,
    Tight,
    Exceeds,
}

impl Verdict {
    pub fn compare<T: PartialOrd>(value: T, bound: T) -> Self {
        if value < bound {
            Verdict::Within
        } else if value == bound {
            Verdict::Tight
        } else {
            Verdict::Exceeds
        }
    }
}

/// One link `previous relation expression` of the chain.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Scalar"))]
pub struct LedgerStep<T: Scalar> {
    pub relation: Relation,
    pub expression: String,
    #[serde(serialize_with = "as_display")]
    pub value: T,
    /// `value` minus the previous step's value.
    #[serde(serialize_with = "as_display")]
    pub slack: T,
    pub holds: bool,
    /// Unproven premise the step relies on, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub assumption: Option<String>,
}

/// Counts that feed the chain. `counts[i]` is the number of triangular
/// skeleton faces hosting exactly `i` sticks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LedgerInputs {
    pub n: usize,
    pub edges: usize,
    pub skeleton_edges: usize,
    pub counts: Vec<usize>,
    pub triangles: usize,
}

impl LedgerInputs {
    fn t<T: Scalar>(&self, i: usize) -> T {
        T::from_count(self.counts.get(i).copied().unwrap_or(0))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Scalar"))]
pub struct DensityLedger<T: Scalar> {
    pub k: usize,
    #[serde(serialize_with = "as_display")]
    pub edges: T,
    pub steps: Vec<LedgerStep<T>>,
    #[serde(serialize_with = "as_display")]
    pub bound: T,
    pub verdict: Verdict,
}

struct Chain<T: Scalar> {
    last: T,
    steps: Vec<LedgerStep<T>>,
}

impl<T: Scalar> Chain<T> {
    fn new(start: T) -> Self {
        Self { last: start, steps: Vec::new() }
    }

    fn push(&mut self, relation: Relation, expression: &str, value: T, assumption: Option<&str>) {
        let slack = value - self.last;
        let holds = match relation {
            Relation::Eq => slack.is_zero(),
            Relation::Le => slack >= T::zero(),
        };
        self.steps.push(LedgerStep {
            relation,
            expression: expression.to_owned(),
            value,
            slack,
            holds,
            assumption: assumption.map(str::to_owned),
        });
        self.last = value;
    }
}

impl<T: Scalar> DensityLedger<T> {
    /// The chain for k = 3, ending at `11n/2 - 11`.
    pub fn three(inp: &LedgerInputs) -> Self {
        let (t0, t1, t2, t3) = (inp.t::<T>(0), inp.t::<T>(1), inp.t::<T>(2), inp.t::<T>(3));
        let ep = T::from_count(inp.skeleton_edges);
        let tp = T::from_count(inp.triangles);
        let n = T::from_count(inp.n);
        let two = T::from_count(2);
        let three = T::from_count(3);
        let four = T::from_count(4);
        let five = T::from_count(5);
        let six = T::from_count(6);
        let edges = T::from_count(inp.edges);
        let entry = *BoundTable::default().entry(3).expect("k = 3 in table");

        let mut c = Chain::new(edges);
        c.push(Relation::Eq, "|E_p| + (t1 + 2t2 + 3t3)/2", ep + (t1 + two * t2 + three * t3) / two, None);
        c.push(Relation::Eq, "|E_p| + (t1 + t2 + t3) + (t3 - t1)/2", ep + (t1 + t2 + t3) + (t3 - t1) / two, None);
        c.push(Relation::Eq, "|E_p| + (t_p - t0) + (t3 - t1)/2", ep + (tp - t0) + (t3 - t1) / two, None);
        c.push(Relation::Le, "|E_p| + t_p + t3/2", ep + tp + t3 / two, None);
        c.push(Relation::Le, "|E_p| + 5t_p/4", ep + five * tp / four, None);
        c.push(Relation::Le, "3n - 6 + 5t_p/4", three * n - six + five * tp / four, None);
        c.push(Relation::Eq, "3n - 6 + 5(2n - 4)/4", three * n - six + five * (two * n - four) / four, None);
        let bound: T = entry.value(inp.n);
        c.push(Relation::Eq, &entry.formula(), bound, None);
        Self { k: 3, edges, steps: c.steps, bound, verdict: Verdict::compare(edges, bound) }
    }

    /// The chain for k = 4, ending at `6n - 12`. Its inequality step rests
    /// on `t4 <= t1 + t2`, which is only known to hold under extra premises.
    pub fn four(inp: &LedgerInputs) -> Self {
        let (t1, t2, t3, t4) = (inp.t::<T>(1), inp.t::<T>(2), inp.t::<T>(3), inp.t::<T>(4));
        let ep = T::from_count(inp.skeleton_edges);
        let tp = T::from_count(inp.triangles);
        let n = T::from_count(inp.n);
        let two = T::from_count(2);
        let three = T::from_count(3);
        let four = T::from_count(4);
        let six = T::from_count(6);
        let edges = T::from_count(inp.edges);
        let entry = *BoundTable::default().entry(4).expect("k = 4 in table");

        let mut c = Chain::new(edges);
        c.push(
            Relation::Eq,
            "|E_p| + (t1 + 2t2 + 3t3 + 4t4)/2",
            ep + (t1 + two * t2 + three * t3 + four * t4) / two,
            None,
        );
        c.push(
            Relation::Le,
            "|E_p| + 3(t1 + t2 + t3 + t4)/2",
            ep + three * (t1 + t2 + t3 + t4) / two,
            Some("t4 <= t1 + t2, which needs a triangulated skeleton for every optimal 4-planar graph"),
        );
        c.push(Relation::Le, "|E_p| + 3t_p/2", ep + three * tp / two, None);
        c.push(Relation::Le, "3n - 6 + 3t_p/2", three * n - six + three * tp / two, None);
        c.push(Relation::Eq, "3n - 6 + 3(2n - 4)/2", three * n - six + three * (two * n - four) / two, None);
        let bound: T = entry.value(inp.n);
        c.push(Relation::Eq, &entry.formula(), bound, None);
        Self { k: 4, edges, steps: c.steps, bound, verdict: Verdict::compare(edges, bound) }
    }

    pub fn holds(&self) -> bool {
        self.steps.iter().all(|s| s.holds)
    }

    /// Each step's left side is the previous right side, recovered as
    /// `value - slack`.
    pub fn is_consistent(&self) -> bool {
        let mut prev = self.edges;
        for s in &self.steps {
            if s.value - s.slack != prev {
                return false;
            }
            prev = s.value;
        }
        prev == self.bound
    }

    pub fn conditional_steps(&self) -> impl Iterator<Item = &LedgerStep<T>> {
        self.steps.iter().filter(|s| s.assumption.is_some())
    }
}
