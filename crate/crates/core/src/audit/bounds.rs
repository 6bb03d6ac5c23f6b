//! Known upper bounds on the edge count of k-planar graphs.

use serde::Serialize;
use thiserror::Error;

use crate::scalar::Scalar;

/// `coefficient * n - constant`, with the coefficient stored as a fraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub k: usize,
    pub coefficient: (i64, i64),
    pub constant: i64,
    pub note: &'static str,
}

impl BoundEntry {
    pub fn value<T: Scalar>(&self, n: usize) -> T {
        T::ratio(self.coefficient.0, self.coefficient.1) * T::from_count(n) - T::from_i64(self.constant).unwrap()
    }

    pub fn formula(&self) -> String {
        let (p, q) = self.coefficient;
        let coefficient = if q == 1 { format!("{p}n") } else { format!("{p}n/{q}") };
        format!("{coefficient} - {}", self.constant)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundTable {
    pub entries: Vec<BoundEntry>,
}

impl Default for BoundTable {
    fn default() -> Self {
        let entry = |k, coefficient, constant, note| BoundEntry { k, coefficient, constant, note };
        Self {
            entries: vec![
                entry(1, (4, 1), 8, "tight for 1-planar graphs"),
                entry(2, (5, 1), 10, "tight for 2-planar graphs"),
                entry(3, (11, 2), 11, "tight for 3-planar graphs"),
                entry(4, (6, 1), 12, "for 4-planar graphs"),
            ],
        }
    }
}

impl BoundTable {
    pub fn entry(&self, k: usize) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.k == k)
    }
}

/// Leading constant of the general bound for any k.
pub const GENERAL_COEFFICIENT: f64 = 4.1208;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum BoundError {
    #[error("no exact bound for k = {k}; the general bound 4.1208 * sqrt(k) * n gives {general:.3}")]
    UnsupportedK { k: usize, general: f64 },
    #[error("bounds need at least 3 vertices, got {0}")]
    TooFewVertices(usize),
}

/// The general `4.1208 * sqrt(k) * n` bound, for information only.
pub fn general_bound(n: usize, k: usize) -> f64 {
    GENERAL_COEFFICIENT * (k as f64).sqrt() * n as f64
}

/// Largest edge count allowed by the table for `k` in `1..=4`, rounded down.
pub fn k_bound(n: usize, k: usize) -> Result<i64, BoundError> {
    k_bound_exact::<num_rational::Rational64>(n, k).map(|v| v.floor_to_i64())
}

/// Unrounded table value.
pub fn k_bound_exact<T: Scalar>(n: usize, k: usize) -> Result<T, BoundError> {
    if n < 3 {
        return Err(BoundError::TooFewVertices(n));
    }
    BoundTable::default()
        .entry(k)
        .map(|e| e.value(n))
        .ok_or(BoundError::UnsupportedK { k, general: general_bound(n, k) })
}
