//! Numeric traits shared by the counting ledgers and the layout code.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, Num, Signed};

/// Scalar for edge-count arithmetic. Bounds such as `11n/2 - 11` are not
/// integral for odd `n`, so the exact instantiation is a rational.
pub trait Scalar: Num + Signed + Copy + PartialOrd + FromPrimitive + Debug + Display {
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable in scalar")
    }

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num).unwrap() / Self::from_i64(den).unwrap()
    }

    /// Largest integer not above `self`.
    fn floor_to_i64(self) -> i64;
}

impl Scalar for f32 {
    fn floor_to_i64(self) -> i64 {
        self.floor() as i64
    }
}

impl Scalar for f64 {
    fn floor_to_i64(self) -> i64 {
        self.floor() as i64
    }
}

impl Scalar for num_rational::Rational64 {
    fn floor_to_i64(self) -> i64 {
        self.floor().to_integer()
    }
}

/// Coordinates for geometric helpers (straight-line fixtures, layouts).
pub trait Coord: Float + FromPrimitive + Debug + Display {}

impl Coord for f32 {}
impl Coord for f64 {}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    #[test]
    fn rational_floor() {
        assert_eq!(Rational64::ratio(11, 2).floor_to_i64(), 5);
        assert_eq!(Rational64::ratio(-1, 2).floor_to_i64(), -1);
        assert_eq!(5.5f64.floor_to_i64(), 5);
    }
}
