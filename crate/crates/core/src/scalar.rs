//! Exact scalar fields the matrix kernel is generic over.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed};

/// An exact field element.
///
/// Equality must be exact: rank, determinant and the Penrose checks all
/// branch on `is_zero`. Floating-point types are deliberately not
/// implemented.
pub trait Scalar:
    Num + Clone + PartialEq + Debug + Display + std::ops::Neg<Output = Self> + Send + Sync
{
    /// Embeds an integer. Panics if the value does not fit the backing
    /// integer type (only possible for fixed-width rationals).
    fn from_i128(v: i128) -> Self;

    fn from_ratio(num: i128, den: i128) -> Self {
        Self::from_i128(num) / Self::from_i128(den)
    }

    /// `Some(k)` when the value is an integer that fits in `i64`.
    fn to_small_int(&self) -> Option<i64>;
}

impl<I> Scalar for Ratio<I>
where
    I: Integer + Signed + Clone + Debug + Display + Send + Sync + TryFrom<i128> + TryInto<i64>,
{
    fn from_i128(v: i128) -> Self {
        match I::try_from(v) {
            Ok(i) => Ratio::from_integer(i),
            Err(_) => panic!("integer {v} does not fit the rational's backing type"),
        }
    }

    fn to_small_int(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().clone().try_into().ok()
        } else {
            None
        }
    }
}
