//! Coefficient fields.

use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num, Signed};

/// Coefficient type for every linear combination in the crate.
///
/// Blanket-implemented for any signed numeric type with division, so
/// `BigRational` (the default, see [`crate::Rational`]), `Ratio<i64>` and the
/// float types all qualify. Only exact fields give exact zero tests.
pub trait Scalar:
    Clone + Num + Signed + FromPrimitive + Debug + Display + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer not representable in coefficient type")
    }

    fn from_fraction(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    /// `(-1)^exponent`.
    fn sign(exponent: i64) -> Self {
        if exponent.rem_euclid(2) == 0 {
            Self::one()
        } else {
            -Self::one()
        }
    }
}

impl<T> Scalar for T where
    T: Clone + Num + Signed + FromPrimitive + Debug + Display + Send + Sync + 'static
{
}

/// `(-1)^(a*b)` as an integer.
#[inline]
pub(crate) fn koszul(a: u32, b: u32) -> i64 {
    if (a & 1) & (b & 1) == 1 {
        -1
    } else {
        1
    }
}
