//! Floating-point scalar abstraction shared by every real-valued measure.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive};

/// A real scalar the measures can be evaluated in: `f32` or `f64`.
///
/// Clusterings and contingency counts stay integral; only the final
/// ratios, logarithms and feature arithmetic run in `Self`.
pub trait Scalar: Float + FromPrimitive + Sum + Debug + Display + Send + Sync + 'static {
    /// Converts a point or pair count. Counts beyond the mantissa round.
    fn from_count(count: usize) -> Self {
        Self::from_usize(count).expect("count representable as float")
    }

    fn from_wide(count: u128) -> Self {
        Self::from_u128(count).expect("count representable as float")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// `-p ln p` with the `0 ln 0 = 0` convention.
pub(crate) fn plogp<T: Scalar>(p: T) -> T {
    if p <= T::zero() {
        T::zero()
    } else {
        -p * p.ln()
    }
}

pub(crate) fn clamp_unit<T: Scalar>(value: T) -> T {
    value.max(T::zero()).min(T::one())
}
