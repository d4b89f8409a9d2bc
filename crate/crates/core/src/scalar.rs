//! Scalar traits shared by the matrix, polynomial and golden-field code.

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{Num, Signed};

/// A commutative ring element: enough for sums, products and evaluation.
pub trait Ring: Clone + Debug + PartialEq + Num + Neg<Output = Self> {}

impl<T> Ring for T where T: Clone + Debug + PartialEq + Num + Neg<Output = T> {}

/// A ring whose division is exact for every nonzero divisor.
///
/// Implemented for `f32`, `f64` and `Ratio<_>`. Integer types satisfy the
/// bounds but truncate, so the field algorithms must not be called on them.
pub trait Field: Ring {}

impl Field for f32 {}
impl Field for f64 {}
impl<I> Field for num_rational::Ratio<I> where num_rational::Ratio<I>: Ring {}

/// An ordered field, needed for sign tests during root isolation.
pub trait OrderedField: Field + PartialOrd + Signed {}

impl<T> OrderedField for T where T: Field + PartialOrd + Signed {}

/// `1 + 1 + … + 1` (`n` times), without a `FromPrimitive` bound.
pub(crate) fn from_count<T: Ring>(n: usize) -> T {
    let mut acc = T::zero();
    for _ in 0..n {
        acc = acc + T::one();
    }
    acc
}
