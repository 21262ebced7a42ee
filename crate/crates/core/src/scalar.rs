//! Scalar abstractions shared by the matrix, Lie algebra and form code.
//!
//! Everything that only needs ring operations (brackets, the Nijenhuis
//! tensor, characteristic polynomials, determinants) is generic over
//! [`Scalar`]. Rank, kernels and cohomology need exact division and are
//! generic over [`Field`], which is only implemented for exact types.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Zero};

/// A commutative ring element with exact equality.
///
/// Blanket-implemented, so `f64`, `BigInt`, `BigRational`,
/// [`crate::exact::MPoly`] and [`crate::exact::NumberFieldElem`] all qualify.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + FromPrimitive
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every scalar type represents small integers")
    }
}

impl<T> Scalar for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + FromPrimitive
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// An exact field: zero tests are decisions, not tolerances.
pub trait Field: Scalar + Div<Output = Self> {}

impl Field for BigRational {}

/// Integers embed in every scalar type; used when building catalogs generically.
pub fn int<T: Scalar>(v: i64) -> T {
    T::from_int(v)
}

/// Converts an arbitrary-precision integer into a rational.
pub fn bigint_to_rational(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}
