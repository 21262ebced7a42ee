//! Exact computations on four-dimensional compact solvmanifolds.
//!
//! The numerical core is generic over [`scalar::Scalar`]; the aliases below
//! fix the concrete types used by the decision procedures.

pub mod classify;
pub mod exact;
pub mod geom;
pub mod liealg;
pub mod models;
pub mod scalar;
pub mod wang;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use exact::{QPoly, ZPoly};
pub use liealg::{LieAlgebra, QLieAlgebra};

pub type Rational = BigRational;
pub type IntMatrix = exact::Matrix<BigInt>;
pub type QMatrix = exact::Matrix<BigRational>;
pub type SymbolicLieAlgebra = LieAlgebra<exact::MPoly>;
pub type FloatLieAlgebra = LieAlgebra<f64>;

/// Rationals serialize as `"p/q"`, or `"p"` for integers.
pub fn rational_string(r: &BigRational) -> String {
    r.to_string()
}
