//! Exact computations with Leibniz algebras and Leibniz n-algebras.
//!
//! Every structure is generic over an exact [`Scalar`] field; the crate is
//! normally used through the rational aliases below.

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod exactlin;
pub mod functors;
pub mod ideals;
pub mod io;
pub mod random;
mod scalar;
pub mod solvability;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{is_zero_vec, unit, Scalar};

/// Arbitrary-precision rationals, the default field.
pub type Rational = num_rational::BigRational;
/// Machine-word rationals; faster, but may overflow on large computations.
pub type SmallRational = num_rational::Rational64;

pub type RationalMatrix = exactlin::Matrix<Rational>;
pub type RationalSubspace = exactlin::Subspace<Rational>;
pub type RationalAlgebra = algebra::NAryAlgebra<Rational>;
pub type RationalMap = algebra::LinearMap<Rational>;
