//! The scalar abstraction every structure in this crate is generic over.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::{FromPrimitive, NumAssignRef, NumRef};

/// An exact field element.
///
/// All linear algebra in the crate relies on exact zero tests: RREF
/// canonicity, subspace equality and the identity checks would all be
/// meaningless under rounding. Any type implementing the num-traits
/// arithmetic bundle gets this trait for free, but only exact fields
/// (such as [`num_rational::BigRational`]) give sound answers.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + NumRef
    + NumAssignRef
    + Neg<Output = Self>
    + FromPrimitive
    + Send
    + Sync
    + 'static
{
    /// Embeds a machine integer.
    fn from_int(k: i64) -> Self {
        Self::from_i64(k).expect("every integer embeds in a field of characteristic zero")
    }
}

impl<T> Scalar for T where
    T: Clone
        + Debug
        + Display
        + PartialEq
        + NumRef
        + NumAssignRef
        + Neg<Output = T>
        + FromPrimitive
        + Send
        + Sync
        + 'static
{
}

/// `acc += a * b` without consuming `a` or `b`.
#[inline]
pub(crate) fn fma<S: Scalar>(acc: &mut S, a: &S, b: &S) {
    if a.is_zero() || b.is_zero() {
        return;
    }
    *acc += a.clone() * b;
}

/// Unit coordinate vector `e_i` of length `dim`.
pub fn unit<S: Scalar>(dim: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); dim];
    v[i] = S::one();
    v
}

pub fn is_zero_vec<S: Scalar>(v: &[S]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// `y += c * x`, componentwise.
pub(crate) fn axpy<S: Scalar>(y: &mut [S], c: &S, x: &[S]) {
    if c.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        fma(yi, c, xi);
    }
}
