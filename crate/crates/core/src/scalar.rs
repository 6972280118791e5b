//! The exact integer type every computation is generic over.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact, signed integer type.
///
/// Implemented for every type meeting the bounds, in particular `i64`,
/// `i128` and [`num_bigint::BigInt`]. Machine integers are faster but
/// overflow on large inputs; `BigInt` never does.
pub trait Scalar:
    Integer
    + Signed
    + Clone
    + Debug
    + Display
    + Hash
    + FromPrimitive
    + ToPrimitive
    + FromStr
    + Send
    + Sync
    + 'static
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every scalar holds an i64")
    }

    fn from_count(v: usize) -> Self {
        Self::from_usize(v).expect("count does not fit the scalar type")
    }

    /// Converts to `usize`, for values known to be small and nonnegative.
    fn as_count(&self) -> usize {
        self.to_usize()
            .expect("value is not a small nonnegative integer")
    }
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + Hash
        + FromPrimitive
        + ToPrimitive
        + FromStr
        + Send
        + Sync
        + 'static
{
}

/// Dot product of two equally long integer vectors.
pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

pub fn sub_vec<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() - y.clone())
        .collect()
}

pub fn add_vec<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() + y.clone())
        .collect()
}

pub fn scale_vec<T: Scalar>(k: &T, a: &[T]) -> Vec<T> {
    a.iter().map(|x| k.clone() * x.clone()).collect()
}

/// Converts a vector of `i64` literals into scalars.
pub fn vec_from<T: Scalar>(v: &[i64]) -> Vec<T> {
    v.iter().map(|&x| T::from_int(x)).collect()
}
