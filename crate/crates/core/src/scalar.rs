//! Coefficient traits.
//!
//! Ring-level arithmetic (sums, products, division by monic polynomials,
//! braid matrices) works over any [`Scalar`]; Euclidean operations need a
//! [`Field`]. The crate root fixes the concrete choices used throughout:
//! exact big rationals for module calculus and big integers for Burau
//! matrices.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_integer::Integer;
use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, One, Signed, Zero};

/// Coefficient ring of a Laurent polynomial.
pub trait Scalar: Clone + PartialEq + Debug + Display + Num + Signed + FromPrimitive {
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("every scalar ring contains the integers")
    }

    /// Coefficients of the product of two nonempty coefficient vectors.
    fn convolve(a: &[Self], b: &[Self]) -> Vec<Self> {
        let mut out = vec![Self::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = out[i + j].clone() + x.clone() * y.clone();
            }
        }
        out
    }
}

macro_rules! plain_scalar {
    ($($t:ty),*) => {$( impl Scalar for $t {} )*};
}

plain_scalar!(i32, i64, i128, f32, f64, BigInt, Ratio<i32>, Ratio<i64>, Ratio<i128>);

/// Rational products are computed over the integers after clearing
/// denominators, so that only the final coefficients are reduced.
impl Scalar for BigRational {
    fn convolve(a: &[Self], b: &[Self]) -> Vec<Self> {
        fn clear(v: &[BigRational]) -> (Vec<BigInt>, BigInt) {
            let den = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            let ints = v.iter().map(|c| c.numer() * (&den / c.denom())).collect();
            (ints, den)
        }
        let (ia, da) = clear(a);
        let (ib, db) = clear(b);
        let den = da * db;
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in ia.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in ib.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out.into_iter().map(|c| BigRational::new(c, den.clone())).collect()
    }
}

/// Scalars in which every nonzero element is invertible and division is exact.
///
/// Only exact fields implement this; floating point types are deliberately
/// absent because gcd and divisibility are meaningless under rounding.
pub trait Field: Scalar {}

impl<I> Field for Ratio<I>
where
    I: Clone + Integer + Signed + Debug + Display,
    Ratio<I>: Scalar,
{
}

/// Scalars that can be read from coefficient text such as `3`, `-2` or `3/4`.
pub trait ParseScalar: Scalar + FromStr {}

impl<T: Scalar + FromStr> ParseScalar for T {}
