use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// Field-like scalar the algebraic routines are generic over.
///
/// `BigRational` is the exact instance used everywhere in the counting
/// pipeline; `f32`/`f64` satisfy the bound too and are handy for quick
/// numeric sanity checks of the same formulas.
pub trait Scalar:
    Clone + Debug + PartialEq + Num + Neg<Output = Self> + FromPrimitive + Send + Sync
{
}

impl<T> Scalar for T where
    T: Clone + Debug + PartialEq + Num + Neg<Output = T> + FromPrimitive + Send + Sync
{
}

pub(crate) fn from_usize<T: Scalar>(n: usize) -> T {
    T::from_usize(n).expect("scalar type cannot represent a small integer")
}

/// `x^n` for a non-negative exponent.
pub fn pow<T: Scalar>(x: &T, n: usize) -> T {
    let mut acc = T::one();
    let mut base = x.clone();
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base.clone();
        }
        e >>= 1;
        if e > 0 {
            base = base.clone() * base;
        }
    }
    acc
}

/// `x^n` for a signed exponent; `x` must be nonzero when `n < 0`.
pub fn powi<T: Scalar>(x: &T, n: i64) -> T {
    if n >= 0 {
        pow(x, n as usize)
    } else {
        T::one() / pow(x, n.unsigned_abs() as usize)
    }
}
