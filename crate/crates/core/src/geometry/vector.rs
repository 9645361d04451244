use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::rational::denominator_lcm;

pub type IntegerVector = Vec<BigInt>;
pub type RationalVector = Vec<BigRational>;

pub fn to_rational(v: &[BigInt]) -> RationalVector {
    v.iter().cloned().map(BigRational::from_integer).collect()
}

pub fn is_integral(v: &[BigRational]) -> bool {
    v.iter().all(|x| x.is_integer())
}

/// The positive multiple of `u` that is an integer vector with gcd 1.
pub fn primitive_direction(u: &[BigRational]) -> Result<IntegerVector> {
    if u.iter().all(Zero::is_zero) {
        return Err(Error::Input("zero vector has no primitive direction".into()));
    }
    let l = denominator_lcm(u);
    let ints: Vec<BigInt> = u
        .iter()
        .map(|x| (x * BigRational::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    Ok(ints.into_iter().map(|x| x / &g).collect())
}

pub fn dot_int_rat(a: &[BigInt], b: &[BigRational]) -> BigRational {
    a.iter()
        .zip(b)
        .map(|(x, y)| y * BigRational::from_integer(x.clone()))
        .sum()
}

pub fn dot_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn coordinate_gcd(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x)).abs()
}
