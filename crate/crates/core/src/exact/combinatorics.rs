use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::scalar::{from_usize, Scalar};
use crate::error::{Error, Result};

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    // exact at every step: the running product is C(n-k+i, i)
    (1..=k).fold(BigUint::one(), |acc, i| acc * BigUint::from(n - k + i) / BigUint::from(i))
}

/// `k! / (parts[0]! * parts[1]! * ...)`.
pub fn multinomial(k: usize, parts: &[usize]) -> Result<BigUint> {
    let total: usize = parts.iter().sum();
    if total != k {
        return Err(Error::Input(format!(
            "multinomial parts sum to {total}, expected {k}"
        )));
    }
    let mut acc = BigUint::one();
    let mut seen = 0;
    for &p in parts {
        seen += p;
        acc *= binomial(seen, p);
    }
    Ok(acc)
}

/// `n! / (r! j! (n-r-j)!)`, zero when `r + j > n`.
pub fn trinomial(n: usize, r: usize, j: usize) -> BigUint {
    if r + j > n {
        return BigUint::zero();
    }
    binomial(n, r) * binomial(n - r, j)
}

pub(crate) fn binomial_scalar<T: Scalar>(n: usize, k: usize) -> T {
    // small arguments only; binomials up to C(40, 20) fit comfortably in u64
    let c = binomial(n, k);
    let digits = c.to_u64_digits();
    match digits.len() {
        0 => T::zero(),
        1 => T::from_u64(digits[0]).expect("scalar cannot hold binomial"),
        _ => panic!("binomial({n}, {k}) too large for a generic scalar"),
    }
}

/// Bernoulli numbers `B_0..=B_n` in any scalar type, with `B_1 = -1/2`.
///
/// Uses `sum_{k=0}^{m} C(m+1, k) B_k = 0` for `m >= 1`.
pub fn bernoulli_numbers<T: Scalar>(n: usize) -> Vec<T> {
    let mut b: Vec<T> = Vec::with_capacity(n + 1);
    b.push(T::one());
    for m in 1..=n {
        let mut s = T::zero();
        for (k, bk) in b.iter().enumerate() {
            s = s + binomial_scalar::<T>(m + 1, k) * bk.clone();
        }
        b.push(-s / from_usize::<T>(m + 1));
    }
    b
}

/// Exact `B_n` with the `B_1 = -1/2` convention.
pub fn bernoulli_number(n: usize) -> BigRational {
    bernoulli_numbers::<BigRational>(n)
        .pop()
        .expect("non-empty")
}

pub(crate) fn big(n: &BigUint) -> BigInt {
    BigInt::from(n.clone())
}
