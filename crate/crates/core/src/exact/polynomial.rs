use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use super::combinatorics::binomial_scalar;
use super::scalar::{from_usize, pow, Scalar};
use crate::error::{Error, Result};

/// Dense univariate polynomial in `t`, coefficient `k` multiplies `t^k`.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial
/// has an empty coefficient list and structural equality is polynomial
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnivariatePolynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> UnivariatePolynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `c0 + c1 * t`
    pub fn linear(c0: T, c1: T) -> Self {
        Self::new(vec![c0, c1])
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coefficients(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, t: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * t.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn differentiate(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * from_usize::<T>(k))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn integrate(&self) -> Self {
        let mut coeffs = vec![T::zero()];
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c.clone() / from_usize::<T>(k + 1)),
        );
        Self::new(coeffs)
    }

    pub fn pow(&self, n: usize) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `p(a*t + b)` as a polynomial in `t`.
    pub fn compose_affine(&self, a: &T, b: &T) -> Self {
        let mut out = vec![T::zero(); self.coeffs.len()];
        for (k, c) in self.coeffs.iter().enumerate() {
            // (a t + b)^k = sum_i C(k,i) a^i b^(k-i) t^i
            for (i, slot) in out.iter_mut().enumerate().take(k + 1) {
                let term = binomial_scalar::<T>(k, i) * pow(a, i) * pow(b, k - i);
                *slot = slot.clone() + c.clone() * term;
            }
        }
        Self::new(out)
    }

    /// True when every coefficient of odd (`odd = true`) or even power
    /// vanishes, i.e. the polynomial is even or odd respectively.
    pub fn has_parity(&self, odd: bool) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| (k % 2 == 1) == odd || c.is_zero())
    }
}

impl<T: Scalar> Add for &UnivariatePolynomial<T> {
    type Output = UnivariatePolynomial<T>;
    fn add(self, rhs: Self) -> Self::Output {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UnivariatePolynomial::new(
            (0..n)
                .map(|k| self.coefficient(k) + rhs.coefficient(k))
                .collect(),
        )
    }
}

impl<T: Scalar> Sub for &UnivariatePolynomial<T> {
    type Output = UnivariatePolynomial<T>;
    fn sub(self, rhs: Self) -> Self::Output {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UnivariatePolynomial::new(
            (0..n)
                .map(|k| self.coefficient(k) - rhs.coefficient(k))
                .collect(),
        )
    }
}

impl<T: Scalar> Mul for &UnivariatePolynomial<T> {
    type Output = UnivariatePolynomial<T>;
    fn mul(self, rhs: Self) -> Self::Output {
        if self.is_zero() || rhs.is_zero() {
            return UnivariatePolynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UnivariatePolynomial::new(out)
    }
}

impl<T: Scalar> Neg for &UnivariatePolynomial<T> {
    type Output = UnivariatePolynomial<T>;
    fn neg(self) -> Self::Output {
        UnivariatePolynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for UnivariatePolynomial<T> {
            type Output = UnivariatePolynomial<T>;
            fn $m(self, rhs: Self) -> Self::Output {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar + fmt::Display> fmt::Display for UnivariatePolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
        }
        Ok(())
    }
}

impl<T> Serialize for UnivariatePolynomial<T>
where
    T: Scalar + std::fmt::Display,
{
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coefficients().iter().map(|c| c.to_string()))
    }
}

/// Unique polynomial of degree `< samples.len()` through the given points.
pub fn lagrange_interpolate<T: Scalar>(samples: &[(T, T)]) -> Result<UnivariatePolynomial<T>> {
    if samples.is_empty() {
        return Err(Error::Input("interpolation needs at least one sample".into()));
    }
    for (i, (ti, _)) in samples.iter().enumerate() {
        if samples[..i].iter().any(|(tj, _)| tj == ti) {
            return Err(Error::Input("duplicate interpolation abscissa".into()));
        }
    }
    let mut out = UnivariatePolynomial::zero();
    for (i, (ti, yi)) in samples.iter().enumerate() {
        let mut basis = UnivariatePolynomial::constant(yi.clone());
        for (j, (tj, _)) in samples.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = ti.clone() - tj.clone();
            let factor = UnivariatePolynomial::linear(
                -tj.clone() / denom.clone(),
                T::one() / denom,
            );
            basis = &basis * &factor;
        }
        out = &out + &basis;
    }
    Ok(out)
}
