//! Barnes numbers `B_k(a)` and Barnes polynomials `B_k(t, a)`.
//!
//! `x^d e^{tx} / prod_i (e^{a_i x} - 1) = sum_k B_k(t, a) x^k / k!`, and the
//! Barnes numbers are the constant terms. Everything here is generic over
//! [`Scalar`]; the counting code instantiates it with exact rationals.

mod cache;

pub use cache::BarnesCache;

use crate::error::{Error, Result};
use crate::exact::combinatorics::{bernoulli_numbers, binomial_scalar};
use crate::exact::scalar::{from_usize, pow, powi, Scalar};
use crate::exact::UnivariatePolynomial;

/// The vector `a = (a_1, ..., a_d)` of linear forms at one vertex, all nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForms<T> {
    entries: Vec<T>,
}

impl<T: Scalar> LinearForms<T> {
    pub fn new(entries: Vec<T>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Input("linear form vector is empty".into()));
        }
        if let Some(i) = entries.iter().position(|a| a.is_zero()) {
            return Err(Error::Genericity(format!("linear form a_{} vanishes", i + 1)));
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn dimension(&self) -> usize {
        self.entries.len()
    }

    /// `a_1 * ... * a_d`.
    pub fn product(&self) -> T {
        self.entries.iter().fold(T::one(), |acc, a| acc * a.clone())
    }

    pub fn scaled(&self, lambda: &T) -> Result<Self> {
        Self::new(self.entries.iter().map(|a| a.clone() * lambda.clone()).collect())
    }
}

/// `[s_1, ..., s_{r_max}]` with `s_r = sum_j a_j^r`.
pub fn power_sums<T: Scalar>(a: &LinearForms<T>, r_max: usize) -> Vec<T> {
    (1..=r_max)
        .map(|r| a.entries.iter().fold(T::zero(), |acc, x| acc + pow(x, r)))
        .collect()
}

fn factorial_scalar<T: Scalar>(n: usize) -> T {
    (1..=n).fold(T::one(), |acc, i| acc * from_usize::<T>(i))
}

fn for_each_composition(k: usize, parts: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(rest: usize, slot: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if slot + 1 == cur.len() {
            cur[slot] = rest;
            f(cur);
            return;
        }
        for m in 0..=rest {
            cur[slot] = m;
            rec(rest - m, slot + 1, cur, f);
        }
    }
    let mut cur = vec![0; parts];
    rec(k, 0, &mut cur, f);
}

/// `B_k(a)` as the sum over compositions `m_1 + ... + m_d = k` of
/// `k!/(m_1!...m_d!) * prod_i a_i^{m_i - 1} B_{m_i}`.
pub fn barnes_number<T: Scalar>(k: usize, a: &LinearForms<T>) -> T {
    let bern = bernoulli_numbers::<T>(k);
    let fact: Vec<T> = (0..=k).map(factorial_scalar::<T>).collect();
    let mut total = T::zero();
    for_each_composition(k, a.dimension(), &mut |m| {
        let mut term = fact[k].clone();
        for (mi, ai) in m.iter().zip(&a.entries) {
            if bern[*mi].is_zero() {
                return;
            }
            term = term * powi(ai, *mi as i64 - 1) * bern[*mi].clone() / fact[*mi].clone();
        }
        total = total.clone() + term;
    });
    total
}

/// `[B_0(a), ..., B_{k_max}(a)]`.
///
/// Same sum as [`barnes_number`], organised as a truncated product of the
/// one-variable series `sum_m B_m a^{m-1} x^m / m!`, which is much cheaper
/// than enumerating compositions when `d` and `k` grow.
pub fn barnes_numbers_upto<T: Scalar>(k_max: usize, a: &LinearForms<T>) -> Vec<T> {
    let bern = bernoulli_numbers::<T>(k_max);
    let fact: Vec<T> = (0..=k_max).map(factorial_scalar::<T>).collect();
    let mut series = vec![T::zero(); k_max + 1];
    series[0] = T::one();
    for ai in &a.entries {
        let factor: Vec<T> = (0..=k_max)
            .map(|m| powi(ai, m as i64 - 1) * bern[m].clone() / fact[m].clone())
            .collect();
        let mut next = vec![T::zero(); k_max + 1];
        for (i, si) in series.iter().enumerate() {
            if si.is_zero() {
                continue;
            }
            for (j, fj) in factor.iter().enumerate().take(k_max + 1 - i) {
                next[i + j] = next[i + j].clone() + si.clone() * fj.clone();
            }
        }
        series = next;
    }
    series
        .into_iter()
        .zip(fact)
        .map(|(c, f)| c * f)
        .collect()
}

/// `B_k(t, a) = sum_j C(k, j) B_j(a) t^{k-j}` from precomputed Barnes numbers.
pub fn barnes_polynomial_from_numbers<T: Scalar>(k: usize, numbers: &[T]) -> UnivariatePolynomial<T> {
    let coeffs = (0..=k)
        .map(|p| binomial_scalar::<T>(k, p) * numbers[k - p].clone())
        .collect();
    UnivariatePolynomial::new(coeffs)
}

/// The Barnes polynomial `B_k(t, a)` in `t`.
pub fn barnes_polynomial<T: Scalar>(k: usize, a: &LinearForms<T>) -> UnivariatePolynomial<T> {
    barnes_polynomial_from_numbers(k, &barnes_numbers_upto(k, a))
}

/// `B_k(x, a)` at a single point.
pub fn barnes_value<T: Scalar>(k: usize, x: &T, numbers: &[T]) -> T {
    let mut acc = T::zero();
    for j in 0..=k {
        acc = acc + binomial_scalar::<T>(k, j) * numbers[j].clone() * pow(x, k - j);
    }
    acc
}

/// Classical Bernoulli polynomial `B_k(x) = sum_j C(k, j) B_j x^{k-j}`.
pub fn bernoulli_polynomial<T: Scalar>(k: usize) -> UnivariatePolynomial<T> {
    barnes_polynomial_from_numbers(k, &bernoulli_numbers::<T>(k))
}
