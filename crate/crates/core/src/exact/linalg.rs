//! Small dense exact linear algebra over any [`Scalar`].

use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Row-major square or rectangular matrix.
pub type Matrix<T> = Vec<Vec<T>>;

fn check_square<T>(m: &[Vec<T>]) -> Result<usize> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::Input("matrix is not square".into()));
    }
    Ok(n)
}

/// Gaussian elimination; the first nonzero entry in a column is the pivot.
pub fn solve_linear_system<T: Scalar>(m: &[Vec<T>], b: &[T]) -> Result<Vec<T>> {
    let n = check_square(m)?;
    if b.len() != n {
        return Err(Error::Input("right-hand side has wrong length".into()));
    }
    let mut a: Vec<Vec<T>> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::DegenerateGeometry("singular linear system".into()))?;
        a.swap(col, pivot);
        let inv = T::one() / a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in col..=n {
                let v = a[col][c].clone() * f.clone();
                a[r][c] = a[r][c].clone() - v;
            }
        }
    }
    Ok(a.into_iter().map(|mut row| row.pop().expect("augmented")).collect())
}

pub fn determinant<T: Scalar>(m: &[Vec<T>]) -> Result<T> {
    let n = check_square(m)?;
    let mut a: Vec<Vec<T>> = m.to_vec();
    let mut det = T::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Ok(T::zero());
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        let p = a[col][col].clone();
        det = det * p.clone();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone() / p.clone();
            for c in col..n {
                let v = a[col][c].clone() * f.clone();
                a[r][c] = a[r][c].clone() - v;
            }
        }
    }
    Ok(det)
}

pub fn invert<T: Scalar>(m: &[Vec<T>]) -> Result<Matrix<T>> {
    let n = check_square(m)?;
    let mut cols = Vec::with_capacity(n);
    for i in 0..n {
        let e: Vec<T> = (0..n)
            .map(|j| if i == j { T::one() } else { T::zero() })
            .collect();
        cols.push(solve_linear_system(m, &e)?);
    }
    Ok((0..n)
        .map(|r| (0..n).map(|c| cols[c][r].clone()).collect())
        .collect())
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Matrix<T> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|c| m.iter().map(|row| row[c].clone()).collect())
        .collect()
}

pub fn mat_vec<T: Scalar>(m: &[Vec<T>], x: &[T]) -> Vec<T> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
        })
        .collect()
}

pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Rank by row reduction.
pub fn rank<T: Scalar>(m: &[Vec<T>]) -> usize {
    let mut a: Vec<Vec<T>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone() / a[r][c].clone();
            for k in c..cols {
                let v = a[r][k].clone() * f.clone();
                a[i][k] = a[i][k].clone() - v;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}
