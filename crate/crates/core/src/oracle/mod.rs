//! Brute-force ground truth: lattice points of `tP` found by scanning a box
//! and testing the facet inequalities. Shares no code with the cone or
//! Barnes machinery.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::piecewise::QuasiPolynomial;
use crate::exact::polynomial::lagrange_interpolate;
use crate::exact::scalar::pow;
use crate::geometry::hrep::scaled_integer_rows;
use crate::geometry::vector::{to_rational, IntegerVector};
use crate::geometry::{Membership, Polytope};
use crate::Rational;

/// Largest box the oracle will scan.
pub const MAX_CANDIDATES: u64 = 10_000_000;

/// Integer box `[lo_i, hi_i]` enclosing `tP`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DilatedBoundingBox {
    pub bounds: Vec<(BigInt, BigInt)>,
}

impl DilatedBoundingBox {
    pub fn new(polytope: &Polytope, t: &Rational) -> Self {
        let d = polytope.dimension();
        let bounds = (0..d)
            .map(|c| {
                let xs = polytope.vertices().iter().map(|v| &v[c] * t);
                let lo = xs.clone().min().expect("vertices");
                let hi = xs.max().expect("vertices");
                (lo.ceil().to_integer(), hi.floor().to_integer())
            })
            .collect();
        Self { bounds }
    }

    /// Number of integer points in the box.
    pub fn candidates(&self) -> BigInt {
        self.bounds
            .iter()
            .map(|(lo, hi)| if hi < lo { BigInt::zero() } else { hi - lo + 1 })
            .product()
    }
}

fn check_t(t: &Rational) -> Result<()> {
    if t > &Rational::zero() {
        Ok(())
    } else {
        Err(Error::Input(format!("dilation t = {t} must be positive")))
    }
}

fn small(x: &BigInt) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::Resource(format!("coordinate {x} too large for the oracle")))
}

/// Every lattice point of `tP` (closed) or its interior (open), sorted.
pub fn brute_points(polytope: &Polytope, t: &Rational, mode: Membership) -> Result<Vec<IntegerVector>> {
    check_t(t)?;
    let bbox = DilatedBoundingBox::new(polytope, t);
    let n = bbox.candidates();
    if n > BigInt::from(MAX_CANDIDATES) {
        return Err(Error::Resource(format!(
            "bounding box of {t}P has {n} candidates (limit {MAX_CANDIDATES})"
        )));
    }
    // <normal, p> <= floor(t b) closed, <= ceil(t b) - 1 open
    let mut rows: Vec<(Vec<i64>, i128)> = Vec::new();
    for (normal, num, den) in scaled_integer_rows(polytope.facets()) {
        let scaled = Rational::new(num, den) * t;
        let bound = match mode {
            Membership::Closed => scaled.floor().to_integer(),
            Membership::Open => scaled.ceil().to_integer() - 1,
        };
        let normal = normal.iter().map(small).collect::<Result<Vec<_>>>()?;
        rows.push((normal, small(&bound)? as i128));
    }
    let bounds: Vec<(i64, i64)> = bbox
        .bounds
        .iter()
        .map(|(l, h)| Ok((small(l)?, small(h)?)))
        .collect::<Result<_>>()?;
    let d = bounds.len();
    let mut out = Vec::new();
    if bounds.iter().any(|(l, h)| h < l) {
        return Ok(out);
    }
    let mut p: Vec<i64> = bounds.iter().map(|b| b.0).collect();
    loop {
        let ok = rows.iter().all(|(nrm, b)| {
            let s: i128 = nrm.iter().zip(&p).map(|(a, x)| *a as i128 * *x as i128).sum();
            s <= *b
        });
        if ok {
            out.push(p.iter().map(|&x| BigInt::from(x)).collect());
        }
        // odometer, last coordinate fastest
        let mut i = d;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if p[i] < bounds[i].1 {
                p[i] += 1;
                for (j, pj) in p.iter_mut().enumerate().skip(i + 1) {
                    *pj = bounds[j].0;
                }
                break;
            }
        }
    }
}

/// `|tP ∩ Z^d|` (closed) or `|tP° ∩ Z^d|` (open).
pub fn brute_count(polytope: &Polytope, t: &Rational, mode: Membership) -> Result<BigInt> {
    Ok(BigInt::from(brute_points(polytope, t, mode)?.len()))
}

/// `sum_{p in tP ∩ Z^d} <p, z>^m`.
pub fn brute_moment(polytope: &Polytope, t: &Rational, z: &[Rational], m: usize) -> Result<Rational> {
    if z.len() != polytope.dimension() {
        return Err(Error::Input("z has the wrong dimension".into()));
    }
    Ok(brute_points(polytope, t, Membership::Closed)?
        .iter()
        .map(|p| {
            let s: Rational = to_rational(p).iter().zip(z).map(|(a, b)| a * b).sum();
            pow(&s, m)
        })
        .sum())
}

/// Per-residue Lagrange fit of brute counts at `t = ρ + D i`, `i = 1..=d+1`,
/// confirmed at `i = d + 2`.
pub fn interpolated_quasipolynomial(polytope: &Polytope) -> Result<QuasiPolynomial<Rational>> {
    let d = polytope.dimension();
    let period = polytope
        .denominator()
        .to_u64()
        .filter(|&p| p <= 1_000)
        .ok_or_else(|| Error::Resource(format!("period {} too large", polytope.denominator())))?;
    let mut pieces = Vec::new();
    for rho in 0..period {
        let at = |i: u64| Rational::from_integer(BigInt::from(rho + period * i));
        let samples = (1..=d as u64 + 1)
            .map(|i| Ok((at(i), Rational::from_integer(brute_count(polytope, &at(i), Membership::Closed)?))))
            .collect::<Result<Vec<_>>>()?;
        let poly = lagrange_interpolate(&samples)?;
        let held = at(d as u64 + 2);
        let want = Rational::from_integer(brute_count(polytope, &held, Membership::Closed)?);
        if poly.eval(&held) != want {
            return Err(Error::InternalConsistency(format!(
                "residue {rho}: interpolant misses the held-out count at t = {held}"
            )));
        }
        pieces.push(poly);
    }
    QuasiPolynomial::new(pieces)
}

#[cfg(test)]
mod tests;
