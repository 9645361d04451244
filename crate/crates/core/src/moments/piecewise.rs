use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use super::check_generic;
use crate::error::{Error, Result};
use crate::exact::combinatorics::binomial_scalar;
use crate::exact::scalar::pow;
use crate::exact::PiecewisePolynomial;
use crate::geometry::vector::{dot_int_rat, to_rational};
use crate::geometry::VertexCone;
use crate::{Polynomial, Rational};

struct Candidate {
    alpha: Vec<Rational>,
    qz: Rational,
}

fn members(cands: &[Candidate], beta: &[Rational], t: &Rational) -> Vec<usize> {
    cands
        .iter()
        .enumerate()
        .filter(|(_, c)| {
            c.alpha.iter().zip(beta).all(|(a, b)| {
                let l = a - b * t;
                !l.is_negative() && l < Rational::one()
            })
        })
        .map(|(i, _)| i)
        .collect()
}

fn moment_polynomial(cands: &[Candidate], set: &[usize], vz: &Rational, n: usize) -> Polynomial {
    // sum_q (qz - t vz)^n = sum_j C(n, j) (-vz)^j t^j sum_q qz^(n-j)
    let sums: Vec<Rational> = (0..=n)
        .map(|e| set.iter().map(|&i| pow(&cands[i].qz, e)).sum())
        .collect();
    let neg = -vz;
    Polynomial::new(
        (0..=n)
            .map(|j| binomial_scalar::<Rational>(n, j) * pow(&neg, j) * &sums[n - j])
            .collect(),
    )
}

/// `μ_n(Π_v, t)` (closed orientation) on `(t_lo, t_hi]` as an exact
/// piecewise polynomial in `t`.
///
/// Breakpoints are kept only where the set of lattice points in
/// `Π_v + tv` actually changes.
pub fn piecewise_moment(
    cone: &VertexCone,
    z: &[Rational],
    n: usize,
    t_lo: &Rational,
    t_hi: &Rational,
) -> Result<PiecewisePolynomial<Rational>> {
    check_generic(cone, z)?;
    if t_lo.is_negative() || t_lo >= t_hi {
        return Err(Error::Input(format!("bad interval ({t_lo}, {t_hi}]")));
    }
    let v = cone.apex();
    let scaled = |t: &Rational| v.iter().map(|x| x * t).collect::<Vec<_>>();
    let bounds = cone.bounding_box(&[scaled(t_lo), scaled(t_hi)]);
    let beta = cone.edge_coordinates(v);
    let vz: Rational = v.iter().zip(z).map(|(a, b)| a * b).sum();

    let mut cands = Vec::new();
    let mut cuts: BTreeSet<Rational> = BTreeSet::new();
    crate::geometry::cone::for_each_lattice_point(&bounds, |q| {
        let alpha = cone.edge_coordinates(&to_rational(q));
        // skip points that never enter the cell on [t_lo, t_hi]
        let reachable = alpha.iter().zip(&beta).all(|(a, b)| {
            let (x, y) = (a - b * t_lo, a - b * t_hi);
            let (mn, mx) = if x < y { (x, y) } else { (y, x) };
            !(mx.is_negative() || mn >= Rational::one())
        });
        if !reachable {
            return;
        }
        for (a, b) in alpha.iter().zip(&beta) {
            if b.is_zero() {
                continue;
            }
            for edge in [a / b, (a - Rational::one()) / b] {
                if &edge > t_lo && &edge < t_hi {
                    cuts.insert(edge);
                }
            }
        }
        cands.push(Candidate {
            qz: dot_int_rat(q, z),
            alpha,
        });
    });

    let mut bps: Vec<Rational> = vec![t_lo.clone()];
    bps.extend(cuts);
    bps.push(t_hi.clone());

    // (open set, right breakpoint, point set) per elementary interval
    let mut segments: Vec<(Vec<usize>, Rational, Vec<usize>)> = Vec::new();
    for w in bps.windows(2) {
        let mid = (&w[0] + &w[1]) / Rational::from_integer(2.into());
        let open = members(&cands, &beta, &mid);
        let point = members(&cands, &beta, &w[1]);
        match segments.last_mut() {
            Some(last) if last.0 == last.2 && last.2 == open => {
                last.1 = w[1].clone();
                last.2 = point;
            }
            _ => segments.push((open, w[1].clone(), point)),
        }
    }

    let mut breakpoints = vec![t_lo.clone()];
    let mut open_pieces = Vec::new();
    let mut point_pieces = Vec::new();
    for (open, right, point) in segments {
        open_pieces.push(moment_polynomial(&cands, &open, &vz, n));
        point_pieces.push(moment_polynomial(&cands, &point, &vz, n));
        breakpoints.push(right);
    }
    PiecewisePolynomial::new(breakpoints, open_pieces, point_pieces)
}
