use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::vector::{dot_int_rat, to_rational, IntegerVector, RationalVector};
use crate::error::{Error, Result};
use crate::exact::linalg::{determinant, invert, mat_vec, transpose, Matrix};

/// Tangent cone data at one vertex: apex `v`, primitive edge rows
/// `w_1(v), ..., w_d(v)` pointing into the polytope, and `|det M_v|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCone {
    apex: RationalVector,
    edges: Vec<IntegerVector>,
    volume: BigInt,
    // (M_v^T)^{-1}: maps x to its coordinates in the edge basis
    edge_coords: Matrix<BigRational>,
}

impl VertexCone {
    pub fn new(apex: RationalVector, edges: Vec<IntegerVector>) -> Result<Self> {
        let d = apex.len();
        if edges.len() != d || edges.iter().any(|w| w.len() != d) {
            return Err(Error::Input(format!("cone needs {d} edge vectors of length {d}")));
        }
        let m: Matrix<BigRational> = edges.iter().map(|w| to_rational(w)).collect();
        let det = determinant(&m)?;
        if det.is_zero() {
            return Err(Error::DegenerateGeometry(
                "edge vectors at a vertex are linearly dependent".into(),
            ));
        }
        let edge_coords = invert(&transpose(&m))?;
        Ok(Self {
            apex,
            edges,
            volume: det.abs().to_integer(),
            edge_coords,
        })
    }

    pub fn dimension(&self) -> usize {
        self.apex.len()
    }

    pub fn apex(&self) -> &RationalVector {
        &self.apex
    }

    /// Rows of `M_v`.
    pub fn edges(&self) -> &[IntegerVector] {
        &self.edges
    }

    /// `|det M_v|`, the number of lattice points in the parallelepiped.
    pub fn volume(&self) -> &BigInt {
        &self.volume
    }

    pub fn is_unimodular(&self) -> bool {
        self.volume.is_one()
    }

    /// `lambda` with `x = M_v^T lambda`.
    pub fn edge_coordinates(&self, x: &[BigRational]) -> RationalVector {
        mat_vec(&self.edge_coords, x)
    }

    /// `M_v^T lambda`.
    pub fn combine(&self, lambda: &[BigRational]) -> RationalVector {
        let d = self.dimension();
        (0..d)
            .map(|c| {
                self.edges
                    .iter()
                    .zip(lambda)
                    .map(|(w, l)| l * BigRational::from_integer(w[c].clone()))
                    .sum()
            })
            .collect()
    }

    /// `a_v = M_v z`.
    pub fn linear_forms(&self, z: &[BigRational]) -> RationalVector {
        self.edges.iter().map(|w| dot_int_rat(w, z)).collect()
    }

    /// Reduce `x` modulo the edge lattice into the half-open parallelepiped.
    pub fn reduce_mod_lattice(&self, x: &[BigRational]) -> RationalVector {
        let lambda: RationalVector = self
            .edge_coordinates(x)
            .into_iter()
            .map(|l| &l - l.floor())
            .collect();
        self.combine(&lambda)
    }

    /// Integer bounding box of `parallelepiped + s` for every `s` in `shifts`.
    pub(crate) fn bounding_box(&self, shifts: &[RationalVector]) -> Vec<(BigInt, BigInt)> {
        let d = self.dimension();
        let mut lo: Vec<Option<BigRational>> = vec![None; d];
        let mut hi: Vec<Option<BigRational>> = vec![None; d];
        for mask in 0u32..(1 << d) {
            let corner: Vec<BigRational> = (0..d)
                .map(|c| {
                    (0..d)
                        .filter(|k| mask & (1 << k) != 0)
                        .map(|k| BigRational::from_integer(self.edges[k][c].clone()))
                        .sum()
                })
                .collect();
            for s in shifts {
                for c in 0..d {
                    let x = &corner[c] + &s[c];
                    if lo[c].as_ref().is_none_or(|l| &x < l) {
                        lo[c] = Some(x.clone());
                    }
                    if hi[c].as_ref().is_none_or(|h| &x > h) {
                        hi[c] = Some(x);
                    }
                }
            }
        }
        lo.into_iter()
            .zip(hi)
            .map(|(l, h)| {
                (
                    l.expect("shifts non-empty").ceil().to_integer(),
                    h.expect("shifts non-empty").floor().to_integer(),
                )
            })
            .collect()
    }

    /// `(parallelepiped + s) ∩ Z^d`, sorted lexicographically.
    pub fn enumerate_shifted_parallelepiped(&self, shift: &[BigRational]) -> Vec<IntegerVector> {
        let bounds = self.bounding_box(&[shift.to_vec()]);
        let base = self.edge_coordinates(shift);
        let mut out = Vec::new();
        for_each_lattice_point(&bounds, |p| {
            let lambda = self.edge_coordinates(&to_rational(p));
            let inside = lambda.iter().zip(&base).all(|(l, b)| {
                let x = l - b;
                !x.is_negative() && x < BigRational::one()
            });
            if inside {
                out.push(p.to_vec());
            }
        });
        out
    }
}

/// Visits every integer point of the box in lexicographic order.
pub(crate) fn for_each_lattice_point(bounds: &[(BigInt, BigInt)], mut f: impl FnMut(&[BigInt])) {
    if bounds.iter().any(|(l, h)| l > h) {
        return;
    }
    let mut p: Vec<BigInt> = bounds.iter().map(|(l, _)| l.clone()).collect();
    if p.is_empty() {
        return;
    }
    loop {
        f(&p);
        let mut c = p.len();
        loop {
            if c == 0 {
                return;
            }
            c -= 1;
            if p[c] < bounds[c].1 {
                p[c] += 1;
                for (k, slot) in p.iter_mut().enumerate().skip(c + 1) {
                    *slot = bounds[k].0.clone();
                }
                break;
            }
        }
    }
}

pub fn enumerate_shifted_parallelepiped(cone: &VertexCone, shift: &[BigRational]) -> Vec<IntegerVector> {
    cone.enumerate_shifted_parallelepiped(shift)
}
