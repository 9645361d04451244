use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::vector::{dot_int_rat, primitive_direction, IntegerVector, RationalVector};
use crate::error::{Error, Result};
use crate::exact::linalg::{determinant, rank, solve_linear_system};

/// Closed or open (strict) inequality checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Membership {
    Closed,
    Open,
}

/// `<normal, x> <= offset` with a primitive integer normal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Inequality {
    pub normal: IntegerVector,
    pub offset: BigRational,
}

impl Inequality {
    pub fn slack(&self, x: &[BigRational]) -> BigRational {
        &self.offset - dot_int_rat(&self.normal, x)
    }

    pub fn is_tight(&self, x: &[BigRational]) -> bool {
        self.slack(x).is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRepresentation {
    pub inequalities: Vec<Inequality>,
}

impl HRepresentation {
    pub fn contains(&self, x: &[BigRational], mode: Membership) -> bool {
        self.inequalities.iter().all(|ineq| {
            let s = ineq.slack(x);
            match mode {
                Membership::Closed => !s.is_negative(),
                Membership::Open => s.is_positive(),
            }
        })
    }

    pub fn len(&self) -> usize {
        self.inequalities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inequalities.is_empty()
    }

    /// Indices of inequalities tight at `x`.
    pub fn tight_at(&self, x: &[BigRational]) -> Vec<usize> {
        self.inequalities
            .iter()
            .enumerate()
            .filter(|(_, ineq)| ineq.is_tight(x))
            .map(|(i, _)| i)
            .collect()
    }
}

pub fn contains(h: &HRepresentation, x: &[BigRational], mode: Membership) -> bool {
    h.contains(x, mode)
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order.
pub(crate) fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Normal to the span of `rows` (`d - 1` vectors in `R^d`) via signed
/// maximal minors. All zero iff the rows are dependent.
fn orthogonal_complement(rows: &[RationalVector], d: usize) -> RationalVector {
    (0..d)
        .map(|skip| {
            let minor: Vec<RationalVector> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != skip)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let det = determinant(&minor).expect("square minor");
            if skip % 2 == 0 {
                det
            } else {
                -det
            }
        })
        .collect()
}

pub(crate) fn affine_rank(points: &[RationalVector]) -> usize {
    let Some(p0) = points.first() else {
        return 0;
    };
    let diffs: Vec<RationalVector> = points[1..]
        .iter()
        .map(|p| p.iter().zip(p0).map(|(a, b)| a - b).collect())
        .collect();
    if diffs.is_empty() {
        0
    } else {
        rank(&diffs)
    }
}

/// Exact H-representation of the convex hull of full-dimensional `vertices`
/// by enumerating hyperplanes through `d`-subsets. Inequalities are sorted.
pub fn facets_from_vertices(vertices: &[RationalVector], d: usize) -> Result<HRepresentation> {
    if d == 0 || vertices.len() < d + 1 || vertices.iter().any(|v| v.len() != d) {
        return Err(Error::DegenerateGeometry(format!(
            "need at least {} points of dimension {d}",
            d + 1
        )));
    }
    if affine_rank(vertices) < d {
        return Err(Error::DegenerateGeometry("points are not full-dimensional".into()));
    }
    let mut found: BTreeSet<Inequality> = BTreeSet::new();
    for_each_subset(vertices.len(), d, |subset| {
        let base = &vertices[subset[0]];
        let diffs: Vec<RationalVector> = subset[1..]
            .iter()
            .map(|&i| vertices[i].iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        let normal = orthogonal_complement(&diffs, d);
        if normal.iter().all(Zero::is_zero) {
            return;
        }
        let normal = primitive_direction(&normal).expect("nonzero normal");
        let offset = dot_int_rat(&normal, base);
        let mut above = false;
        let mut below = false;
        for v in vertices {
            let s = dot_int_rat(&normal, v) - &offset;
            above |= s.is_positive();
            below |= s.is_negative();
        }
        match (above, below) {
            (false, true) => {
                found.insert(Inequality { normal, offset });
            }
            (true, false) => {
                found.insert(Inequality {
                    normal: normal.iter().map(|x| -x).collect(),
                    offset: -offset,
                });
            }
            _ => {}
        }
    });
    if found.len() < d + 1 {
        return Err(Error::DegenerateGeometry("too few facets".into()));
    }
    Ok(HRepresentation {
        inequalities: found.into_iter().collect(),
    })
}

/// Vertices of a bounded H-polytope by intersecting `d`-subsets of facets.
/// Sorted lexicographically.
pub fn vertices_from_facets(h: &HRepresentation, d: usize) -> Vec<RationalVector> {
    let mut out: BTreeSet<RationalVector> = BTreeSet::new();
    for_each_subset(h.len(), d, |subset| {
        let m: Vec<RationalVector> = subset
            .iter()
            .map(|&i| {
                h.inequalities[i]
                    .normal
                    .iter()
                    .cloned()
                    .map(BigRational::from_integer)
                    .collect()
            })
            .collect();
        let b: RationalVector = subset
            .iter()
            .map(|&i| h.inequalities[i].offset.clone())
            .collect();
        if let Ok(x) = solve_linear_system(&m, &b) {
            if h.contains(&x, Membership::Closed) {
                out.insert(x);
            }
        }
    });
    out.into_iter().collect()
}

pub(crate) fn scaled_integer_rows(h: &HRepresentation) -> Vec<(IntegerVector, BigInt, BigInt)> {
    // (normal, offset numerator, offset denominator)
    h.inequalities
        .iter()
        .map(|ineq| {
            (
                ineq.normal.clone(),
                ineq.offset.numer().clone(),
                ineq.offset.denom().clone(),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn pts(xs: &[&[(i64, i64)]]) -> Vec<RationalVector> {
        xs.iter()
            .map(|p| p.iter().map(|&(n, d)| rat(n, d)).collect())
            .collect()
    }

    fn ineq(n: &[i64], b: BigRational) -> Inequality {
        Inequality {
            normal: n.iter().map(|&x| BigInt::from(x)).collect(),
            offset: b,
        }
    }

    #[test]
    fn standard_triangle_facets() {
        let v = pts(&[&[(0, 1), (0, 1)], &[(1, 1), (0, 1)], &[(0, 1), (1, 1)]]);
        let h = facets_from_vertices(&v, 2).unwrap();
        let expected = vec![
            ineq(&[-1, 0], int(0)),
            ineq(&[0, -1], int(0)),
            ineq(&[1, 1], int(1)),
        ];
        let mut got = h.inequalities.clone();
        got.sort();
        let mut want = expected;
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn square_has_four_facets() {
        let v = pts(&[
            &[(0, 1), (0, 1)],
            &[(1, 1), (0, 1)],
            &[(0, 1), (1, 1)],
            &[(1, 1), (1, 1)],
        ]);
        assert_eq!(facets_from_vertices(&v, 2).unwrap().len(), 4);
    }

    #[test]
    fn interval_facets() {
        let v = pts(&[&[(1, 2)], &[(3, 2)]]);
        let h = facets_from_vertices(&v, 1).unwrap();
        let mut got = h.inequalities.clone();
        got.sort();
        assert_eq!(got, vec![ineq(&[-1], rat(-1, 2)), ineq(&[1], rat(3, 2))]);
    }

    #[test]
    fn flat_input_is_degenerate() {
        let v = pts(&[&[(0, 1), (0, 1)], &[(1, 1), (1, 1)], &[(2, 1), (2, 1)]]);
        assert!(matches!(
            facets_from_vertices(&v, 2),
            Err(Error::DegenerateGeometry(_))
        ));
    }

    #[test]
    fn containment_modes() {
        let v = pts(&[&[(0, 1), (0, 1)], &[(1, 1), (0, 1)], &[(0, 1), (1, 1)]]);
        let h = facets_from_vertices(&v, 2).unwrap();
        assert!(contains(&h, &[int(0), int(0)], Membership::Closed));
        assert!(!contains(&h, &[int(0), int(0)], Membership::Open));
        assert!(contains(&h, &[rat(1, 4), rat(1, 4)], Membership::Open));
        assert!(!contains(&h, &[int(1), int(1)], Membership::Closed));
    }

    #[test]
    fn facet_vertex_round_trip() {
        let v = pts(&[
            &[(-1, 2), (-1, 4)],
            &[(7, 2), (3, 4)],
            &[(3, 2), (11, 4)],
        ]);
        let h = facets_from_vertices(&v, 2).unwrap();
        let mut want = v.clone();
        want.sort();
        assert_eq!(vertices_from_facets(&h, 2), want);
    }

    #[test]
    fn subsets_enumerated_in_order() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, |s| seen.push(s.to_vec()));
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], vec![0, 1]);
        assert_eq!(seen[5], vec![2, 3]);
    }
}
