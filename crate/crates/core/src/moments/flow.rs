use std::collections::BTreeSet;

use num_traits::One;

use crate::geometry::vector::{to_rational, RationalVector};
use crate::geometry::VertexCone;
use crate::Rational;

/// One closed geodesic of the integer-time flow `x ↦ x - v (mod Λ)`.
///
/// `lattice_points` are the cell's lattice points the geodesic passes
/// through; `positions` are every torus position visited at integer times
/// starting from the first lattice point, in visiting order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowOrbit {
    pub lattice_points: Vec<RationalVector>,
    pub positions: Vec<RationalVector>,
}

impl FlowOrbit {
    /// Number of lattice points on the orbit.
    pub fn len(&self) -> usize {
        self.lattice_points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice_points.is_empty()
    }

    /// Integer steps until the flow returns to its start.
    pub fn period(&self) -> usize {
        self.positions.len()
    }
}

fn shifted(cone: &VertexCone, p: &[Rational], t: &Rational) -> RationalVector {
    let x: RationalVector = p.iter().zip(cone.apex()).map(|(a, v)| a - v * t).collect();
    cone.reduce_mod_lattice(&x)
}

/// Torus positions `Z^d - tv (mod Λ)` inside `Π_v`, sorted.
pub fn lattice_flow_points(cone: &VertexCone, t: &Rational) -> Vec<RationalVector> {
    let mut pts = lattice_flow_tracks(cone, t);
    pts.sort();
    pts
}

/// Position at time `t` of each lattice point of `Π_v`, indexed like the
/// sorted `t = 0` points, so consecutive samples trace continuous paths.
pub fn lattice_flow_tracks(cone: &VertexCone, t: &Rational) -> Vec<RationalVector> {
    let zero = vec![Rational::from_integer(0.into()); cone.dimension()];
    cone.enumerate_shifted_parallelepiped(&zero)
        .iter()
        .map(|p| shifted(cone, &to_rational(p), t))
        .collect()
}

/// Partition of `Π_v ∩ Z^d` into closed geodesics of the integer-time flow.
pub fn flow_orbits(cone: &VertexCone) -> Vec<FlowOrbit> {
    let zero = vec![Rational::from_integer(0.into()); cone.dimension()];
    let start_points: Vec<RationalVector> = cone
        .enumerate_shifted_parallelepiped(&zero)
        .iter()
        .map(|p| to_rational(p))
        .collect();
    let one = Rational::one();
    let mut seen = BTreeSet::new();
    let mut orbits = Vec::new();
    for p in &start_points {
        if seen.contains(p) {
            continue;
        }
        let mut positions = vec![p.clone()];
        let mut x = shifted(cone, p, &one);
        while &x != p {
            let next = shifted(cone, &x, &one);
            positions.push(x);
            x = next;
        }
        let mut lattice_points: Vec<RationalVector> = positions
            .iter()
            .filter(|q| q.iter().all(|c| c.is_integer()))
            .cloned()
            .collect();
        lattice_points.sort();
        seen.extend(lattice_points.iter().cloned());
        orbits.push(FlowOrbit {
            lattice_points,
            positions,
        });
    }
    orbits
}
