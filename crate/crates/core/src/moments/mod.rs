//! Discrete moments of shifted half-open parallelepipeds, lattice flows on
//! the torus `R^d / Λ` and their exact piecewise-polynomial form in `t`.

mod flow;
mod piecewise;

pub use flow::{flow_orbits, lattice_flow_points, lattice_flow_tracks, FlowOrbit};
pub use piecewise::piecewise_moment;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::vector::dot_int_rat;
use crate::geometry::VertexCone;
use crate::Rational;

/// Which lattice flow the moment sums over.
///
/// `Closed` sums `<q - tv, z>^n` over `(Π_v + tv) ∩ Z^d`; `Open` sums
/// `<q + tv, z>^n` over `(Π_v - tv) ∩ Z^d`, the flow used for interiors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Closed,
    Open,
}

/// Parameters of a single discrete moment `μ_n(Π_v, t)`.
#[derive(Clone, Debug)]
pub struct MomentRequest<'a> {
    pub cone: &'a VertexCone,
    pub t: Rational,
    pub z: Vec<Rational>,
    pub n: usize,
    pub orientation: Orientation,
}

impl MomentRequest<'_> {
    pub fn evaluate(&self) -> Result<Rational> {
        discrete_moment(self.cone, &self.t, &self.z, self.n, self.orientation)
    }
}

/// Errors unless every `<w_k(v), z>` is nonzero.
pub fn check_generic(cone: &VertexCone, z: &[Rational]) -> Result<()> {
    if z.len() != cone.dimension() {
        return Err(Error::Input(format!(
            "z has {} entries, expected {}",
            z.len(),
            cone.dimension()
        )));
    }
    if let Some(w) = cone.edges().iter().find(|w| dot_int_rat(w, z).is_zero()) {
        return Err(Error::Genericity(format!("z is orthogonal to edge {w:?}")));
    }
    Ok(())
}

/// Values `<q ∓ tv, z>` over the lattice points of the flowed cell.
pub fn flow_values(cone: &VertexCone, t: &Rational, z: &[Rational], orientation: Orientation) -> Vec<Rational> {
    let tv: Vec<Rational> = cone.apex().iter().map(|x| x * t).collect();
    let vz: Rational = tv.iter().zip(z).map(|(a, b)| a * b).sum();
    let (shift, offset) = match orientation {
        Orientation::Closed => (tv, -vz),
        Orientation::Open => (tv.iter().map(|x| -x).collect(), vz),
    };
    cone.enumerate_shifted_parallelepiped(&shift)
        .iter()
        .map(|q| dot_int_rat(q, z) + &offset)
        .collect()
}

/// `μ_n(Π_v, t)` for one `n`.
pub fn discrete_moment(
    cone: &VertexCone,
    t: &Rational,
    z: &[Rational],
    n: usize,
    orientation: Orientation,
) -> Result<Rational> {
    Ok(moment_sequence(cone, t, z, n, orientation)?.swap_remove(n))
}

/// `[μ_0, ..., μ_{n_max}]` from a single enumeration of the cell.
pub fn moment_sequence(
    cone: &VertexCone,
    t: &Rational,
    z: &[Rational],
    n_max: usize,
    orientation: Orientation,
) -> Result<Vec<Rational>> {
    check_generic(cone, z)?;
    let values = flow_values(cone, t, z, orientation);
    let mut out = vec![Rational::zero(); n_max + 1];
    for x in &values {
        let mut p = Rational::from_integer(1.into());
        for slot in out.iter_mut() {
            *slot += &p;
            p *= x;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
