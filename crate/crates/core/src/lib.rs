//! Exact Ehrhart quasi-polynomials and discrete moments of simple rational
//! polytopes, computed from Barnes polynomials of the vertex cones.
//!
//! Everything geometric is carried out over [`Rational`]. The polynomial,
//! linear-algebra and Barnes layers are generic over [`exact::Scalar`] so
//! they can also run in `f64` for quick sanity checks.

pub mod error;
pub mod exact;
pub mod barnes;
pub mod corpus;
pub mod ehrhart;
pub mod geometry;
pub mod moments;
pub mod oracle;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{PiecewisePolynomial, QuasiPolynomial, Scalar, UnivariatePolynomial};
pub use geometry::{Polytope, VertexCone};

pub type Integer = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;
pub type Polynomial = UnivariatePolynomial<Rational>;
pub type Polynomial64 = UnivariatePolynomial<f64>;
pub type RationalQuasiPolynomial = QuasiPolynomial<Rational>;
pub type RationalPiecewise = PiecewisePolynomial<Rational>;
pub type LinearFormVector = barnes::LinearForms<Rational>;
