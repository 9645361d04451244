//! Exact scalars, combinatorics and univariate polynomial algebra.

pub mod combinatorics;
pub mod linalg;
pub mod piecewise;
pub mod polynomial;
pub mod rational;
pub mod scalar;

pub use combinatorics::{bernoulli_number, bernoulli_numbers, binomial, factorial, multinomial};
pub use linalg::solve_linear_system;
pub use piecewise::{PiecewisePolynomial, QuasiPolynomial};
pub use polynomial::{lagrange_interpolate, UnivariatePolynomial};
pub use rational::{format_rational, parse_rational};
pub use scalar::Scalar;
