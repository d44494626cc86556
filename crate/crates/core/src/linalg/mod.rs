//! Exact arithmetic over the rationals: scalars, canonical row spaces and
//! sparse multivariate polynomials.

mod matrix;
mod poly;
mod rational;

pub use matrix::{rank, rref, solve_combination, RowSpace};
pub use poly::{det_poly, Monomial, MultiPoly};
pub use rational::{format_rational, parse_rational, Rational};
