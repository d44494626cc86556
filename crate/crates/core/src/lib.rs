//! Combinatorics and Bernstein ideals of central hyperplane arrangements
//! over the rationals.
//!
//! Start from [`arrangement::Arrangement`] (or a named [`arrangement::Family`]),
//! build its [`lattice::IntersectionLattice`], ask [`structure::freeness`] for a
//! verdict and hand that to [`bernstein::bernstein_generator`]. The programs in
//! `examples/` walk through each step; `src/bin/bideal.rs` is the same thing
//! behind a command line.

pub mod arrangement;
pub mod bernstein;
pub mod cli;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod structure;
