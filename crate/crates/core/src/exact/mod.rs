//! Exact arithmetic layer: rationals, dense matrices, sparse polynomials,
//! a rational simplex solver and small polyhedral helpers.

pub mod geometry;
pub mod lp;
pub mod matrix;
pub mod poly;
pub mod rational;

pub use matrix::RationalMatrix;
pub use poly::{poly_det, MultiPoly};
pub use rational::{parse_rational, rat, ratio, Rational};
