//! Exact rational scalars, dense rational linear algebra, and sparse
//! multivariate polynomials.

mod matrix;
mod poly;
mod rational;

pub use matrix::RatMatrix;
pub use poly::SparsePoly;
pub use rational::{format_rat_list, frac, parse_rat, rat, rat_pow, rat_to_f64, Rat};
