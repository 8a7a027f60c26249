//! Exact arithmetic substrate: rationals, points, lines, dense bivariate polynomials
//! and fraction-free elimination.

pub mod line;
pub mod matrix;
pub mod point;
pub mod poly;
pub mod rational;

pub use line::LinearForm;
pub use matrix::{eliminate, eliminate_many, Elimination, RationalMatrix};
pub use point::Point;
pub use poly::{dim, BivariatePoly};
pub use rational::Rational;
