//! Exact analysis of bivariate polynomial interpolation node sets.
//!
//! A node set `X` of degree `n` is *n-correct* when interpolation from `Π_n` (bivariate
//! polynomials of total degree at most `n`) is uniquely solvable on it. This crate
//! decides correctness exactly, computes fundamental polynomials, counts the nodes on
//! every line, finds maximal lines and used lines, detects special triplets, and checks
//! structural theorems about 2-node lines on concrete sets.
//!
//! All arithmetic is exact over the rationals; no floating point participates in any
//! decision. Floats appear only when drawing SVG coordinates.

pub mod algebra;
pub mod curves;
mod error;
pub mod generators;
pub mod harness;
pub mod io;
pub mod lines;
pub mod nodeset;

pub use algebra::{BivariatePoly, LinearForm, Point, Rational, RationalMatrix};
pub use error::Error;
pub use nodeset::{CorrectSet, NodeSet};
