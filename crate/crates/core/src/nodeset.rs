//! Node sets, Vandermonde systems, correctness decisions and fundamental polynomials.

use std::collections::HashSet;

use num_traits::{One, Zero};

use crate::algebra::poly::{dim, monomial_values};
use crate::algebra::{eliminate, eliminate_many, BivariatePoly, Point, Rational, RationalMatrix};
use crate::lines::{line_census, LineCensusEntry};
use crate::Error;

/// A degree `n` together with an ordered list of pairwise distinct nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeSet {
    degree: usize,
    nodes: Vec<Point>,
}

impl NodeSet {
    pub fn new(degree: usize, nodes: Vec<Point>) -> Result<Self, Error> {
        let mut seen = HashSet::with_capacity(nodes.len());
        for p in &nodes {
            if !seen.insert(p) {
                return Err(Error::DuplicateNode(p.to_string()));
            }
        }
        Ok(NodeSet { degree, nodes })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn nodes(&self) -> &[Point] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &Point {
        &self.nodes[i]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `N = dim Π_n`, the node count an n-correct set must have.
    pub fn expected_len(&self) -> usize {
        dim(self.degree)
    }

    pub fn index_of(&self, p: &Point) -> Option<usize> {
        self.nodes.iter().position(|q| q == p)
    }

    pub fn require_index(&self, p: &Point) -> Result<usize, Error> {
        self.index_of(p).ok_or_else(|| Error::NodeNotInSet(p.to_string()))
    }

    pub fn check_index(&self, index: usize) -> Result<usize, Error> {
        if index < self.nodes.len() {
            Ok(index)
        } else {
            Err(Error::IndexOutOfRange { index, len: self.nodes.len() })
        }
    }

    /// The nodes at `indices` (in that order) as a set of the given degree.
    pub fn subset(&self, degree: usize, indices: &[usize]) -> NodeSet {
        NodeSet { degree, nodes: indices.iter().map(|&i| self.nodes[i].clone()).collect() }
    }
}

/// Row `i` holds the graded-lex monomial values of `Π_n` at node `i`.
pub fn vandermonde(x: &NodeSet) -> RationalMatrix {
    let n = x.degree;
    let rows = x.nodes.iter().map(|p| monomial_values(n, p)).collect();
    RationalMatrix::from_rows(dim(n), rows).expect("row length is dim(n)")
}

/// True when every node has a fundamental polynomial, i.e. the Vandermonde matrix has
/// full row rank.
pub fn is_n_independent(x: &NodeSet) -> bool {
    let e = eliminate(&vandermonde(x), None).expect("no rhs");
    e.rank == x.len()
}

pub fn is_n_correct(x: &NodeSet) -> bool {
    x.len() == x.expected_len() && is_n_independent(x)
}

/// The unique `p ∈ Π_n` with `p(node_i) = values[i]`.
pub fn interpolate(x: &NodeSet, values: &[Rational]) -> Result<BivariatePoly, Error> {
    if values.len() != x.len() {
        return Err(Error::ValueCount { expected: x.len(), got: values.len() });
    }
    if x.len() != x.expected_len() {
        return Err(Error::NotCorrect(x.degree));
    }
    let e = eliminate(&vandermonde(x), Some(values)).map_err(|_| Error::NotCorrect(x.degree))?;
    if e.rank != x.len() {
        return Err(Error::NotCorrect(x.degree));
    }
    BivariatePoly::from_coeffs(x.degree, e.solutions[0].clone())
}

/// The fundamental polynomial `p⋆_A`: 1 at `a`, 0 at every other node.
pub fn fundamental_polynomial(x: &NodeSet, a: &Point) -> Result<BivariatePoly, Error> {
    let idx = x.require_index(a)?;
    let values: Vec<Rational> =
        (0..x.len()).map(|i| if i == idx { Rational::one() } else { Rational::zero() }).collect();
    interpolate(x, &values)
}

/// An n-correct node set with its fundamental polynomials and line census precomputed.
#[derive(Clone, Debug)]
pub struct CorrectSet {
    set: NodeSet,
    fundamentals: Vec<BivariatePoly>,
    census: Vec<LineCensusEntry>,
}

impl CorrectSet {
    /// Solves `V·c = e_A` for every node at once; fails if `x` is not n-correct.
    pub fn new(set: NodeSet) -> Result<Self, Error> {
        let n = set.degree;
        if set.len() != set.expected_len() {
            return Err(Error::NotCorrect(n));
        }
        let m = set.len();
        let unit_columns: Vec<Vec<Rational>> = (0..m)
            .map(|k| (0..m).map(|i| if i == k { Rational::one() } else { Rational::zero() }).collect())
            .collect();
        let e = eliminate_many(&vandermonde(&set), &unit_columns).map_err(|_| Error::NotCorrect(n))?;
        if e.rank != m {
            return Err(Error::NotCorrect(n));
        }
        let fundamentals = e
            .solutions
            .into_iter()
            .map(|c| BivariatePoly::from_coeffs(n, c).expect("dim(n) coefficients"))
            .collect();
        let census = line_census(&set);
        Ok(CorrectSet { set, fundamentals, census })
    }

    pub fn set(&self) -> &NodeSet {
        &self.set
    }

    pub fn degree(&self) -> usize {
        self.set.degree
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn node(&self, i: usize) -> &Point {
        self.set.node(i)
    }

    pub fn fundamental(&self, i: usize) -> &BivariatePoly {
        &self.fundamentals[i]
    }

    pub fn fundamentals(&self) -> &[BivariatePoly] {
        &self.fundamentals
    }

    pub fn census(&self) -> &[LineCensusEntry] {
        &self.census
    }

    /// Lagrange form `Σ values[i]·p⋆_i`.
    pub fn interpolate(&self, values: &[Rational]) -> Result<BivariatePoly, Error> {
        if values.len() != self.len() {
            return Err(Error::ValueCount { expected: self.len(), got: values.len() });
        }
        Ok(self
            .fundamentals
            .iter()
            .zip(values)
            .fold(BivariatePoly::zero(self.degree()), |acc, (p, v)| &acc + &p.scale(v)))
    }

    /// Indices of nodes where `q` vanishes.
    pub fn zeros_of(&self, q: &BivariatePoly) -> Vec<usize> {
        (0..self.len()).filter(|&i| q.vanishes_at(self.node(i))).collect()
    }
}
