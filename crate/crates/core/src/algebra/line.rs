use std::fmt;

use num_traits::{One, Signed, Zero};

use super::point::Point;
use super::rational::{format_rational, Rational};
use crate::Error;

/// The line `a·x + b·y + c = 0`, kept in canonical form: `(a, b) ≠ (0, 0)` and the first
/// nonzero of `a, b` equals 1. Two forms are equal exactly when they describe the same
/// line, so the derived ordering and hashing serve as a deduplication key.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    a: Rational,
    b: Rational,
    c: Rational,
}

impl LinearForm {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self, Error> {
        let lead = if !a.is_zero() {
            a.clone()
        } else if !b.is_zero() {
            b.clone()
        } else {
            return Err(Error::DegenerateLine);
        };
        Ok(LinearForm { a: a / &lead, b: b / &lead, c: c / lead })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self, Error> {
        use super::rational::int;
        LinearForm::new(int(a), int(b), int(c))
    }

    /// The line through two distinct points.
    pub fn through(p: &Point, q: &Point) -> Result<Self, Error> {
        if p == q {
            return Err(Error::IdenticalPoints(p.to_string()));
        }
        let a = &q.y - &p.y;
        let b = &p.x - &q.x;
        let c = -(&a * &p.x + &b * &p.y);
        LinearForm::new(a, b, c)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn eval(&self, p: &Point) -> Rational {
        &self.a * &p.x + &self.b * &p.y + &self.c
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p).is_zero()
    }

    pub fn is_parallel(&self, other: &LinearForm) -> bool {
        (&self.a * &other.b - &self.b * &other.a).is_zero()
    }

    /// Intersection point, or `None` for parallel (or equal) lines.
    pub fn intersection(&self, other: &LinearForm) -> Option<Point> {
        let det = &self.a * &other.b - &self.b * &other.a;
        if det.is_zero() {
            return None;
        }
        let x = (&self.b * &other.c - &self.c * &other.b) / &det;
        let y = (&self.c * &other.a - &self.a * &other.c) / &det;
        Some(Point::new(x, y))
    }

    /// Canonical parametrization `t ↦ base + t·direction`.
    ///
    /// If `b ≠ 0`: base `(0, −c/b)`, direction `(1, −a/b)`; otherwise base `(−c/a, 0)`,
    /// direction `(0, 1)`.
    pub fn parametrization(&self) -> (Point, Point) {
        if !self.b.is_zero() {
            (
                Point::new(Rational::zero(), -(&self.c / &self.b)),
                Point::new(Rational::one(), -(&self.a / &self.b)),
            )
        } else {
            (
                Point::new(-(&self.c / &self.a), Rational::zero()),
                Point::new(Rational::zero(), Rational::one()),
            )
        }
    }

    pub fn point_at(&self, t: &Rational) -> Point {
        let (base, dir) = self.parametrization();
        Point::new(base.x + t * dir.x, base.y + t * dir.y)
    }
}

fn write_term(out: &mut String, coeff: &Rational, var: &str) {
    if coeff.is_zero() {
        return;
    }
    let first = out.is_empty();
    let negative = coeff.is_negative();
    match (first, negative) {
        (true, true) => out.push('-'),
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
        (true, false) => {}
    }
    let mag = coeff.abs();
    if var.is_empty() {
        out.push_str(&format_rational(&mag));
    } else {
        if !mag.is_one() {
            out.push_str(&format_rational(&mag));
            out.push('*');
        }
        out.push_str(var);
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        write_term(&mut s, &self.a, "x");
        write_term(&mut s, &self.b, "y");
        write_term(&mut s, &self.c, "");
        write!(f, "{s} = 0")
    }
}
