use std::fmt;


use super::rational::{format_rational, int, Rational};

/// A node of the plane with exact rational coordinates.
///
/// Ordering is lexicographic on `(x, y)`; node identity is exact equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(int(x), int(y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_rational(&self.x), format_rational(&self.y))
    }
}

/// Twice the signed area of the triangle `abc`; zero exactly when collinear.
pub fn orientation(a: &Point, b: &Point, c: &Point) -> Rational {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

pub fn collinear(a: &Point, b: &Point, c: &Point) -> bool {
    use num_traits::Zero;
    orientation(a, b, c).is_zero()
}
