//! Dense bivariate polynomials of bounded total degree.
//!
//! Coefficients are stored in graded-lexicographic order: `1; x, y; x², xy, y²; …`, so the
//! monomial `xⁱyʲ` of total degree `d = i + j` sits at index `d(d+1)/2 + j`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::line::LinearForm;
use super::point::Point;
use super::rational::{format_rational, Rational};
use crate::Error;

/// `dim Π_n = (n+1)(n+2)/2`.
pub const fn dim(n: usize) -> usize {
    (n + 1) * (n + 2) / 2
}

pub const fn monomial_index(i: usize, j: usize) -> usize {
    let d = i + j;
    d * (d + 1) / 2 + j
}

/// Exponent pairs `(i, j)` of `xⁱyʲ` in storage order up to total degree `n`.
pub fn monomials(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=n).flat_map(|d| (0..=d).map(move |j| (d - j, j)))
}

/// Values of every monomial of `Π_n` at `p`, in storage order.
pub fn monomial_values(n: usize, p: &Point) -> Vec<Rational> {
    let xs = powers(&p.x, n);
    let ys = powers(&p.y, n);
    monomials(n).map(|(i, j)| &xs[i] * &ys[j]).collect()
}

fn powers(v: &Rational, n: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(Rational::one());
    for k in 1..=n {
        let next = &out[k - 1] * v;
        out.push(next);
    }
    out
}

#[derive(Clone, Debug)]
pub struct BivariatePoly {
    degree_bound: usize,
    coeffs: Vec<Rational>,
}

impl BivariatePoly {
    pub fn zero(degree_bound: usize) -> Self {
        BivariatePoly { degree_bound, coeffs: vec![Rational::zero(); dim(degree_bound)] }
    }

    pub fn constant(value: Rational) -> Self {
        BivariatePoly { degree_bound: 0, coeffs: vec![value] }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn from_coeffs(degree_bound: usize, coeffs: Vec<Rational>) -> Result<Self, Error> {
        if coeffs.len() != dim(degree_bound) {
            return Err(Error::CoefficientCount { expected: dim(degree_bound), got: coeffs.len() });
        }
        Ok(BivariatePoly { degree_bound, coeffs })
    }

    /// Builds `Σ c·xⁱyʲ` from `(i, j, c)` triples; repeated monomials accumulate.
    pub fn from_terms(terms: &[(usize, usize, Rational)]) -> Self {
        let n = terms.iter().map(|(i, j, _)| i + j).max().unwrap_or(0);
        let mut p = Self::zero(n);
        for (i, j, c) in terms {
            p.coeffs[monomial_index(*i, *j)] += c;
        }
        p
    }

    pub fn x() -> Self {
        Self::from_terms(&[(1, 0, Rational::one())])
    }

    pub fn y() -> Self {
        Self::from_terms(&[(0, 1, Rational::one())])
    }

    pub fn from_linear(l: &LinearForm) -> Self {
        BivariatePoly { degree_bound: 1, coeffs: vec![l.c().clone(), l.a().clone(), l.b().clone()] }
    }

    /// Product of the given lines; the empty product is the constant 1.
    pub fn product_of_lines<'a>(lines: impl IntoIterator<Item = &'a LinearForm>) -> Self {
        lines.into_iter().fold(Self::one(), |acc, l| &acc * &Self::from_linear(l))
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.coeffs.get(monomial_index(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Effective total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = self.coeffs.iter().rposition(|c| !c.is_zero())?;
        monomials(self.degree_bound).nth(last).map(|(i, j)| i + j)
    }

    fn terms(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        monomials(self.degree_bound).zip(&self.coeffs).filter(|(_, c)| !c.is_zero()).map(|((i, j), c)| (i, j, c))
    }

    pub fn eval(&self, p: &Point) -> Rational {
        let xs = powers(&p.x, self.degree_bound);
        let ys = powers(&p.y, self.degree_bound);
        self.terms().fold(Rational::zero(), |acc, (i, j, c)| acc + c * &xs[i] * &ys[j])
    }

    pub fn vanishes_at(&self, p: &Point) -> bool {
        self.eval(p).is_zero()
    }

    /// Same polynomial stored with a different degree bound. Panics if the bound is
    /// below the effective degree.
    pub fn with_degree_bound(&self, bound: usize) -> Self {
        assert!(self.degree().map_or(true, |d| d <= bound), "degree bound {bound} below effective degree");
        let mut coeffs: Vec<Rational> = self.coeffs.iter().take(dim(bound)).cloned().collect();
        coeffs.resize(dim(bound), Rational::zero());
        BivariatePoly { degree_bound: bound, coeffs }
    }

    /// Drops the bound to the effective degree (0 for the zero polynomial).
    pub fn trimmed(&self) -> Self {
        self.with_degree_bound(self.degree().unwrap_or(0))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        BivariatePoly { degree_bound: self.degree_bound, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    /// Rescaled so that the first nonzero coefficient (storage order) is 1.
    pub fn normalized(&self) -> Self {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            Some(lead) => self.scale(&lead.recip()),
            None => self.clone(),
        }
    }

    /// True when both are nonzero and one is a rational multiple of the other.
    pub fn is_proportional(&self, other: &Self) -> bool {
        !self.is_zero() && !other.is_zero() && self.normalized() == other.normalized()
    }

    /// Substitutes `x ↦ sx`, `y ↦ sy` for polynomials of degree at most one.
    fn compose_affine(&self, sx: &Self, sy: &Self) -> Self {
        debug_assert!(sx.degree().unwrap_or(0) <= 1 && sy.degree().unwrap_or(0) <= 1);
        let n = self.degree_bound;
        let mut xp = vec![Self::one().with_degree_bound(n)];
        let mut yp = vec![Self::one().with_degree_bound(n)];
        for k in 1..=n {
            xp.push((&xp[k - 1] * sx).with_degree_bound(n));
            yp.push((&yp[k - 1] * sy).with_degree_bound(n));
        }
        let mut out = Self::zero(n);
        for (i, j, c) in self.terms() {
            let term = &xp[i] * &yp[j];
            for (slot, t) in out.coeffs.iter_mut().zip(term.coeffs.iter()) {
                if !t.is_zero() {
                    *slot += c * t;
                }
            }
        }
        out
    }

    /// Coefficients (ascending powers of `t`, length `degree_bound + 1`) of
    /// `t ↦ p(base + t·direction)` for the canonical parametrization of `l`.
    pub fn restrict_to_line(&self, l: &LinearForm) -> Vec<Rational> {
        let n = self.degree_bound;
        let (base, dir) = l.parametrization();
        let lin_pow = |c0: &Rational, c1: &Rational| {
            let mut pows: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
            for k in 1..=n {
                let prev = &pows[k - 1];
                let mut next = vec![Rational::zero(); k + 1];
                for (e, v) in prev.iter().enumerate() {
                    next[e] += v * c0;
                    next[e + 1] += v * c1;
                }
                pows.push(next);
            }
            pows
        };
        let xp = lin_pow(&base.x, &dir.x);
        let yp = lin_pow(&base.y, &dir.y);
        let mut out = vec![Rational::zero(); n + 1];
        for (i, j, c) in self.terms() {
            for (a, xa) in xp[i].iter().enumerate() {
                if xa.is_zero() {
                    continue;
                }
                for (b, yb) in yp[j].iter().enumerate() {
                    if !yb.is_zero() {
                        out[a + b] += c * xa * yb;
                    }
                }
            }
        }
        out
    }

    /// Exact quotient `q` with `self = l·q`, or `None` when `l` is not a factor.
    ///
    /// The quotient is computed by the affine change of variables sending `l` to a
    /// coordinate, shifting coefficients down in that coordinate, and substituting back.
    /// The returned bound is `degree_bound − 1`.
    pub fn divide_by_linear(&self, l: &LinearForm) -> Result<Option<Self>, Error> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree_bound == 0 || self.restrict_to_line(l).iter().any(|c| !c.is_zero()) {
            return Ok(None);
        }
        let n = self.degree_bound;
        let (a, b, c) = (l.a(), l.b(), l.c());
        let ell = Self::from_linear(l);
        // u stands for the value of l. If b ≠ 0 use coordinates (x, u); else (u, y).
        let u_is_second = !b.is_zero();
        let transformed = if u_is_second {
            let y_of_u = Self::from_coeffs(1, vec![-(c / b), -(a / b), b.recip()]).expect("dim 1");
            self.compose_affine(&Self::x(), &y_of_u)
        } else {
            // a = 1 here, so x = u − c.
            let x_of_u = Self::from_coeffs(1, vec![-c.clone(), Rational::one(), Rational::zero()]).expect("dim 1");
            self.compose_affine(&x_of_u, &Self::y())
        };
        let mut shifted = Self::zero(n - 1);
        for (i, j, coeff) in transformed.terms() {
            let (qi, qj) = match (u_is_second, i, j) {
                (true, i, j) if j > 0 => (i, j - 1),
                (false, i, j) if i > 0 => (i - 1, j),
                _ => return Ok(None),
            };
            shifted.coeffs[monomial_index(qi, qj)] += coeff;
        }
        let quotient = if u_is_second {
            shifted.compose_affine(&Self::x(), &ell)
        } else {
            shifted.compose_affine(&ell, &Self::y())
        };
        debug_assert_eq!(&ell * &quotient, *self);
        Ok(Some(quotient))
    }

    /// Repeated division by each listed line, in order.
    pub fn divide_by_lines<'a>(&self, lines: impl IntoIterator<Item = &'a LinearForm>) -> Result<Option<Self>, Error> {
        let mut current = self.clone();
        for l in lines {
            match current.divide_by_linear(l)? {
                Some(q) => current = q,
                None => return Ok(None),
            }
        }
        Ok(Some(current))
    }
}

impl PartialEq for BivariatePoly {
    /// Equality of polynomials regardless of the stored degree bound.
    fn eq(&self, other: &Self) -> bool {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).all(|k| {
            let zero = Rational::zero();
            self.coeffs.get(k).unwrap_or(&zero) == other.coeffs.get(k).unwrap_or(&zero)
        })
    }
}

impl Eq for BivariatePoly {}

impl Add for &BivariatePoly {
    type Output = BivariatePoly;

    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        let n = self.degree_bound.max(rhs.degree_bound);
        let mut out = self.with_degree_bound(n);
        for (slot, c) in out.coeffs.iter_mut().zip(&rhs.coeffs) {
            *slot += c;
        }
        out
    }
}

impl Neg for &BivariatePoly {
    type Output = BivariatePoly;

    fn neg(self) -> BivariatePoly {
        BivariatePoly { degree_bound: self.degree_bound, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &BivariatePoly {
    type Output = BivariatePoly;

    fn sub(self, rhs: &BivariatePoly) -> BivariatePoly {
        self + &(-rhs)
    }
}

impl Mul for &BivariatePoly {
    type Output = BivariatePoly;

    /// Product with `degree_bound = deg p + deg q` (bounds add).
    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = BivariatePoly::zero(self.degree_bound + rhs.degree_bound);
        for (i1, j1, c1) in self.terms() {
            for (i2, j2, c2) in rhs.terms() {
                out.coeffs[monomial_index(i1 + i2, j1 + j2)] += c1 * c2;
            }
        }
        out
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, j, c) in self.terms() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let mut factors = Vec::new();
            if !mag.is_one() || i + j == 0 {
                factors.push(format_rational(&mag));
            }
            for (var, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
