//! Exact linear algebra over the rationals.
//!
//! Rows are first cleared of denominators, then reduced with fraction-free (Bareiss)
//! elimination over the integers, so every intermediate value is an exact minor.
//! Pivots are chosen as the first nonzero entry in each column, which makes the
//! output a deterministic function of the input.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::Rational;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, Error> {
        if entries.len() != rows * cols {
            return Err(Error::MatrixShape { rows, cols, len: entries.len() });
        }
        Ok(RationalMatrix { rows, cols, entries })
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self, Error> {
        let n = rows.len();
        let entries: Vec<Rational> = rows.into_iter().flatten().collect();
        Self::new(n, cols, entries)
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![Rational::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = Rational::one();
        }
        RationalMatrix { rows: n, cols: n, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        RationalMatrix { rows: self.cols, cols: self.rows, entries }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elimination {
    pub rank: usize,
    /// Present only for square matrices.
    pub determinant: Option<Rational>,
    /// Pivot column of each echelon row.
    pub pivots: Vec<usize>,
    /// Reduced-echelon nullspace basis: one vector per free column, with 1 in that
    /// column and 0 in every other free column.
    pub nullspace: Vec<Vec<Rational>>,
    /// One solution per right-hand side, with free variables set to 0.
    pub solutions: Vec<Vec<Rational>>,
}

impl Elimination {
    pub fn particular_solution(&self) -> Option<&Vec<Rational>> {
        self.solutions.first()
    }
}

/// Eliminates `m` (optionally augmented by a single right-hand side).
pub fn eliminate(m: &RationalMatrix, rhs: Option<&[Rational]>) -> Result<Elimination, Error> {
    match rhs {
        Some(b) => eliminate_many(m, &[b.to_vec()]),
        None => eliminate_many(m, &[]),
    }
}

fn row_to_integers(row: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let scale = row.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints = row.iter().map(|r| r.numer() * (&scale / r.denom())).collect();
    (ints, scale)
}

/// Eliminates `m` augmented by every column in `rhs`.
///
/// Fails with [`Error::InconsistentSystem`] if any right-hand side has no solution.
pub fn eliminate_many(m: &RationalMatrix, rhs: &[Vec<Rational>]) -> Result<Elimination, Error> {
    let (rows, cols) = (m.rows, m.cols);
    let width = cols + rhs.len();
    for b in rhs {
        if b.len() != rows {
            return Err(Error::MatrixShape { rows, cols: 1, len: b.len() });
        }
    }

    let mut scales = Vec::with_capacity(rows);
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|r| {
            let mut full: Vec<Rational> = m.row(r).to_vec();
            full.extend(rhs.iter().map(|b| b[r].clone()));
            let (ints, scale) = row_to_integers(&full);
            scales.push(scale);
            ints
        })
        .collect();

    let mut swaps = 0usize;
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            scales.swap(p, r);
            swaps += 1;
        }
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = pivot_row[col].clone();
        for row in tail.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..width {
                let num = &pivot * &row[j] - &factor * &pivot_row[j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                row[j] = num / &prev;
            }
            row[col] = BigInt::zero();
        }
        // Rows above the current one are untouched, so later pivots divide by this one.
        prev = pivot;
        pivots.push(col);
        r += 1;
    }
    let rank = pivots.len();

    for k in 0..rhs.len() {
        if (rank..rows).any(|i| !a[i][cols + k].is_zero()) {
            return Err(Error::InconsistentSystem);
        }
    }

    let determinant = (rows == cols).then(|| {
        if rank < rows {
            Rational::zero()
        } else {
            let sign = if swaps % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            let scale = scales.iter().fold(BigInt::one(), |acc, s| acc * s);
            Rational::new(sign * &a[rows - 1][cols - 1], scale)
        }
    });

    // Back substitution over the rationals on the integer echelon form.
    let back_substitute = |mut x: Vec<Rational>, rhs_col: Option<usize>| {
        for (i, &pc) in pivots.iter().enumerate().rev() {
            let mut acc = match rhs_col {
                Some(k) => Rational::from_integer(a[i][cols + k].clone()),
                None => Rational::zero(),
            };
            for j in pc + 1..cols {
                if !a[i][j].is_zero() && !x[j].is_zero() {
                    acc -= Rational::from_integer(a[i][j].clone()) * &x[j];
                }
            }
            x[pc] = acc / Rational::from_integer(a[i][pc].clone());
        }
        x
    };

    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let nullspace = (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut x = vec![Rational::zero(); cols];
            x[free] = Rational::one();
            back_substitute(x, None)
        })
        .collect();
    let solutions = (0..rhs.len()).map(|k| back_substitute(vec![Rational::zero(); cols], Some(k))).collect();

    Ok(Elimination { rank, determinant, pivots, nullspace, solutions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, ratio};
    use proptest::prelude::*;

    fn mat(rows: &[&[i64]]) -> RationalMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        RationalMatrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()).unwrap()
    }

    /// Cofactor expansion, used as an independent determinant oracle.
    fn det_by_cofactors(m: &RationalMatrix) -> Rational {
        let n = m.rows();
        if n == 0 {
            return Rational::one();
        }
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut total = Rational::zero();
        for c in 0..n {
            let minor_rows = (1..n)
                .map(|r| (0..n).filter(|&cc| cc != c).map(|cc| m.get(r, cc).clone()).collect())
                .collect();
            let minor = RationalMatrix::from_rows(n - 1, minor_rows).unwrap();
            let term = m.get(0, c) * det_by_cofactors(&minor);
            if c % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    #[test]
    fn identity() {
        let e = eliminate(&RationalMatrix::identity(2), None).unwrap();
        assert_eq!(e.rank, 2);
        assert_eq!(e.determinant, Some(int(1)));
        assert!(e.nullspace.is_empty());
    }

    #[test]
    fn rank_one() {
        let e = eliminate(&mat(&[&[1, 1], &[2, 2]]), None).unwrap();
        assert_eq!(e.rank, 1);
        assert_eq!(e.determinant, Some(int(0)));
        assert_eq!(e.nullspace, vec![vec![int(-1), int(1)]]);
    }

    #[test]
    fn collinear_vandermonde_is_singular() {
        let e = eliminate(&mat(&[&[1, 0, 0], &[1, 1, 1], &[1, 2, 2]]), None).unwrap();
        assert_eq!(e.determinant, Some(int(0)));
        assert_eq!(e.rank, 2);
    }

    #[test]
    fn solves_and_detects_inconsistency() {
        let m = mat(&[&[2, 1], &[1, 3]]);
        let e = eliminate(&m, Some(&[int(3), int(5)])).unwrap();
        let x = e.particular_solution().unwrap();
        assert_eq!(x, &vec![ratio(4, 5), ratio(7, 5)]);
        assert_eq!(e.determinant, Some(int(5)));

        let singular = mat(&[&[1, 1], &[2, 2]]);
        assert!(matches!(eliminate(&singular, Some(&[int(1), int(3)])), Err(Error::InconsistentSystem)));
        let e = eliminate(&singular, Some(&[int(1), int(2)])).unwrap();
        assert_eq!(e.particular_solution().unwrap(), &vec![int(1), int(0)]);
    }

    #[test]
    fn wide_matrix_nullspace_is_reduced() {
        let m = mat(&[&[1, 2, 0, 3], &[0, 0, 1, 4]]);
        let e = eliminate(&m, None).unwrap();
        assert_eq!(e.pivots, vec![0, 2]);
        assert_eq!(e.nullspace, vec![vec![int(-2), int(1), int(0), int(0)], vec![int(-3), int(0), int(-4), int(1)]]);
    }

    #[test]
    fn rational_entries() {
        let m = RationalMatrix::from_rows(2, vec![vec![ratio(1, 2), ratio(1, 3)], vec![ratio(1, 4), ratio(1, 5)]]).unwrap();
        let e = eliminate(&m, None).unwrap();
        assert_eq!(e.determinant, Some(ratio(1, 10) - ratio(1, 12)));
    }

    fn small_matrix() -> impl Strategy<Value = RationalMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            prop::collection::vec((-3i64..=3, 1i64..=3), r * c).prop_map(move |vals| {
                RationalMatrix::new(r, c, vals.into_iter().map(|(n, d)| ratio(n, d)).collect()).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn nullspace_vectors_are_annihilated(m in small_matrix()) {
            let e = eliminate(&m, None).unwrap();
            prop_assert_eq!(e.rank + e.nullspace.len(), m.cols());
            for v in &e.nullspace {
                prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
            }
        }

        #[test]
        fn determinant_matches_cofactors(n in 1usize..5, seed in prop::collection::vec(-4i64..=4, 16)) {
            let m = RationalMatrix::new(n, n, seed.iter().take(n * n).map(|&v| int(v)).collect()).unwrap();
            let e = eliminate(&m, None).unwrap();
            prop_assert_eq!(e.determinant.unwrap(), det_by_cofactors(&m));
        }

        #[test]
        fn solutions_satisfy_system(m in small_matrix(), x in prop::collection::vec(-3i64..=3, 4)) {
            let x: Vec<Rational> = x.into_iter().take(m.cols()).map(int).chain(std::iter::repeat(int(0))).take(m.cols()).collect();
            let b = m.mul_vec(&x);
            let e = eliminate(&m, Some(&b)).unwrap();
            prop_assert_eq!(m.mul_vec(e.particular_solution().unwrap()), b);
        }

        #[test]
        fn deterministic(m in small_matrix()) {
            prop_assert_eq!(eliminate(&m, None).unwrap(), eliminate(&m, None).unwrap());
        }
    }
}
