//! Constructors for Chung-Yao sets, Carnicer-Gasca sets, principal lattices, and
//! reproducible random instances.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::point::collinear;
use crate::algebra::rational::{int, ratio};
use crate::algebra::{LinearForm, Point, Rational};
use crate::nodeset::NodeSet;
use crate::Error;

/// Upper bound on sweep candidates tried per free point.
pub const SWEEP_LIMIT: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineArrangement {
    pub lines: Vec<LinearForm>,
    pub general_position: bool,
}

fn concurrent(l1: &LinearForm, l2: &LinearForm, l3: &LinearForm) -> bool {
    let det = l1.a() * (l2.b() * l3.c() - l2.c() * l3.b()) - l1.b() * (l2.a() * l3.c() - l2.c() * l3.a())
        + l1.c() * (l2.a() * l3.b() - l2.b() * l3.a());
    det.is_zero()
}

/// No two lines parallel (or equal) and no three concurrent.
pub fn check_general_position(lines: &[LinearForm]) -> bool {
    let m = lines.len();
    for i in 0..m {
        for j in i + 1..m {
            if lines[i].is_parallel(&lines[j]) {
                return false;
            }
            for k in j + 1..m {
                if concurrent(&lines[i], &lines[j], &lines[k]) {
                    return false;
                }
            }
        }
    }
    true
}

fn pairwise_intersections(lines: &[LinearForm]) -> Vec<Point> {
    let mut out = Vec::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            out.push(lines[i].intersection(&lines[j]).expect("general position"));
        }
    }
    out
}

/// The `C(n+2, 2)` pairwise intersections `A_ij = ℓ_i ∩ ℓ_j` (`i < j`) of `n+2` lines.
pub fn chung_yao(lines: &[LinearForm]) -> Result<NodeSet, Error> {
    if lines.len() < 3 {
        return Err(Error::TooFewLines { needed: 3, got: lines.len() });
    }
    if !check_general_position(lines) {
        return Err(Error::NotGeneralPosition);
    }
    NodeSet::new(lines.len() - 2, pairwise_intersections(lines))
}

/// Intersections `A_ij` of `n+1` lines followed by the free points `A_i ∈ ℓ_i`.
///
/// For `n = 1` the three nodes must be noncollinear; for larger `n` any placement off the
/// intersections gives an n-correct set.
pub fn carnicer_gasca(lines: &[LinearForm], free_points: &[Point]) -> Result<NodeSet, Error> {
    if lines.len() < 2 {
        return Err(Error::TooFewLines { needed: 2, got: lines.len() });
    }
    if free_points.len() != lines.len() {
        return Err(Error::FreePointCount { expected: lines.len(), got: free_points.len() });
    }
    if !check_general_position(lines) {
        return Err(Error::NotGeneralPosition);
    }
    let mut nodes = pairwise_intersections(lines);
    for (i, (l, p)) in lines.iter().zip(free_points).enumerate() {
        if !l.contains(p) {
            return Err(Error::FreePointOffLine(i));
        }
        if nodes.contains(p) {
            return Err(Error::FreePointCollides(i));
        }
        nodes.push(p.clone());
    }
    if lines.len() == 2 && collinear(&nodes[0], &nodes[1], &nodes[2]) {
        return Err(Error::FreePointsCollinear);
    }
    NodeSet::new(lines.len() - 1, nodes)
}

/// Nodes `(i, j)` with `i, j ≥ 0`, `i + j ≤ n`, listed row by row (`j` outer).
pub fn principal_lattice(n: usize) -> Result<NodeSet, Error> {
    if n < 1 {
        return Err(Error::DegreeTooSmall { min: 1, got: n });
    }
    let n = n as i64;
    let nodes = (0..=n).flat_map(|j| (0..=n - j).map(move |i| Point::from_ints(i, j))).collect();
    NodeSet::new(n as usize, nodes)
}

/// Sweep parameters `1, 1/2, 2, 1/3, 3, …`.
pub fn rational_sweep() -> impl Iterator<Item = Rational> {
    std::iter::once(int(1)).chain((2i64..).flat_map(|k| [ratio(1, k), int(k)]))
}

/// First sweep point on `l` accepted by `admissible`.
fn sweep_point(l: &LinearForm, mut admissible: impl FnMut(&Point) -> bool) -> Result<Point, Error> {
    rational_sweep()
        .take(SWEEP_LIMIT)
        .map(|t| l.point_at(&t))
        .find(|p| admissible(p))
        .ok_or(Error::SeedExhausted(SWEEP_LIMIT))
}

/// `m` lines with small integer coefficients drawn from a ChaCha stream seeded by
/// `seed`; each candidate is redrawn until it keeps the arrangement in general position.
pub fn random_general_position_lines(m: usize, seed: u64) -> LineArrangement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lines: Vec<LinearForm> = Vec::with_capacity(m);
    while lines.len() < m {
        let a = rng.gen_range(-6i64..=6);
        let b = rng.gen_range(-6i64..=6);
        let c = rng.gen_range(-6i64..=6);
        let Ok(l) = LinearForm::from_ints(a, b, c) else {
            continue;
        };
        lines.push(l);
        if !check_general_position(&lines) {
            lines.pop();
        }
    }
    let general_position = check_general_position(&lines);
    LineArrangement { lines, general_position }
}

pub fn random_chung_yao(n: usize, seed: u64) -> Result<NodeSet, Error> {
    if n < 1 {
        return Err(Error::DegreeTooSmall { min: 1, got: n });
    }
    chung_yao(&random_general_position_lines(n + 2, seed).lines)
}

/// Carnicer-Gasca set on seeded random lines, with free points taken from the sweep.
///
/// For `n ≥ 2` the free points are kept off a common line, so the only maximal lines are
/// the `n+1` construction lines.
pub fn random_carnicer_gasca(n: usize, seed: u64) -> Result<NodeSet, Error> {
    if n < 1 {
        return Err(Error::DegreeTooSmall { min: 1, got: n });
    }
    let lines = random_general_position_lines(n + 1, seed).lines;
    let mut taken = pairwise_intersections(&lines);
    let mut free: Vec<Point> = Vec::with_capacity(lines.len());
    for l in &lines {
        let p = sweep_point(l, |p| {
            if taken.contains(p) {
                return false;
            }
            if n == 1 {
                return taken.len() < 2 || !collinear(&taken[0], &taken[1], p);
            }
            free.len() < n || !free.iter().chain([p]).all(|q| collinear(&free[0], &free[1], q))
        })?;
        taken.push(p.clone());
        free.push(p);
    }
    carnicer_gasca(&lines, &free)
}

/// A Carnicer-Gasca set of degree `n` and the index of a node `B = A_0 ∈ ℓ_0` such that
/// every line `ℓ_{A_i B}` (`i = 1..n`) is a 2-node line; it is used by `C_i = A_0i`.
pub fn cg_with_prescribed_2node_lines(n: usize, seed: u64) -> Result<(NodeSet, usize), Error> {
    if n < 2 {
        return Err(Error::DegreeTooSmall { min: 2, got: n });
    }
    let lines = random_general_position_lines(n + 1, seed).lines;
    let mut taken = pairwise_intersections(&lines);
    let b_index = taken.len();
    let b = sweep_point(&lines[0], |p| !taken.contains(p))?;
    taken.push(b.clone());
    let mut free = vec![b.clone()];
    for l in &lines[1..] {
        let a = sweep_point(l, |p| {
            if taken.contains(p) {
                return false;
            }
            let through_b = LinearForm::through(p, &b).expect("p differs from B");
            taken.iter().filter(|q| **q != b).all(|q| !through_b.contains(q))
        })?;
        taken.push(a.clone());
        free.push(a);
    }
    Ok((carnicer_gasca(&lines, &free)?, b_index))
}
