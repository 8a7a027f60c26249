//! Maximal curves, the node bound `d(n, k)`, special triplets, and the peel
//! decomposition of a maximal curve along the lines `ℓ_{A_i C_i}` of special triplets
//! sharing a node `B`.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::poly::{dim, monomial_values};
use crate::algebra::point::collinear;
use crate::algebra::{eliminate, BivariatePoly, LinearForm, Point, Rational, RationalMatrix};
use crate::lines::UsageRecord;
use crate::nodeset::{fundamental_polynomial, is_n_correct, CorrectSet};
use crate::Error;

/// `d(n, k) = N_n − N_{n−k} = k(2n+3−k)/2`: the most n-independent nodes a curve of
/// degree `k` can carry.
pub fn d(n: usize, k: usize) -> Result<usize, Error> {
    if k < 1 || k > n {
        return Err(Error::KOutOfRange { n, k });
    }
    Ok(node_bound(n, k))
}

/// `d(n, k)` extended with `d(n, 0) = 0`.
pub(crate) fn node_bound(n: usize, k: usize) -> usize {
    debug_assert!(k <= n);
    k * (2 * n + 3 - k) / 2
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveWitness {
    pub poly: BivariatePoly,
    pub k: usize,
    /// Indices of the nodes on the curve.
    pub indices: Vec<usize>,
    pub nodes_on: Vec<Point>,
    pub is_maximal: bool,
    /// For maximal curves: whether the off-curve nodes form an `(n−k)`-correct set.
    pub residual_correct: Option<bool>,
}

impl CurveWitness {
    /// Indices of the nodes off the curve.
    pub fn off_curve(&self, total: usize) -> Vec<usize> {
        (0..total).filter(|i| self.indices.binary_search(i).is_err()).collect()
    }
}

pub fn curve_witness(x: &CorrectSet, q: &BivariatePoly, k: usize) -> Result<CurveWitness, Error> {
    let n = x.degree();
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if k > n || q.degree() != Some(k) {
        return Err(Error::DegreeOutOfRange { n, degree: q.degree().unwrap_or(0) });
    }
    let indices = x.zeros_of(q);
    let nodes_on = indices.iter().map(|&i| x.node(i).clone()).collect();
    let is_maximal = indices.len() == node_bound(n, k);
    let residual_correct = is_maximal.then(|| {
        let off: Vec<usize> = (0..x.len()).filter(|i| indices.binary_search(i).is_err()).collect();
        is_n_correct(&x.set().subset(n - k, &off))
    });
    Ok(CurveWitness { poly: q.clone(), k, indices, nodes_on, is_maximal, residual_correct })
}

/// `{A, B, C}` together with the maximal curve `f` of degree `n−1` whose zero set misses
/// exactly these three nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialTriplet {
    pub a: Point,
    pub b: Point,
    pub c: Point,
    /// Node indices of `a`, `b`, `c`.
    pub indices: [usize; 3],
    /// Normalized so that its first nonzero graded-lex coefficient is 1.
    pub f: BivariatePoly,
}

impl SpecialTriplet {
    fn from_indices(x: &CorrectSet, indices: [usize; 3], f: BivariatePoly) -> Self {
        SpecialTriplet {
            a: x.node(indices[0]).clone(),
            b: x.node(indices[1]).clone(),
            c: x.node(indices[2]).clone(),
            indices,
            f,
        }
    }

    pub fn vertex_set(&self) -> BTreeSet<usize> {
        self.indices.into_iter().collect()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.contains(&i)
    }
}

/// Nullspace-based special-triplet test with the `Π_{n−1}` monomial values of every
/// node precomputed.
pub struct TripletDetector<'a> {
    x: &'a CorrectSet,
    values: Vec<Vec<Rational>>,
}

impl<'a> TripletDetector<'a> {
    pub fn new(x: &'a CorrectSet) -> Self {
        let low = x.degree().saturating_sub(1);
        let values = x.set().nodes().iter().map(|p| monomial_values(low, p)).collect();
        TripletDetector { x, values }
    }

    /// The normalized curve `f ∈ Π_{n−1}` vanishing on `X ∖ {i, j, k}` and at none of
    /// `i, j, k`, if one exists.
    ///
    /// With a nullspace basis `b_0 … b_{d−1}`, each vertex value of `Σ tʲ b_j` is a
    /// univariate polynomial in `t` of degree below `d`, so one of the first
    /// `3(d−1)+1` integers `t` avoids all three vanishing conditions.
    pub fn detect(&self, triple: [usize; 3]) -> Option<BivariatePoly> {
        let n = self.x.degree();
        if n == 0 {
            return None;
        }
        let cols = dim(n - 1);
        let rows: Vec<Vec<Rational>> =
            (0..self.x.len()).filter(|i| !triple.contains(i)).map(|i| self.values[i].clone()).collect();
        let m = RationalMatrix::from_rows(cols, rows).expect("uniform rows");
        let basis = eliminate(&m, None).expect("no rhs").nullspace;
        if basis.is_empty() {
            return None;
        }
        let dot = |u: &[Rational], v: &[Rational]| u.iter().zip(v).fold(Rational::zero(), |acc, (a, b)| acc + a * b);
        // vertex_vals[v][j] = b_j evaluated at vertex v
        let vertex_vals: Vec<Vec<Rational>> =
            triple.iter().map(|&v| basis.iter().map(|b| dot(b, &self.values[v])).collect()).collect();
        if vertex_vals.iter().any(|vals| vals.iter().all(Zero::is_zero)) {
            return None;
        }
        let dimension = basis.len();
        let bound = 3 * dimension * (n - 1).max(1);
        for t in 0..=bound {
            let t = Rational::from_integer((t as i64).into());
            let powers: Vec<Rational> = std::iter::successors(Some(Rational::one()), |p| Some(p * &t)).take(dimension).collect();
            if vertex_vals.iter().all(|vals| !dot(vals, &powers).is_zero()) {
                let mut coeffs = vec![Rational::zero(); cols];
                for (b, w) in basis.iter().zip(&powers) {
                    for (slot, v) in coeffs.iter_mut().zip(b) {
                        *slot += v * w;
                    }
                }
                let f = BivariatePoly::from_coeffs(n - 1, coeffs).expect("dim(n-1)");
                return Some(f.normalized());
            }
        }
        unreachable!("root counting guarantees an admissible t within the bound")
    }

    pub fn special(&self, triple: [usize; 3]) -> Option<SpecialTriplet> {
        self.detect(triple).map(|f| SpecialTriplet::from_indices(self.x, triple, f))
    }
}

pub fn detect_special_triplet(x: &CorrectSet, a: &Point, b: &Point, c: &Point) -> Result<Option<SpecialTriplet>, Error> {
    let set = x.set();
    let triple = [set.require_index(a)?, set.require_index(b)?, set.require_index(c)?];
    if triple[0] == triple[1] || triple[1] == triple[2] || triple[0] == triple[2] {
        return Err(Error::NodesNotDistinct);
    }
    Ok(TripletDetector::new(x).special(triple))
}

/// Every special triplet of `x`, vertex indices ascending, in lexicographic order.
pub fn all_special_triplets(x: &CorrectSet) -> Vec<SpecialTriplet> {
    let det = TripletDetector::new(x);
    let m = x.len();
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                if let Some(t) = det.special([i, j, k]) {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// The special triplet `{A, B, C}` arising from a 2-node line `ℓ_{AB}` used by `C`.
pub fn triplet_from_used_2node_line(x: &CorrectSet, usage: &UsageRecord) -> Result<SpecialTriplet, Error> {
    let entry = x
        .census()
        .iter()
        .find(|e| e.line == usage.line)
        .filter(|e| e.k() == 2)
        .ok_or_else(|| Error::NotTwoNodeLine(usage.line.to_string()))?;
    let c = x.set().require_index(&usage.node)?;
    let product = &BivariatePoly::from_linear(&usage.line) * &usage.quotient;
    if product != *x.fundamental(c) {
        return Err(Error::Precondition(format!("{} does not use {}", usage.node, usage.line)));
    }
    Ok(SpecialTriplet::from_indices(x, [entry.indices[0], entry.indices[1], c], usage.quotient.normalized()))
}

/// Statements verified by [`peel_decomposition`], in checking order per step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statement {
    /// `ℓ_i = ℓ_{A_i C_i}` divides `μ_{k−i+1}`, avoids `B`, and `C_i` lies on `μ_{k−i+1}`.
    I,
    /// The trace of `ℓ_i` has `n−k+i+1` nodes: `A_i, C_i`, the zeros of `p⋆_{B,𝓑}`, and the
    /// intersections `D_ij`.
    II,
    /// `μ_{k−i}` is maximal of degree `k−i`.
    III,
    /// `𝓑_{n−k+i}` is `(n−k+i)`-correct with `ℓ_i` maximal in it.
    IV,
    /// `𝓐_{k−i} = 𝓐_{k−i+1} ∖ trace_i`.
    V,
    /// Each `ℓ_i` stays maximal in every later `𝓑_{n−k+s}`.
    VI,
}

impl Statement {
    pub const ALL: [Statement; 6] = [Statement::I, Statement::II, Statement::III, Statement::IV, Statement::V, Statement::VI];
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Statement::I => "i",
            Statement::II => "ii",
            Statement::III => "iii",
            Statement::IV => "iv",
            Statement::V => "v",
            Statement::VI => "vi",
        })
    }
}

/// State after peeling the `step`-th line. Every index refers to a node of `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionState {
    pub step: usize,
    pub line: LinearForm,
    pub a_index: usize,
    pub c_index: usize,
    /// `μ_{k−step}`.
    pub mu_rest: BivariatePoly,
    /// `X ∩ μ_{k−step}`.
    pub a_part: Vec<usize>,
    /// `X ∖ μ_{k−step}`.
    pub b_part: Vec<usize>,
    /// Nodes of the line where `μ_{k−step}` does not vanish.
    pub trace: Vec<usize>,
    /// Trace nodes that are zeros of `p⋆_{B,𝓑}`.
    pub residual_zeros: Vec<usize>,
    /// `D_{step,j} = ℓ_step ∩ ℓ_j` for `j < step`.
    pub intersections: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelViolation {
    pub step: usize,
    pub statement: Statement,
    pub detail: String,
}

impl fmt::Display for PeelViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {} statement ({}): {}", self.step, self.statement, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelOutcome {
    pub states: Vec<DecompositionState>,
    /// First violated statement; later steps are not attempted.
    pub violation: Option<PeelViolation>,
}

impl PeelOutcome {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }

    /// True when no statement up to and including `s` was violated.
    pub fn holds_through(&self, s: Statement) -> bool {
        self.violation.as_ref().map_or(true, |v| v.statement > s)
    }
}

/// Peels the lines `ℓ_i = ℓ_{A_i C_i}` off the maximal curve `mu` for the triplets
/// `{A_i, B, C_i}`, verifying each statement as it goes.
///
/// Each triple must contain `b`; of its other two vertices, the first lying on `mu` is
/// taken as `A_i`. Precondition failures are errors; statement failures are returned in
/// [`PeelOutcome::violation`].
pub fn peel_decomposition(
    x: &CorrectSet,
    mu: &CurveWitness,
    b: &Point,
    triplets: &[[Point; 3]],
) -> Result<PeelOutcome, Error> {
    let set = x.set();
    let b_idx = set.require_index(b)?;
    let mut pairs = Vec::with_capacity(triplets.len());
    for t in triplets {
        let idx = [set.require_index(&t[0])?, set.require_index(&t[1])?, set.require_index(&t[2])?];
        if !idx.contains(&b_idx) {
            return Err(Error::Precondition(format!("triplet does not contain the common node {b}")));
        }
        let others: Vec<usize> = idx.iter().copied().filter(|&i| i != b_idx).collect();
        if others.len() != 2 || others[0] == others[1] {
            return Err(Error::NodesNotDistinct);
        }
        pairs.push((others[0], others[1]));
    }
    peel_indices(x, mu, b_idx, &pairs)
}

pub(crate) fn peel_indices(
    x: &CorrectSet,
    mu: &CurveWitness,
    b: usize,
    pairs: &[(usize, usize)],
) -> Result<PeelOutcome, Error> {
    let n = x.degree();
    let k = mu.k;
    let set = x.set();
    let precondition = |msg: String| Err(Error::Precondition(msg));
    if !mu.is_maximal {
        return precondition(format!("curve of degree {k} is not maximal"));
    }
    if mu.indices.binary_search(&b).is_ok() {
        return precondition(format!("common node {} lies on the curve", x.node(b)));
    }
    if pairs.len() > k {
        return precondition(format!("{} triplets exceed the curve degree {k}", pairs.len()));
    }
    let on_mu = |i: usize| mu.indices.binary_search(&i).is_ok();
    let mut oriented = Vec::with_capacity(pairs.len());
    for &(p, q) in pairs {
        let (a, c) = if on_mu(p) {
            (p, q)
        } else if on_mu(q) {
            (q, p)
        } else {
            return precondition(format!("neither {} nor {} lies on the curve", x.node(p), x.node(q)));
        };
        oriented.push((a, c));
    }
    for i in 0..oriented.len() {
        for j in i + 1..oriented.len() {
            let s1: BTreeSet<usize> = [oriented[i].0, oriented[i].1].into();
            let s2: BTreeSet<usize> = [oriented[j].0, oriented[j].1].into();
            if s1 == s2 {
                return precondition(format!("triplets {} and {} coincide", i + 1, j + 1));
            }
            if let Some(&shared) = s1.intersection(&s2).next() {
                return precondition(format!(
                    "triplets {} and {} share the pair {{{}, {}}}; a pair of nodes completes to at most one special triplet, so two distinct third nodes are impossible",
                    i + 1,
                    j + 1,
                    x.node(b),
                    x.node(shared)
                ));
            }
        }
    }

    let residual_idx = mu.off_curve(x.len());
    let p_b = fundamental_polynomial(&set.subset(n - k, &residual_idx), x.node(b))
        .map_err(|_| Error::Precondition(format!("nodes off the curve are not {}-correct", n - k)))?;

    let mut states: Vec<DecompositionState> = Vec::with_capacity(oriented.len());
    let mut mu_prev = mu.poly.clone();
    let mut prev_a: BTreeSet<usize> = mu.indices.iter().copied().collect();
    let mut prev_b: BTreeSet<usize> = residual_idx.iter().copied().collect();
    let fail = |states: Vec<DecompositionState>, step: usize, statement: Statement, detail: String| {
        Ok(PeelOutcome { states, violation: Some(PeelViolation { step, statement, detail }) })
    };

    for (pos, &(a, c)) in oriented.iter().enumerate() {
        let step = pos + 1;
        let (pa, pc) = (x.node(a), x.node(c));
        let line = LinearForm::through(pa, pc).expect("distinct nodes");

        // (i)
        if line.contains(x.node(b)) {
            return fail(states, step, Statement::I, format!("B lies on {line}"));
        }
        if !prev_a.contains(&c) {
            return fail(states, step, Statement::I, format!("C = {pc} is off the remaining curve"));
        }
        if let Some(prev_step) = states.iter().find(|s| s.line == line).map(|s| s.step) {
            return fail(states, step, Statement::I, format!("{line} repeats step {prev_step}"));
        }
        let Some(mu_cur) = mu_prev.divide_by_linear(&line).expect("maximal curves are nonzero") else {
            return fail(states, step, Statement::I, format!("{line} does not divide the remaining curve"));
        };

        // (ii)
        let on_line: Vec<usize> = (0..x.len()).filter(|&i| line.contains(x.node(i))).collect();
        let trace: Vec<usize> = on_line.iter().copied().filter(|&i| !mu_cur.vanishes_at(x.node(i))).collect();
        let expected = n - k + step + 1;
        if !trace.contains(&a) || !trace.contains(&c) {
            return fail(states, step, Statement::II, "trace misses A or C".to_string());
        }
        let meet = |states: &[DecompositionState]| -> Result<Vec<usize>, String> {
            let mut found = Vec::with_capacity(states.len());
            for prev in states {
                let p = line
                    .intersection(&prev.line)
                    .ok_or_else(|| format!("{line} is parallel to step {} line", prev.step))?;
                match set.index_of(&p) {
                    Some(d) if trace.contains(&d) && d != a && d != c && !found.contains(&d) => found.push(d),
                    _ => return Err(format!("intersection {p} with step {} is not a fresh trace node", prev.step)),
                }
            }
            Ok(found)
        };
        let intersections = match meet(&states) {
            Ok(found) => found,
            Err(detail) => return fail(states, step, Statement::II, detail),
        };
        let extra: Vec<usize> =
            trace.iter().copied().filter(|i| *i != a && *i != c && !intersections.contains(i)).collect();
        let zeros_on_trace: Vec<usize> = trace.iter().copied().filter(|&i| p_b.vanishes_at(x.node(i))).collect();
        if trace.len() != expected {
            return fail(states, step, Statement::II, format!("trace has {} nodes, expected {expected}", trace.len()));
        }
        if extra.len() != n - k || zeros_on_trace != extra {
            return fail(states, step, Statement::II, "extra trace nodes differ from the zeros of p*_B on the line".to_string());
        }
        if p_b.restrict_to_line(&line).iter().all(Zero::is_zero) {
            return fail(states, step, Statement::II, format!("p*_B vanishes identically on {line}"));
        }

        // (iii)
        let cur_zeros = x.zeros_of(&mu_cur);
        let rest_degree = k - step;
        let degree_ok = mu_cur.degree() == Some(rest_degree);
        if !degree_ok || cur_zeros.len() != node_bound(n, rest_degree) {
            return fail(
                states,
                step,
                Statement::III,
                format!("remaining curve carries {} nodes, expected {}", cur_zeros.len(), node_bound(n, rest_degree)),
            );
        }

        // (iv)
        let cur_a: BTreeSet<usize> = cur_zeros.iter().copied().collect();
        let cur_b: BTreeSet<usize> = (0..x.len()).filter(|i| !cur_a.contains(i)).collect();
        let union: BTreeSet<usize> = prev_b.iter().chain(&trace).copied().collect();
        let b_list: Vec<usize> = cur_b.iter().copied().collect();
        let b_degree = n - k + step;
        if cur_b != union {
            return fail(states, step, Statement::IV, "off-curve set is not the previous one plus the trace".to_string());
        }
        if !is_n_correct(&set.subset(b_degree, &b_list)) {
            return fail(states, step, Statement::IV, format!("off-curve set is not {b_degree}-correct"));
        }
        if b_list.iter().filter(|&&i| line.contains(x.node(i))).count() != b_degree + 1 {
            return fail(states, step, Statement::IV, format!("{line} is not maximal in the off-curve set"));
        }

        // (v)
        let expected_a: BTreeSet<usize> = prev_a.iter().copied().filter(|i| !trace.contains(i)).collect();
        if cur_a != expected_a {
            return fail(states, step, Statement::V, "on-curve set is not the previous one minus the trace".to_string());
        }

        states.push(DecompositionState {
            step,
            line,
            a_index: a,
            c_index: c,
            mu_rest: mu_cur.clone(),
            a_part: cur_a.iter().copied().collect(),
            b_part: b_list,
            trace,
            residual_zeros: extra,
            intersections,
        });
        mu_prev = mu_cur;
        prev_a = cur_a;
        prev_b = cur_b;
    }

    for (i, s) in states.iter().enumerate() {
        for (j, &(a, c)) in oriented.iter().enumerate() {
            if i != j && (s.line.contains(x.node(a)) || s.line.contains(x.node(c))) {
                let detail = format!("{} meets a vertex of triplet {}", s.line, j + 1);
                return fail(states.clone(), s.step, Statement::I, detail);
            }
        }
    }
    for (i, s) in states.iter().enumerate() {
        for later in &states[i..] {
            let count = later.b_part.iter().filter(|&&v| s.line.contains(x.node(v))).count();
            if count != n - k + later.step + 1 {
                let detail = format!("{} has {count} nodes in the step-{} off-curve set", s.line, later.step);
                return fail(states.clone(), s.step, Statement::VI, detail);
            }
        }
    }
    Ok(PeelOutcome { states, violation: None })
}

/// True when the three nodes are noncollinear (a property every special triplet has).
pub fn noncollinear(t: &SpecialTriplet) -> bool {
    !collinear(&t.a, &t.b, &t.c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;
    use crate::generators::principal_lattice;
    use crate::lines::node_uses_line;

    fn line(a: i64, b: i64, c: i64) -> LinearForm {
        LinearForm::from_ints(a, b, c).unwrap()
    }

    fn lattice(n: usize) -> CorrectSet {
        CorrectSet::new(principal_lattice(n).unwrap()).unwrap()
    }

    fn quartic() -> BivariatePoly {
        let xy = &BivariatePoly::x() * &BivariatePoly::y();
        &(&xy * &BivariatePoly::from_linear(&line(0, 1, -1))) * &BivariatePoly::from_linear(&line(1, 1, -5))
    }

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn d_values() {
        for n in 1..=10 {
            assert_eq!(d(n, 1).unwrap(), n + 1);
        }
        assert_eq!(d(6, 3).unwrap(), 18);
        assert_eq!(d(5, 4).unwrap(), 18);
        assert!(matches!(d(3, 0), Err(Error::KOutOfRange { .. })));
        assert!(matches!(d(3, 4), Err(Error::KOutOfRange { .. })));
    }

    #[test]
    fn quartic_witness_on_degree_five_lattice() {
        let x = lattice(5);
        let w = curve_witness(&x, &quartic(), 4).unwrap();
        assert_eq!(w.indices.len(), 18);
        assert!(w.is_maximal);
        assert_eq!(w.residual_correct, Some(true));
        let off: BTreeSet<Point> = w.off_curve(x.len()).into_iter().map(|i| x.node(i).clone()).collect();
        assert_eq!(off, [pt(1, 2), pt(1, 3), pt(2, 2)].into_iter().collect());
    }

    #[test]
    fn witness_examples_and_errors() {
        let x = lattice(2);
        let w = curve_witness(&x, &BivariatePoly::from_linear(&line(1, 1, -2)), 1).unwrap();
        assert!(w.is_maximal);
        let two_node = curve_witness(&x, &BivariatePoly::from_linear(&line(1, -1, 0)), 1).unwrap();
        assert!(!two_node.is_maximal);
        assert_eq!(two_node.residual_correct, None);
        assert!(matches!(curve_witness(&x, &BivariatePoly::zero(1), 1), Err(Error::ZeroPolynomial)));
        assert!(matches!(curve_witness(&x, &quartic(), 4), Err(Error::DegreeOutOfRange { .. })));
    }

    #[test]
    fn special_triplet_in_degree_five_lattice() {
        let x = lattice(5);
        let t = detect_special_triplet(&x, &pt(1, 2), &pt(1, 3), &pt(2, 2)).unwrap().unwrap();
        assert!(t.f.is_proportional(&quartic()));
        assert!(noncollinear(&t));
        assert_eq!(detect_special_triplet(&x, &pt(1, 2), &pt(2, 1), &pt(2, 2)).unwrap(), None);
        assert!(matches!(detect_special_triplet(&x, &pt(1, 2), &pt(1, 2), &pt(2, 2)), Err(Error::NodesNotDistinct)));
        assert!(matches!(detect_special_triplet(&x, &pt(9, 2), &pt(1, 2), &pt(2, 2)), Err(Error::NodeNotInSet(_))));
    }

    #[test]
    fn special_triplet_in_degree_two_lattice() {
        let x = lattice(2);
        let t = detect_special_triplet(&x, &pt(1, 0), &pt(0, 1), &pt(0, 0)).unwrap().unwrap();
        assert!(t.f.is_proportional(&BivariatePoly::from_linear(&line(1, 1, -2))));

        let usage = node_uses_line(&x, &pt(0, 0), &line(1, 1, -1)).unwrap().unwrap();
        let from_line = triplet_from_used_2node_line(&x, &usage).unwrap();
        assert_eq!(from_line.vertex_set(), t.vertex_set());
        assert_eq!(from_line.f, t.f);
    }

    #[test]
    fn triplet_from_maximal_line_is_rejected() {
        let x = lattice(3);
        let usage = node_uses_line(&x, &pt(1, 1), &line(1, 0, 0)).unwrap().unwrap();
        assert!(matches!(triplet_from_used_2node_line(&x, &usage), Err(Error::NotTwoNodeLine(_))));
    }

    #[test]
    fn third_vertex_is_unique() {
        let x = lattice(3);
        let all = all_special_triplets(&x);
        assert!(!all.is_empty());
        for i in 0..x.len() {
            for j in i + 1..x.len() {
                assert!(all.iter().filter(|t| t.contains(i) && t.contains(j)).count() <= 1);
            }
        }
    }

    #[test]
    fn peel_on_degree_two_lattice() {
        let x = lattice(2);
        let b = x.set().require_index(&pt(0, 0)).unwrap();
        let mu = curve_witness(&x, x.fundamental(b), 2).unwrap();
        assert_eq!(mu.indices.len(), 5);
        assert!(mu.is_maximal);
        let out = peel_decomposition(&x, &mu, &pt(0, 0), &[[pt(1, 0), pt(0, 0), pt(0, 1)]]).unwrap();
        assert!(out.holds(), "{:?}", out.violation);
        let s = &out.states[0];
        assert_eq!(s.line, line(1, 1, -1));
        let trace: BTreeSet<Point> = s.trace.iter().map(|&i| x.node(i).clone()).collect();
        assert_eq!(trace, [pt(1, 0), pt(0, 1)].into_iter().collect());
        assert!(s.mu_rest.is_proportional(&BivariatePoly::from_linear(&line(1, 1, -2))));
        let bset: BTreeSet<Point> = s.b_part.iter().map(|&i| x.node(i).clone()).collect();
        assert_eq!(bset, [pt(0, 0), pt(1, 0), pt(0, 1)].into_iter().collect());
    }

    #[test]
    fn peel_with_no_triplets_is_empty() {
        let x = lattice(2);
        let mu = curve_witness(&x, x.fundamental(0), 2).unwrap();
        let out = peel_decomposition(&x, &mu, x.node(0), &[]).unwrap();
        assert!(out.states.is_empty() && out.holds());
    }

    #[test]
    fn peel_reports_non_special_triplet() {
        // {(1,0),(0,0),(1,1)} is not special; the line through (1,0),(1,1) is x = 1,
        // which does not divide p*_(0,0) = (x+y−1)(x+y−2)/2.
        let x = lattice(2);
        let b = x.set().require_index(&pt(0, 0)).unwrap();
        let mu = curve_witness(&x, x.fundamental(b), 2).unwrap();
        let out = peel_decomposition(&x, &mu, &pt(0, 0), &[[pt(1, 0), pt(0, 0), pt(1, 1)]]).unwrap();
        assert_eq!(out.violation.unwrap().statement, Statement::I);
    }

    #[test]
    fn peel_rejects_shared_pair() {
        let x = lattice(3);
        let b = x.set().require_index(&pt(0, 0)).unwrap();
        let mu = curve_witness(&x, x.fundamental(b), 3).unwrap();
        let err = peel_decomposition(
            &x,
            &mu,
            &pt(0, 0),
            &[[pt(1, 0), pt(0, 0), pt(0, 1)], [pt(1, 0), pt(0, 0), pt(2, 0)]],
        )
        .unwrap_err();
        match err {
            Error::Precondition(msg) => assert!(msg.contains("share the pair"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn quartic_is_not_peeled_at_non_special_triplet() {
        let x = lattice(5);
        let mu = curve_witness(&x, &quartic(), 4).unwrap();
        // B = (2,1) lies on y = 1, so it is on the curve: precondition failure.
        assert!(peel_decomposition(&x, &mu, &pt(2, 1), &[[pt(1, 2), pt(2, 1), pt(2, 2)]]).is_err());
        let constant = curve_witness(&x, &BivariatePoly::constant(int(3)), 0).unwrap();
        assert!(constant.is_maximal);
    }
}
