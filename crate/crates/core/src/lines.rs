//! Line census, maximal lines, used lines, GC factorization and classification.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::algebra::{BivariatePoly, LinearForm, Point};
use crate::nodeset::{CorrectSet, NodeSet};
use crate::Error;

/// A line through at least two nodes, with exactly the nodes it contains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineCensusEntry {
    pub line: LinearForm,
    /// Indices of the incident nodes, ascending.
    pub indices: Vec<usize>,
    pub nodes_on: Vec<Point>,
}

impl LineCensusEntry {
    pub fn k(&self) -> usize {
        self.indices.len()
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }
}

/// Every line through two or more nodes, sorted by normalized coefficients.
pub fn line_census(x: &NodeSet) -> Vec<LineCensusEntry> {
    let nodes = x.nodes();
    let mut lines: BTreeMap<LinearForm, BTreeSet<usize>> = BTreeMap::new();
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            let l = LinearForm::through(&nodes[i], &nodes[j]).expect("nodes are distinct");
            let entry = lines.entry(l).or_default();
            entry.insert(i);
            entry.insert(j);
        }
    }
    lines
        .into_iter()
        .map(|(line, idx)| {
            let indices: Vec<usize> = idx.into_iter().collect();
            let nodes_on = indices.iter().map(|&i| nodes[i].clone()).collect();
            LineCensusEntry { line, indices, nodes_on }
        })
        .collect()
}

/// Census entries with `k = n + 1`.
pub fn maximal_entries(x: &CorrectSet) -> Vec<&LineCensusEntry> {
    let target = x.degree() + 1;
    x.census().iter().filter(|e| e.k() == target).collect()
}

pub fn maximal_lines(x: &CorrectSet) -> Vec<LinearForm> {
    maximal_entries(x).into_iter().map(|e| e.line.clone()).collect()
}

/// Number of nodes of `x` on `l`.
pub fn nodes_on_line(x: &NodeSet, l: &LinearForm) -> Vec<usize> {
    (0..x.len()).filter(|&i| l.contains(x.node(i))).collect()
}

/// Evidence that `node` uses `line`: `p⋆_node = line · quotient`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UsageRecord {
    pub node: Point,
    pub line: LinearForm,
    pub quotient: BivariatePoly,
}

pub(crate) fn uses_line_idx(x: &CorrectSet, node: usize, l: &LinearForm) -> Option<BivariatePoly> {
    x.fundamental(node).divide_by_linear(l).expect("fundamental polynomials are nonzero")
}

pub fn node_uses_line(x: &CorrectSet, a: &Point, l: &LinearForm) -> Result<Option<UsageRecord>, Error> {
    let idx = x.set().require_index(a)?;
    Ok(uses_line_idx(x, idx, l).map(|quotient| UsageRecord { node: a.clone(), line: l.clone(), quotient }))
}

/// Candidate factors for node `a`: census lines avoiding `a`, by descending `k` then
/// normalized coefficients.
fn factor_candidates(x: &CorrectSet, a: usize) -> Vec<&LineCensusEntry> {
    let mut cands: Vec<&LineCensusEntry> = x.census().iter().filter(|e| !e.contains_index(a)).collect();
    cands.sort_by(|p, q| q.k().cmp(&p.k()).then_with(|| p.line.cmp(&q.line)));
    cands
}

pub(crate) fn gc_factorization_idx(x: &CorrectSet, a: usize) -> Option<Vec<LinearForm>> {
    let n = x.degree();
    let mut rest = x.fundamental(a).clone();
    let mut found = Vec::with_capacity(n);
    for entry in factor_candidates(x, a) {
        if found.len() == n {
            break;
        }
        while let Some(q) = rest.divide_by_linear(&entry.line).expect("nonzero") {
            rest = q;
            found.push(entry.line.clone());
        }
    }
    if found.len() == n && rest.degree() == Some(0) {
        found.sort();
        Some(found)
    } else {
        None
    }
}

/// The `n` lines whose product is a multiple of `p⋆_a`, searched among census lines of
/// `X ∖ {a}`; `None` when `p⋆_a` does not split that way.
pub fn gc_factorization(x: &CorrectSet, a: &Point) -> Result<Option<Vec<LinearForm>>, Error> {
    let idx = x.set().require_index(a)?;
    Ok(gc_factorization_idx(x, idx))
}

pub fn is_gc_set(x: &CorrectSet) -> bool {
    (0..x.len()).all(|i| gc_factorization_idx(x, i).is_some())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Classification {
    NotCorrect,
    CorrectNonGc,
    GcOther,
    CarnicerGasca,
    ChungYao,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::NotCorrect => "not-correct",
            Classification::CorrectNonGc => "correct-non-gc",
            Classification::GcOther => "gc-other",
            Classification::CarnicerGasca => "carnicer-gasca",
            Classification::ChungYao => "chung-yao",
        })
    }
}

/// Chung-Yao exactly when there are `n+2` maximal lines, Carnicer-Gasca when `n+1`.
pub fn classify_correct(x: &CorrectSet) -> Classification {
    let n = x.degree();
    let maximal = maximal_entries(x).len();
    if maximal == n + 2 {
        Classification::ChungYao
    } else if maximal == n + 1 {
        Classification::CarnicerGasca
    } else if is_gc_set(x) {
        Classification::GcOther
    } else {
        Classification::CorrectNonGc
    }
}

pub fn classify(x: &NodeSet) -> Classification {
    match CorrectSet::new(x.clone()) {
        Ok(cs) => classify_correct(&cs),
        Err(_) => Classification::NotCorrect,
    }
}

/// A 2-node line `ℓ_{AB}` through the common node `B`, used by node `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoNodeUsage {
    pub a: Point,
    pub line: LinearForm,
    pub c: Point,
    pub a_index: usize,
    pub c_index: usize,
    pub quotient: BivariatePoly,
}

/// Every node using the 2-node line `entry` (at most one for an n-correct set).
pub(crate) fn users_of_line(x: &CorrectSet, entry: &LineCensusEntry) -> Vec<(usize, BivariatePoly)> {
    (0..x.len())
        .filter(|&c| !entry.contains_index(c))
        .filter_map(|c| uses_line_idx(x, c, &entry.line).map(|q| (c, q)))
        .collect()
}

pub(crate) fn used_two_node_lines_idx(x: &CorrectSet, b: usize) -> Vec<TwoNodeUsage> {
    let mut out = Vec::new();
    for entry in x.census().iter().filter(|e| e.k() == 2 && e.contains_index(b)) {
        let a = if entry.indices[0] == b { entry.indices[1] } else { entry.indices[0] };
        for (c, quotient) in users_of_line(x, entry) {
            out.push(TwoNodeUsage {
                a: x.node(a).clone(),
                line: entry.line.clone(),
                c: x.node(c).clone(),
                a_index: a,
                c_index: c,
                quotient,
            });
        }
    }
    out
}

/// The used 2-node lines through `b`, each with its second node `A` and the node `C`
/// that uses it. Unused lines are omitted.
pub fn used_two_node_lines_through(x: &CorrectSet, b: &Point) -> Result<Vec<TwoNodeUsage>, Error> {
    let idx = x.set().require_index(b)?;
    Ok(used_two_node_lines_idx(x, idx))
}
