//! Executable checks of structural claims about maximal lines, maximal curves, special
//! triplets and used 2-node lines, run against concrete node sets.
//!
//! Every check is exact. Each claim id names one sub-statement; a report aggregates all
//! checks of that claim on one target and is `pass`, `fail` (with a witness) or
//! `vacuous` (hypotheses never met).

use std::cell::OnceCell;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::point::collinear;
use crate::algebra::{BivariatePoly, LinearForm, Point};
use crate::curves::{
    curve_witness, node_bound, peel_indices, CurveWitness, PeelOutcome, SpecialTriplet, Statement, TripletDetector,
};
use crate::generators::{cg_with_prescribed_2node_lines, principal_lattice, random_carnicer_gasca, random_chung_yao};
use crate::io::NodeSetDocument;
use crate::lines::{classify_correct, gc_factorization_idx, is_gc_set, users_of_line, Classification};
use crate::nodeset::{is_n_correct, CorrectSet, NodeSet};
use crate::Error;

/// Exhaustive special-triplet enumeration runs only up to this many nodes.
pub const TRIPLET_CACHE_LIMIT: usize = 28;
/// Exhaustive characterization over every common node `B` runs up to this degree.
pub const CHARACTERIZATION_EXHAUSTIVE_DEGREE: usize = 4;
/// Number of common nodes sampled above that degree.
pub const CHARACTERIZATION_SAMPLE: usize = 3;
/// Enumeration of census-line products runs up to this degree.
pub const MAX_CURVE_DEGREE: usize = 4;
/// Non-maximal line products tested for the converse direction, beyond single lines.
pub const CONVERSE_PRODUCT_SAMPLE: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Vacuous => "vacuous",
        })
    }
}

/// The set on which a claim failed, with the offending objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub set: NodeSetDocument,
    pub objects: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub claim_id: String,
    pub target: String,
    pub status: Status,
    pub detail: String,
    pub witness: Option<Witness>,
}

/// Groups of claim ids, selectable from the command line through [`Suite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    MaxLines,
    MaxCurve,
    TwoNode,
    Triplet,
    UsageBound,
    Characterization,
    Decomposition,
    Collinearity,
    Pair,
    Gc6,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::MaxLines,
        Family::MaxCurve,
        Family::TwoNode,
        Family::Triplet,
        Family::UsageBound,
        Family::Characterization,
        Family::Decomposition,
        Family::Collinearity,
        Family::Pair,
        Family::Gc6,
    ];

    pub fn claim_ids(self) -> &'static [&'static str] {
        match self {
            Family::MaxLines => &["max-lines.count", "max-lines.meet", "max-lines.no-concurrent"],
            Family::MaxCurve => &["max-curve.bound", "max-curve.converse", "max-curve.residual", "max-curve.used"],
            Family::TwoNode => &["two-node.single-user"],
            Family::Triplet => &["triplet.from-two-node", "triplet.noncollinear", "triplet.unique-third", "triplet.uses"],
            Family::UsageBound => &[
                "usage-bound.carnicer-gasca",
                "usage-bound.max-lines",
                "usage-bound.triplets",
                "usage-bound.two-node",
            ],
            Family::Characterization => &[
                "characterization.equiv",
                "characterization.i",
                "characterization.ii",
                "characterization.iii",
                "characterization.iv",
                "characterization.v",
                "characterization.vi",
                "characterization.vii",
            ],
            Family::Decomposition => &[
                "decomposition.i",
                "decomposition.ii",
                "decomposition.iii",
                "decomposition.iv",
                "decomposition.v",
                "decomposition.vi",
            ],
            Family::Collinearity => &["collinearity.collinear", "collinearity.gc", "collinearity.max-lines"],
            Family::Pair => &[
                "distinct-triplets",
                "pair.b2-correct",
                "pair.coincide",
                "pair.components",
                "pair.gc2",
                "pair.maximal-curve",
                "pair.users-distinct",
            ],
            Family::Gc6 => &["gc6.lines"],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    UsageBound,
    Collinearity,
    Peel,
    Gc6,
}

impl Suite {
    pub fn families(self) -> Vec<Family> {
        match self {
            Suite::All => Family::ALL.to_vec(),
            Suite::UsageBound => vec![Family::TwoNode, Family::UsageBound],
            Suite::Collinearity => vec![Family::Collinearity, Family::Pair],
            Suite::Peel => vec![Family::Characterization, Family::Decomposition],
            Suite::Gc6 => vec![Family::Gc6],
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Suite::All),
            "usage-bound" => Ok(Suite::UsageBound),
            "collinearity" => Ok(Suite::Collinearity),
            "peel" => Ok(Suite::Peel),
            "gc6" => Ok(Suite::Gc6),
            other => Err(format!("unknown suite {other:?}")),
        }
    }
}

/// A node set to verify: generated from parameters, or supplied directly.
#[derive(Clone, Debug)]
pub enum TargetSpec {
    ChungYao { degree: usize, seed: u64 },
    CarnicerGasca { degree: usize, seed: u64 },
    Principal { degree: usize },
    CgPrescribed { degree: usize, seed: u64 },
    Supplied { name: String, set: NodeSet, distinguished: Option<usize> },
}

impl TargetSpec {
    pub fn name(&self) -> String {
        match self {
            TargetSpec::ChungYao { degree, seed } => format!("chung-yao:n={degree}:seed={seed}"),
            TargetSpec::CarnicerGasca { degree, seed } => format!("carnicer-gasca:n={degree}:seed={seed}"),
            TargetSpec::Principal { degree } => format!("principal:n={degree}"),
            TargetSpec::CgPrescribed { degree, seed } => format!("cg-prescribed:n={degree}:seed={seed}"),
            TargetSpec::Supplied { name, .. } => name.clone(),
        }
    }

    /// The node set and its distinguished node, if any.
    pub fn build(&self) -> Result<(NodeSet, Option<usize>), Error> {
        match self {
            TargetSpec::ChungYao { degree, seed } => Ok((random_chung_yao(*degree, *seed)?, None)),
            TargetSpec::CarnicerGasca { degree, seed } => Ok((random_carnicer_gasca(*degree, *seed)?, None)),
            TargetSpec::Principal { degree } => Ok((principal_lattice(*degree)?, None)),
            TargetSpec::CgPrescribed { degree, seed } => {
                let (set, b) = cg_with_prescribed_2node_lines(*degree, *seed)?;
                Ok((set, Some(b)))
            }
            TargetSpec::Supplied { set, distinguished, .. } => Ok((set.clone(), *distinguished)),
        }
    }
}

/// Chung-Yao degrees 1..=5, Carnicer-Gasca 2..=5, principal lattices 2..=6 and
/// prescribed Carnicer-Gasca sets 2..=4, the randomized families over three seeds
/// derived from `seed`.
pub fn default_targets(seed: u64) -> Vec<TargetSpec> {
    let seeds = [seed, seed + 1, seed + 2];
    let mut out = Vec::new();
    for degree in 1..=5 {
        out.extend(seeds.iter().map(|&seed| TargetSpec::ChungYao { degree, seed }));
    }
    for degree in 2..=5 {
        out.extend(seeds.iter().map(|&seed| TargetSpec::CarnicerGasca { degree, seed }));
    }
    out.extend((2..=6).map(|degree| TargetSpec::Principal { degree }));
    for degree in 2..=4 {
        out.extend(seeds.iter().map(|&seed| TargetSpec::CgPrescribed { degree, seed }));
    }
    out
}

/// An n-correct set with lazily computed derived data shared across claims.
pub struct Instance {
    name: String,
    cs: CorrectSet,
    distinguished: Option<usize>,
    seed: u64,
    gc: OnceCell<bool>,
    classification: OnceCell<Classification>,
    triplets: OnceCell<Option<Vec<SpecialTriplet>>>,
    usages: OnceCell<Vec<Usage>>,
}

/// The 2-node line through `b` and `a`, used by `c`.
#[derive(Clone, Debug)]
struct Usage {
    a: usize,
    b: usize,
    c: usize,
    line: LinearForm,
}

impl Usage {
    fn vertex_set(&self) -> BTreeSet<usize> {
        [self.a, self.b, self.c].into()
    }
}

impl Instance {
    pub fn new(name: impl Into<String>, set: NodeSet, distinguished: Option<usize>, seed: u64) -> Result<Self, Error> {
        Ok(Self::from_correct(name, CorrectSet::new(set)?, distinguished, seed))
    }

    pub fn from_correct(name: impl Into<String>, cs: CorrectSet, distinguished: Option<usize>, seed: u64) -> Self {
        Instance {
            name: name.into(),
            cs,
            distinguished,
            seed,
            gc: OnceCell::new(),
            classification: OnceCell::new(),
            triplets: OnceCell::new(),
            usages: OnceCell::new(),
        }
    }

    pub fn correct_set(&self) -> &CorrectSet {
        &self.cs
    }

    fn n(&self) -> usize {
        self.cs.degree()
    }

    fn is_gc(&self) -> bool {
        *self.gc.get_or_init(|| is_gc_set(&self.cs))
    }

    fn classification(&self) -> Classification {
        *self.classification.get_or_init(|| classify_correct(&self.cs))
    }

    /// All special triplets, or `None` above [`TRIPLET_CACHE_LIMIT`] nodes.
    fn triplets(&self) -> Option<&[SpecialTriplet]> {
        self.triplets
            .get_or_init(|| (self.cs.len() <= TRIPLET_CACHE_LIMIT).then(|| crate::curves::all_special_triplets(&self.cs)))
            .as_deref()
    }

    /// Every used 2-node line, recorded once from each of its two nodes.
    fn usages(&self) -> &[Usage] {
        self.usages.get_or_init(|| {
            let mut out = Vec::new();
            for entry in self.cs.census().iter().filter(|e| e.k() == 2) {
                for (c, _) in users_of_line(&self.cs, entry) {
                    let (p, q) = (entry.indices[0], entry.indices[1]);
                    out.push(Usage { a: q, b: p, c, line: entry.line.clone() });
                    out.push(Usage { a: p, b: q, c, line: entry.line.clone() });
                }
            }
            out.sort_by_key(|u| (u.b, u.a, u.c));
            out
        })
    }

    fn usages_through(&self, b: usize) -> Vec<&Usage> {
        self.usages().iter().filter(|u| u.b == b).collect()
    }

    /// Special triplets containing `b`: from the cache when available, otherwise
    /// (for GC sets) the distinct triplets arising from used 2-node lines through `b`.
    fn triplets_through(&self, b: usize) -> Option<(Vec<SpecialTriplet>, &'static str)> {
        if let Some(all) = self.triplets() {
            return Some((all.iter().filter(|t| t.contains(b)).cloned().collect(), "exhaustive"));
        }
        if !self.is_gc() {
            return None;
        }
        let det = TripletDetector::new(&self.cs);
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for u in self.usages_through(b) {
            let mut idx = [u.a, u.b, u.c];
            idx.sort_unstable();
            if seen.insert(idx) {
                out.extend(det.special(idx));
            }
        }
        Some((out, "used 2-node lines"))
    }

    fn special(&self, mut idx: [usize; 3]) -> Option<SpecialTriplet> {
        idx.sort_unstable();
        match self.triplets() {
            Some(all) => all.binary_search_by(|t| t.indices.cmp(&idx)).ok().map(|i| all[i].clone()),
            None => TripletDetector::new(&self.cs).special(idx),
        }
    }

    fn p_star_witness(&self, b: usize) -> CurveWitness {
        curve_witness(&self.cs, self.cs.fundamental(b), self.n()).expect("fundamental polynomials have degree n")
    }

    fn label(&self, i: usize) -> String {
        format!("#{i} {}", self.cs.node(i))
    }

    /// Common nodes for the characterization: all nodes up to
    /// [`CHARACTERIZATION_EXHAUSTIVE_DEGREE`], a seeded sample above it.
    fn characterization_nodes(&self) -> (Vec<usize>, String) {
        let len = self.cs.len();
        if self.n() <= CHARACTERIZATION_EXHAUSTIVE_DEGREE {
            return ((0..len).collect(), "route: exhaustive".to_string());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ (self.n() as u64).rotate_left(32));
        let mut picked = sample(&mut rng, len, CHARACTERIZATION_SAMPLE.min(len)).into_vec();
        if let Some(d) = self.distinguished {
            if !picked.contains(&d) {
                picked.push(d);
            }
        }
        picked.sort_unstable();
        let names: Vec<String> = picked.iter().map(|i| format!("#{i}")).collect();
        (picked, format!("route: sampled B in {{{}}}", names.join(", ")))
    }
}

#[derive(Default)]
struct Tally {
    checks: usize,
    failures: usize,
    first_failure: Option<(String, Vec<String>)>,
    notes: BTreeSet<String>,
}

/// Accumulates sub-check outcomes per claim id for one target.
struct Ledger {
    target: String,
    document: NodeSetDocument,
    tallies: BTreeMap<&'static str, Tally>,
}

impl Ledger {
    fn new(target: &str, set: &NodeSet, distinguished: Option<usize>) -> Self {
        Ledger {
            target: target.to_string(),
            document: NodeSetDocument::from_set(set).with_distinguished(distinguished),
            tallies: BTreeMap::new(),
        }
    }

    fn for_instance(inst: &Instance) -> Self {
        Self::new(&inst.name, inst.cs.set(), inst.distinguished)
    }

    fn open(&mut self, claims: &[&'static str]) {
        for c in claims {
            self.tallies.entry(c).or_default();
        }
    }

    fn check(&mut self, claim: &'static str, ok: bool, failure: impl FnOnce() -> (String, Vec<String>)) {
        let t = self.tallies.entry(claim).or_default();
        t.checks += 1;
        if !ok {
            t.failures += 1;
            if t.first_failure.is_none() {
                t.first_failure = Some(failure());
            }
        }
    }

    fn note(&mut self, claim: &'static str, note: impl Into<String>) {
        self.tallies.entry(claim).or_default().notes.insert(note.into());
    }

    fn finish(self) -> Vec<VerificationReport> {
        let Ledger { target, document, tallies } = self;
        tallies
            .into_iter()
            .map(|(claim, t)| {
                let notes: Vec<String> = t.notes.into_iter().collect();
                let suffix = if notes.is_empty() { String::new() } else { format!("; {}", notes.join("; ")) };
                let (status, detail, witness) = match t.first_failure {
                    Some((message, objects)) => (
                        Status::Fail,
                        format!("{} of {} failed: {message}{suffix}", t.failures, plural(t.checks, "check")),
                        Some(Witness { set: document.clone(), objects }),
                    ),
                    None if t.checks > 0 => (Status::Pass, format!("{}{suffix}", plural(t.checks, "check")), None),
                    None => {
                        let detail = if notes.is_empty() { "hypotheses never met".to_string() } else { notes.join("; ") };
                        (Status::Vacuous, detail, None)
                    }
                };
                VerificationReport { claim_id: claim.to_string(), target: target.clone(), status, detail, witness }
            })
            .collect()
    }
}

fn plural(count: usize, noun: &str) -> String {
    if count == 1 { format!("1 {noun}") } else { format!("{count} {noun}s") }
}

fn record_statements(
    ledger: &mut Ledger,
    claims: &[&'static str; 6],
    outcome: &PeelOutcome,
    objects: impl Fn() -> Vec<String>,
) {
    for (s, claim) in Statement::ALL.iter().zip(claims) {
        match &outcome.violation {
            Some(v) if v.statement == *s => {
                let detail = v.to_string();
                ledger.check(claim, false, || (detail, objects()));
            }
            Some(v) if v.statement < *s => ledger.note(claim, "not reached after an earlier violation"),
            _ => ledger.check(claim, true, || unreachable!()),
        }
    }
}

// ---------------------------------------------------------------------------
// maximal lines

fn check_max_lines(inst: &Instance, ledger: &mut Ledger) {
    ledger.open(Family::MaxLines.claim_ids());
    let n = inst.n();
    let maximal: Vec<&LinearForm> = inst.cs.census().iter().filter(|e| e.k() == n + 1).map(|e| &e.line).collect();
    let count = maximal.len();
    ledger.check("max-lines.count", count <= n + 2, || {
        (format!("{count} maximal lines exceed n + 2 = {}", n + 2), maximal.iter().map(|l| l.to_string()).collect())
    });
    for i in 0..count {
        for j in i + 1..count {
            let meet = maximal[i].intersection(maximal[j]);
            let ok = meet.as_ref().is_some_and(|p| inst.cs.set().index_of(p).is_some());
            ledger.check("max-lines.meet", ok, || {
                ("maximal lines do not meet at a node".to_string(), vec![maximal[i].to_string(), maximal[j].to_string()])
            });
            for l in &maximal[j + 1..] {
                let concurrent = meet.as_ref().is_some_and(|p| l.contains(p));
                ledger.check("max-lines.no-concurrent", !concurrent, || {
                    (
                        "three maximal lines are concurrent".to_string(),
                        vec![maximal[i].to_string(), maximal[j].to_string(), l.to_string()],
                    )
                });
            }
        }
    }
}

// ---------------------------------------------------------------------------
// maximal curves assembled from census lines

type Mask = u128;

fn mask_of(indices: &[usize]) -> Mask {
    indices.iter().fold(0, |m, &i| m | (1 << i))
}

/// Products of distinct census lines of total degree at most `n`, skipping lines that add
/// fewer than two new nodes (such products are dominated by a shorter one) except for a
/// final line completing a maximal curve of degree `n`.
fn census_products(inst: &Instance, visit: &mut dyn FnMut(&[usize], Mask)) {
    let n = inst.n();
    let masks: Vec<Mask> = inst.cs.census().iter().map(|e| mask_of(&e.indices)).collect();
    fn walk(
        masks: &[Mask],
        n: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        cover: Mask,
        visit: &mut dyn FnMut(&[usize], Mask),
    ) {
        if chosen.len() == n {
            return;
        }
        for i in start..masks.len() {
            let next = cover | masks[i];
            let added = (next.count_ones() - cover.count_ones()) as usize;
            let k = chosen.len() + 1;
            let completes = added == 1 && k == n && next.count_ones() as usize == node_bound(n, n);
            if added >= 2 || completes {
                chosen.push(i);
                visit(chosen, next);
                walk(masks, n, i + 1, chosen, next, visit);
                chosen.pop();
            }
        }
    }
    walk(&masks, n, 0, &mut Vec::new(), 0, visit);
}

fn check_max_curves(inst: &Instance, ledger: &mut Ledger) {
    ledger.open(Family::MaxCurve.claim_ids());
    let n = inst.n();
    if n > MAX_CURVE_DEGREE {
        for claim in Family::MaxCurve.claim_ids() {
            ledger.note(claim, format!("not run: line-product enumeration limited to n <= {MAX_CURVE_DEGREE}"));
        }
        return;
    }
    let census = inst.cs.census();
    let len = inst.cs.len();
    let mut non_maximal_products = 0usize;
    let describe = |chosen: &[usize]| -> Vec<String> { chosen.iter().map(|&i| census[i].line.to_string()).collect() };
    census_products(inst, &mut |chosen, cover| {
        let k = chosen.len();
        let on = cover.count_ones() as usize;
        let bound = node_bound(n, k);
        ledger.check("max-curve.bound", on <= bound, || {
            (format!("product of {k} lines carries {on} > d(n,k) = {bound} nodes"), describe(chosen))
        });
        let lines: Vec<LinearForm> = chosen.iter().map(|&i| census[i].line.clone()).collect();
        let off: Vec<usize> = (0..len).filter(|i| cover & (1 << i) == 0).collect();
        let uses = |a: usize| inst.cs.fundamental(a).divide_by_lines(&lines).expect("nonzero").is_some();
        if on == bound {
            for &a in &off {
                ledger.check("max-curve.used", uses(a), || {
                    let mut objs = describe(chosen);
                    objs.push(format!("off-curve node {}", inst.label(a)));
                    ("maximal product does not divide p*_A".to_string(), objs)
                });
            }
            let residual = is_n_correct(&inst.cs.set().subset(n - k, &off));
            ledger.check("max-curve.residual", residual, || {
                (format!("nodes off a maximal curve are not {}-correct", n - k), describe(chosen))
            });
        } else if k == 1 || non_maximal_products < CONVERSE_PRODUCT_SAMPLE {
            if k > 1 {
                non_maximal_products += 1;
            }
            let some_fails = off.iter().any(|&a| !uses(a));
            ledger.check("max-curve.converse", some_fails, || {
                ("non-maximal product is used by every off-curve node".to_string(), describe(chosen))
            });
        }
    });
}

// ---------------------------------------------------------------------------
// 2-node lines and special triplets

fn check_single_user(inst: &Instance, ledger: &mut Ledger) {
    ledger.open(Family::TwoNode.claim_ids());
    for entry in inst.cs.census().iter().filter(|e| e.k() == 2) {
        let users = inst.usages().iter().filter(|u| u.line == entry.line && u.b == entry.indices[0]).count();
        ledger.check("two-node.single-user", users <= 1, || {
            (format!("2-node line used by {users} nodes"), vec![entry.line.to_string()])
        });
    }
}

fn check_triplets(inst: &Instance, ledger: &mut Ledger) {
    ledger.open(Family::Triplet.claim_ids());
    let Some(all) = inst.triplets() else {
        for claim in Family::Triplet.claim_ids() {
            ledger.note(claim, format!("not run: exhaustive triplet search limited to {TRIPLET_CACHE_LIMIT} nodes"));
        }
        return;
    };
    let cs = &inst.cs;
    let objs = |t: &SpecialTriplet| vec![format!("triplet {{{}, {}, {}}}", t.a, t.b, t.c), format!("f = {}", t.f)];
    for t in all {
        ledger.check("triplet.noncollinear", !collinear(&t.a, &t.b, &t.c), || ("vertices are collinear".to_string(), objs(t)));
        let [a, b, c] = t.indices;
        for (v, p, q) in [(a, b, c), (b, c, a), (c, a, b)] {
            let line = LinearForm::through(cs.node(p), cs.node(q)).expect("distinct");
            let product = &BivariatePoly::from_linear(&line) * &t.f;
            let ok = cs.fundamental(v).is_proportional(&product);
            ledger.check("triplet.uses", ok, || (format!("p* of {} is not the opposite line times f", inst.label(v)), objs(t)));
        }
    }
    let len = cs.len();
    let mut pair_counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for t in all {
        let [a, b, c] = t.indices;
        for pair in [(a, b), (a, c), (b, c)] {
            *pair_counts.entry(pair).or_default() += 1;
        }
    }
    for i in 0..len {
        for j in i + 1..len {
            let count = pair_counts.get(&(i, j)).copied().unwrap_or(0);
            ledger.check("triplet.unique-third", count <= 1, || {
                (format!("pair completes to {count} special triplets"), vec![inst.label(i), inst.label(j)])
            });
        }
    }
    for u in inst.usages().iter().filter(|u| u.b < u.a) {
        let mut idx = [u.a, u.b, u.c];
        idx.sort_unstable();
        let found = all.binary_search_by(|t| t.indices.cmp(&idx)).is_ok();
        ledger.check("triplet.from-two-node", found, || {
            ("used 2-node line does not give a special triplet".to_string(), vec![u.line.to_string(), inst.label(u.c)])
        });
    }
    for t in all {
        let [a, b, c] = t.indices;
        for (p, q, v) in [(a, b, c), (a, c, b), (b, c, a)] {
            let line = LinearForm::through(cs.node(p), cs.node(q)).expect("distinct");
            let two_node = cs.census().iter().any(|e| e.line == line && e.k() == 2);
            if two_node {
                let used = inst.usages().iter().any(|u| u.line == line && u.c == v);
                ledger.check("triplet.from-two-node", used, || {
                    ("third vertex does not use the 2-node side".to_string(), objs(t))
                });
            }
        }
    }
}

// ---------------------------------------------------------------------------
// usage bounds

fn check_usage_bound_at(inst: &Instance, ledger: &mut Ledger, b: usize) {
    let n = inst.n();
    let cs = &inst.cs;
    let maximal: Vec<&LinearForm> = cs.census().iter().filter(|e| e.k() == n + 1).map(|e| &e.line).collect();
    let avoiding = maximal.iter().filter(|l| !l.contains(cs.node(b))).count();
    let through = maximal.len() - avoiding;
    if n < 2 {
        ledger.note("usage-bound.triplets", "requires n >= 2");
        ledger.note("usage-bound.max-lines", "requires n >= 2");
    } else if let Some((triplets, route)) = inst.triplets_through(b) {
        let count = triplets.len();
        ledger.note("usage-bound.triplets", format!("route: {route}"));
        ledger.check("usage-bound.triplets", count <= n, || {
            (format!("{count} special triplets share {}", inst.label(b)), vec![inst.label(b)])
        });
        if count == n {
            ledger.check("usage-bound.max-lines", avoiding == n, || {
                (format!("{avoiding} maximal lines avoid B, expected {n}"), vec![inst.label(b)])
            });
        }
    } else {
        ledger.note("usage-bound.triplets", "not run: set too large and not GC");
    }

    if n < 3 || !inst.is_gc() {
        ledger.note("usage-bound.two-node", "requires a GC set with n >= 3");
        ledger.note("usage-bound.carnicer-gasca", "requires a GC set with n >= 3");
        return;
    }
    let used = inst.usages_through(b).len();
    ledger.check("usage-bound.two-node", used <= n, || {
        (format!("{used} used 2-node lines share {}", inst.label(b)), vec![inst.label(b)])
    });
    if used == n {
        let ok = maximal.len() == n + 1 && avoiding == n && through == 1;
        ledger.check("usage-bound.two-node", ok, || {
            (
                format!("{} maximal lines ({avoiding} avoiding B, {through} through B), expected n + 1 with one through B", maximal.len()),
                vec![inst.label(b)],
            )
        });
        let class = inst.classification();
        ledger.check("usage-bound.carnicer-gasca", class == Classification::CarnicerGasca, || {
            (format!("classified {class}"), vec![inst.label(b)])
        });
    }
}

// ---------------------------------------------------------------------------
// characterization of special triplets along a maximal curve

fn characterization_case(inst: &Instance, ledger: &mut Ledger, mu: &CurveWitness, b: usize, a: usize, c: usize) {
    let cs = &inst.cs;
    let n = inst.n();
    let special = inst.special([a, b, c]);
    let objects = || vec![format!("B = {}", inst.label(b)), format!("A = {}", inst.label(a)), format!("C = {}", inst.label(c))];
    let outcome = peel_indices(cs, mu, b, &[(a, c)]);
    let first_two = outcome.as_ref().is_ok_and(|o| o.holds_through(Statement::II));
    ledger.check("characterization.equiv", first_two == special.is_some(), || {
        let which = if first_two { "(i) and (ii) hold but the triplet is not special" } else { "special triplet violates (i) or (ii)" };
        (which.to_string(), objects())
    });
    let Some(t) = special else { return };
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            ledger.check("characterization.i", false, || (e.to_string(), objects()));
            return;
        }
    };
    let claims = ["characterization.i", "characterization.ii", "characterization.iii", "characterization.iv", "characterization.v"];
    // With one triplet the last peel statement is the maximality of l_1 in B_{n-k+1}, part of (iv).
    record_statements(ledger, &[claims[0], claims[1], claims[2], claims[3], claims[4], claims[3]], &outcome, objects);
    let Some(state) = outcome.states.first().filter(|_| outcome.holds()) else {
        ledger.note("characterization.vi", "not reached after an earlier violation");
        ledger.note("characterization.vii", "not reached after an earlier violation");
        return;
    };

    let b_set = cs.set().subset(n - mu.k + 1, &state.b_part);
    let local = |i: usize| state.b_part.binary_search(&i).expect("vertex is in the off-curve set");
    let still_special = CorrectSet::new(b_set)
        .ok()
        .and_then(|sub| TripletDetector::new(&sub).detect([local(a), local(b), local(c)]))
        .is_some();
    ledger.check("characterization.vi", still_special, || {
        ("triplet is not special in the enlarged off-curve set".to_string(), objects())
    });

    let abc = t.vertex_set();
    let candidates: Vec<SpecialTriplet> = match inst.triplets() {
        Some(all) => all.iter().filter(|s| s.contains(b)).cloned().collect(),
        None => {
            let det = TripletDetector::new(cs);
            let mut found = Vec::new();
            for &d in &state.trace {
                for e in (0..cs.len()).filter(|&e| e != b && e != d) {
                    let mut idx = [b, d, e];
                    idx.sort_unstable();
                    found.extend(det.special(idx));
                }
            }
            found
        }
    };
    for s in candidates.iter().filter(|s| state.trace.iter().any(|&d| s.contains(d))) {
        ledger.check("characterization.vii", s.vertex_set() == abc, || {
            let mut objs = objects();
            objs.push(format!("other triplet {{{}, {}, {}}}", s.a, s.b, s.c));
            ("another special triplet through B meets the trace".to_string(), objs)
        });
    }
}

fn check_characterization(inst: &Instance, ledger: &mut Ledger) {
    ledger.open(Family::Characterization.claim_ids());
    let (nodes, route) = inst.characterization_nodes();
    let len = inst.cs.len();
    for claim in Family::Characterization.claim_ids() {
        ledger.note(claim, route.clone());
    }
    for b in nodes {
        let mu = inst.p_star_witness(b);
        let others: Vec<usize> = (0..len).filter(|&i| i != b).collect();
        for (i, &a) in others.iter().enumerate() {
            for &c in &others[i + 1..] {
                characterization_case(inst, ledger, &mu, b, a, c);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// multi-triplet decomposition

const DECOMPOSITION: [&str; 6] = [
    "decomposition.i",
    "decomposition.ii",
    "decomposition.iii",
    "decomposition.iv",
    "decomposition.v",
    "decomposition.vi",
];

fn decomposition_case(inst: &Instance, ledger: &mut Ledger, mu: &CurveWitness, b: usize, pairs: &[(usize, usize)]) {
    let objects = || {
        let mut objs = vec![format!("B = {}", inst.label(b))];
        objs.extend(pairs.iter().map(|&(a, c)| format!("triplet A = {}, C = {}", inst.label(a), inst.label(c))));
        objs
    };
    match peel_indices(&inst.cs, mu, b, pairs) {
        Ok(outcome) => record_statements(ledger, &DECOMPOSITION, &outcome, objects),
        Err(e) => ledger.note("decomposition.i", format!("precondition rejected at {}: {e}", inst.label(b))),
    }
}

fn check_decomposition(inst: &Instance, ledger: &mut Ledger) {
    ledger.open(Family::Decomposition.claim_ids());
    for b in 0..inst.cs.len() {
        let Some((triplets, route)) = inst.triplets_through(b) else {
            ledger.note("decomposition.i", "not run: set too large and not GC");
            return;
        };
        if triplets.is_empty() {
            continue;
        }
        for claim in DECOMPOSITION {
            ledger.note(claim, format!("route: {route}"));
        }
        let pairs: Vec<(usize, usize)> = triplets
            .iter()
            .map(|t| {
                let others: Vec<usize> = t.indices.iter().copied().filter(|&i| i != b).collect();
                (others[0], others[1])
            })
            .collect();
        decomposition_case(inst, ledger, &inst.p_star_witness(b), b, &pairs);
    }
}

// ---------------------------------------------------------------------------
// collinearity and pairs of used 2-node lines

fn check_collinearity_at(inst: &Instance, ledger: &mut Ledger, b: usize) {
    if !inst.is_gc() {
        for claim in Family::Collinearity.claim_ids() {
            ledger.note(claim, "requires a GC set");
        }
        return;
    }
    let cs = &inst.cs;
    let mut seen = BTreeSet::new();
    let distinct: Vec<&Usage> = inst.usages_through(b).into_iter().filter(|u| seen.insert(u.vertex_set())).collect();
    let m = distinct.len();
    if m < 2 {
        return;
    }
    let objects = || {
        let mut objs = vec![format!("B = {}", inst.label(b))];
        objs.extend(distinct.iter().map(|u| format!("{} used by {}", u.line, inst.label(u.c))));
        objs
    };
    let first = LinearForm::through(cs.node(b), cs.node(distinct[0].c)).expect("distinct");
    let collinear_ok = distinct.iter().all(|u| first.contains(cs.node(u.c)));
    ledger.check("collinearity.collinear", collinear_ok, || ("B and the users are not collinear".to_string(), objects()));

    let pairs: Vec<(usize, usize)> = distinct.iter().map(|u| (u.a, u.c)).collect();
    let outcome = match peel_indices(cs, &inst.p_star_witness(b), b, &pairs) {
        Ok(o) if o.holds() => o,
        Ok(o) => {
            let v = o.violation.expect("not holding").to_string();
            ledger.check("collinearity.gc", false, || (format!("peel failed: {v}"), objects()));
            return;
        }
        Err(e) => {
            ledger.check("collinearity.gc", false, || (format!("peel rejected: {e}"), objects()));
            return;
        }
    };
    let last = outcome.states.last().expect("m >= 2 states");
    let sub = CorrectSet::new(cs.set().subset(m, &last.b_part));
    let Ok(sub) = sub else {
        ledger.check("collinearity.gc", false, || (format!("off-curve set is not {m}-correct"), objects()));
        return;
    };
    ledger.check("collinearity.gc", is_gc_set(&sub), || (format!("off-curve set is not GC_{m}"), objects()));
    let maximal: Vec<&LinearForm> = sub.census().iter().filter(|e| e.k() == m + 1).map(|e| &e.line).collect();
    let ok = maximal.len() == m + 1 && maximal.contains(&&first);
    ledger.check("collinearity.max-lines", ok, || {
        (format!("{} maximal lines in the off-curve set, expected {} including the line through B", maximal.len(), m + 1), objects())
    });
}

fn check_pairs_at(inst: &Instance, ledger: &mut Ledger, b: usize) {
    let cs = &inst.cs;
    let n = inst.n();
    let usages = inst.usages_through(b);
    for (i, u1) in usages.iter().enumerate() {
        for u2 in &usages[i + 1..] {
            let objects = || {
                vec![
                    format!("B = {}", inst.label(b)),
                    format!("{} used by {}", u1.line, inst.label(u1.c)),
                    format!("{} used by {}", u2.line, inst.label(u2.c)),
                ]
            };
            ledger.check("pair.users-distinct", u1.c != u2.c, || ("one node uses both lines".to_string(), objects()));
            let swap = u1.c == u2.a;
            let same = u1.vertex_set() == u2.vertex_set();
            ledger.check("pair.coincide", swap == (u2.c == u1.a) && same == swap, || {
                ("triplet coincidence does not match C_1 = A_2 <=> C_2 = A_1".to_string(), objects())
            });
            if swap {
                continue;
            }
            let outcome = match peel_indices(cs, &inst.p_star_witness(b), b, &[(u1.a, u1.c), (u2.a, u2.c)]) {
                Ok(o) => o,
                Err(e) => {
                    ledger.check("pair.components", false, || (format!("peel rejected: {e}"), objects()));
                    continue;
                }
            };
            ledger.check("pair.components", outcome.holds_through(Statement::I), || {
                (format!("{}", outcome.violation.as_ref().expect("violated")), objects())
            });
            if !outcome.holds_through(Statement::I) {
                continue;
            }
            ledger.check("pair.maximal-curve", outcome.holds_through(Statement::III), || {
                (format!("{}", outcome.violation.as_ref().expect("violated")), objects())
            });
            let b2_ok = outcome.holds() && {
                let last = &outcome.states[1];
                let d = outcome.states[1].intersections.first().copied();
                let expected: BTreeSet<usize> = [u1.a, u2.a, b, u1.c, u2.c].into_iter().chain(d).collect();
                last.b_part.len() == 6 && last.b_part.iter().copied().collect::<BTreeSet<_>>() == expected
            };
            ledger.check("pair.b2-correct", b2_ok, || {
                ("off-curve set is not {A_1, A_2, B, C_1, C_2, D} with both lines maximal".to_string(), objects())
            });
            if !b2_ok || !inst.is_gc() || n < 2 {
                continue;
            }
            let collinear_ok = collinear(cs.node(b), cs.node(u1.c), cs.node(u2.c));
            let gc2 = CorrectSet::new(cs.set().subset(2, &outcome.states[1].b_part)).is_ok_and(|s| is_gc_set(&s));
            ledger.check("pair.gc2", collinear_ok && gc2, || {
                (format!("collinear: {collinear_ok}, GC_2: {gc2}"), objects())
            });
        }
    }
    if usages.len() >= 3 && inst.is_gc() {
        let sets: BTreeSet<BTreeSet<usize>> = usages.iter().map(|u| u.vertex_set()).collect();
        ledger.check("distinct-triplets", sets.len() == usages.len(), || {
            (
                format!("{} used 2-node lines give only {} distinct triplets", usages.len(), sets.len()),
                vec![format!("B = {}", inst.label(b))],
            )
        });
    }
}

// ---------------------------------------------------------------------------
// GC_6 line structure

fn check_gc6(inst: &Instance, ledger: &mut Ledger) {
    ledger.open(Family::Gc6.claim_ids());
    let cs = &inst.cs;
    if inst.n() != 6 {
        ledger.note("gc6.lines", "requires n = 6");
        return;
    }
    if cs.census().iter().any(|e| e.k() == 7) {
        ledger.note("gc6.lines", "set has a maximal line");
        return;
    }
    if !inst.is_gc() {
        ledger.note("gc6.lines", "requires a GC set");
        return;
    }
    for b in 0..cs.len() {
        let usages = inst.usages_through(b);
        if usages.len() < 3 {
            continue;
        }
        for i in 0..usages.len() {
            for j in i + 1..usages.len() {
                for k in j + 1..usages.len() {
                    let chosen = [usages[i], usages[j], usages[k]];
                    let objects = || {
                        let mut objs = vec![format!("B = {}", inst.label(b))];
                        objs.extend(chosen.iter().map(|u| format!("{} used by {}", u.line, inst.label(u.c))));
                        objs
                    };
                    let pairs: Vec<(usize, usize)> = chosen.iter().map(|u| (u.a, u.c)).collect();
                    let outcome = match peel_indices(cs, &inst.p_star_witness(b), b, &pairs) {
                        Ok(o) if o.holds() => o,
                        Ok(o) => {
                            let detail = o.violation.expect("not holding").to_string();
                            ledger.check("gc6.lines", false, || (format!("peel failed: {detail}"), objects()));
                            continue;
                        }
                        Err(e) => {
                            ledger.check("gc6.lines", false, || (format!("peel rejected: {e}"), objects()));
                            continue;
                        }
                    };
                    let peeled: Vec<&LinearForm> = outcome.states.iter().map(|s| &s.line).collect();
                    let factors = gc_factorization_idx(cs, b).unwrap_or_default();
                    let rest: Vec<&LinearForm> = factors.iter().filter(|l| !peeled.contains(l)).collect();
                    let mu3 = &outcome.states[2].mu_rest;
                    let on_mu3 = cs.zeros_of(mu3).len();
                    let six = rest.len() == 3
                        && rest.iter().all(|l| cs.census().iter().any(|e| &e.line == *l && e.k() == 6))
                        && on_mu3 == 18;
                    let disjoint = rest.len() == 3
                        && (0..3).all(|p| {
                            (p + 1..3).all(|q| {
                                rest[p].intersection(rest[q]).is_none_or(|pt| cs.set().index_of(&pt).is_none())
                            })
                        });
                    ledger.check("gc6.lines", six && disjoint, || {
                        (format!("residual cubic: {on_mu3} nodes, 6-node lines: {six}, node-disjoint: {disjoint}"), objects())
                    });
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// entry points

/// Runs the selected claim families on one instance.
pub fn verify_instance(inst: &Instance, families: &[Family]) -> Vec<VerificationReport> {
    let mut ledger = Ledger::for_instance(inst);
    let families: BTreeSet<Family> = families.iter().copied().collect();
    let len = inst.cs.len();
    for family in &families {
        match family {
            Family::MaxLines => check_max_lines(inst, &mut ledger),
            Family::MaxCurve => check_max_curves(inst, &mut ledger),
            Family::TwoNode => check_single_user(inst, &mut ledger),
            Family::Triplet => check_triplets(inst, &mut ledger),
            Family::UsageBound => {
                ledger.open(Family::UsageBound.claim_ids());
                (0..len).for_each(|b| check_usage_bound_at(inst, &mut ledger, b));
            }
            Family::Characterization => check_characterization(inst, &mut ledger),
            Family::Decomposition => check_decomposition(inst, &mut ledger),
            Family::Collinearity => {
                ledger.open(Family::Collinearity.claim_ids());
                (0..len).for_each(|b| check_collinearity_at(inst, &mut ledger, b));
            }
            Family::Pair => {
                ledger.open(Family::Pair.claim_ids());
                (0..len).for_each(|b| check_pairs_at(inst, &mut ledger, b));
            }
            Family::Gc6 => check_gc6(inst, &mut ledger),
        }
    }
    ledger.finish()
}

/// Builds every target and runs the selected families, sorted by claim id then target.
/// Targets that fail to build or are not n-correct yield `vacuous` reports.
pub fn run_suite(targets: &[TargetSpec], families: &[Family], seed: u64) -> Vec<VerificationReport> {
    let mut reports = Vec::new();
    for target in targets {
        let name = target.name();
        let built = target.build();
        let (set, distinguished) = match built {
            Ok(v) => v,
            Err(e) => {
                reports.push(VerificationReport {
                    claim_id: "target.build".to_string(),
                    target: name,
                    status: Status::Fail,
                    detail: e.to_string(),
                    witness: None,
                });
                continue;
            }
        };
        match CorrectSet::new(set.clone()) {
            Ok(cs) => reports.extend(verify_instance(&Instance::from_correct(&name, cs, distinguished, seed), families)),
            Err(_) => {
                let mut ledger = Ledger::new(&name, &set, distinguished);
                for f in families {
                    for claim in f.claim_ids() {
                        ledger.note(claim, format!("set is not {}-correct", set.degree()));
                    }
                }
                reports.extend(ledger.finish());
            }
        }
    }
    reports.sort_by(|a, b| (&a.claim_id, &a.target).cmp(&(&b.claim_id, &b.target)));
    reports
}

pub fn count_failures(reports: &[VerificationReport]) -> usize {
    reports.iter().filter(|r| r.status == Status::Fail).count()
}

/// Characterization of the special triplet `triple` (containing `b`) relative to the
/// maximal curve `mu`, with `b` off the curve and another vertex on it.
pub fn verify_special_triplet_characterization(
    x: &CorrectSet,
    mu: &CurveWitness,
    b: &Point,
    triple: &[Point; 3],
) -> Result<Vec<VerificationReport>, Error> {
    let inst = Instance::from_correct("input", x.clone(), None, 0);
    let set = x.set();
    let b_idx = set.require_index(b)?;
    let idx = [set.require_index(&triple[0])?, set.require_index(&triple[1])?, set.require_index(&triple[2])?];
    let others: Vec<usize> = idx.iter().copied().filter(|&i| i != b_idx).collect();
    let mut ledger = Ledger::for_instance(&inst);
    ledger.open(Family::Characterization.claim_ids());
    let on_mu = |i: usize| mu.indices.binary_search(&i).is_ok();
    if others.len() != 2 || !mu.is_maximal || on_mu(b_idx) || !others.iter().any(|&i| on_mu(i)) {
        for claim in Family::Characterization.claim_ids() {
            ledger.note(claim, "requires a maximal curve, B off it and a vertex on it");
        }
    } else {
        let (a, c) = if on_mu(others[0]) { (others[0], others[1]) } else { (others[1], others[0]) };
        characterization_case(&inst, &mut ledger, mu, b_idx, a, c);
    }
    Ok(ledger.finish())
}

/// Decomposition of `mu` along the special triplets sharing `b`.
pub fn verify_multi_triplet_decomposition(
    x: &CorrectSet,
    mu: &CurveWitness,
    b: &Point,
    triplets: &[[Point; 3]],
) -> Result<Vec<VerificationReport>, Error> {
    let inst = Instance::from_correct("input", x.clone(), None, 0);
    let set = x.set();
    let b_idx = set.require_index(b)?;
    let mut pairs = Vec::new();
    for t in triplets {
        let idx = [set.require_index(&t[0])?, set.require_index(&t[1])?, set.require_index(&t[2])?];
        let others: Vec<usize> = idx.iter().copied().filter(|&i| i != b_idx).collect();
        if others.len() != 2 || others[0] == others[1] {
            return Err(Error::NodesNotDistinct);
        }
        pairs.push((others[0], others[1]));
    }
    let mut ledger = Ledger::for_instance(&inst);
    ledger.open(Family::Decomposition.claim_ids());
    decomposition_case(&inst, &mut ledger, mu, b_idx, &pairs);
    Ok(ledger.finish())
}

fn verify_at(x: &CorrectSet, b: &Point, family: Family) -> Result<Vec<VerificationReport>, Error> {
    let inst = Instance::from_correct("input", x.clone(), None, 0);
    let b_idx = x.set().require_index(b)?;
    let mut ledger = Ledger::for_instance(&inst);
    ledger.open(family.claim_ids());
    match family {
        Family::Collinearity => check_collinearity_at(&inst, &mut ledger, b_idx),
        Family::UsageBound => check_usage_bound_at(&inst, &mut ledger, b_idx),
        _ => unreachable!("only per-node families"),
    }
    Ok(ledger.finish())
}

/// Collinearity of `B` with the users of the used 2-node lines through it.
pub fn verify_collinearity(x: &CorrectSet, b: &Point) -> Result<Vec<VerificationReport>, Error> {
    verify_at(x, b, Family::Collinearity)
}

/// Bounds on special triplets and used 2-node lines sharing `B`.
pub fn verify_usage_bound(x: &CorrectSet, b: &Point) -> Result<Vec<VerificationReport>, Error> {
    verify_at(x, b, Family::UsageBound)
}

pub fn verify_gc6_corollary(x: &CorrectSet) -> Vec<VerificationReport> {
    let inst = Instance::from_correct("input", x.clone(), None, 0);
    verify_instance(&inst, &[Family::Gc6])
}

/// Number of special triplets through `b` and the number of used 2-node lines through it.
pub fn usage_counts(x: &CorrectSet, b: usize) -> (Option<usize>, usize) {
    let inst = Instance::from_correct("input", x.clone(), None, 0);
    (inst.triplets_through(b).map(|(t, _)| t.len()), inst.usages_through(b).len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{chung_yao, principal_lattice};

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    fn status_of<'a>(reports: &'a [VerificationReport], claim: &str) -> &'a VerificationReport {
        reports.iter().find(|r| r.claim_id == claim).unwrap_or_else(|| panic!("no report for {claim}"))
    }

    fn lattice(n: usize) -> CorrectSet {
        CorrectSet::new(principal_lattice(n).unwrap()).unwrap()
    }

    #[test]
    fn characterization_on_degree_two_lattice() {
        let x = lattice(2);
        let b = x.set().require_index(&pt(0, 0)).unwrap();
        let mu = curve_witness(&x, x.fundamental(b), 2).unwrap();
        let reports = verify_special_triplet_characterization(&x, &mu, &pt(0, 0), &[pt(1, 0), pt(0, 0), pt(0, 1)]).unwrap();
        for claim in Family::Characterization.claim_ids() {
            assert_eq!(status_of(&reports, claim).status, Status::Pass, "{claim}: {:?}", status_of(&reports, claim));
        }
    }

    #[test]
    fn characterization_on_non_special_quartic_triplet() {
        let x = lattice(5);
        let l = |a, b, c| BivariatePoly::from_linear(&LinearForm::from_ints(a, b, c).unwrap());
        let quartic = &(&(&l(1, 0, 0) * &l(0, 1, 0)) * &l(0, 1, -1)) * &l(1, 1, -5);
        let mu = curve_witness(&x, &quartic, 4).unwrap();
        // B = (1,2) is off the quartic; (2,1) lies on y = 1.
        let reports = verify_special_triplet_characterization(&x, &mu, &pt(1, 2), &[pt(1, 2), pt(2, 1), pt(2, 2)]).unwrap();
        assert_eq!(status_of(&reports, "characterization.equiv").status, Status::Pass);
        assert_eq!(status_of(&reports, "characterization.iii").status, Status::Vacuous);
    }

    #[test]
    fn characterization_vacuous_without_vertex_on_curve() {
        let x = lattice(5);
        let l = |a, b, c| BivariatePoly::from_linear(&LinearForm::from_ints(a, b, c).unwrap());
        let quartic = &(&(&l(1, 0, 0) * &l(0, 1, 0)) * &l(0, 1, -1)) * &l(1, 1, -5);
        let mu = curve_witness(&x, &quartic, 4).unwrap();
        let reports = verify_special_triplet_characterization(&x, &mu, &pt(1, 2), &[pt(1, 2), pt(1, 3), pt(2, 2)]).unwrap();
        assert!(reports.iter().all(|r| r.status == Status::Vacuous));
    }

    #[test]
    fn decomposition_rejects_shared_pair_with_explanation() {
        let x = lattice(3);
        let b = x.set().require_index(&pt(0, 0)).unwrap();
        let mu = curve_witness(&x, x.fundamental(b), 3).unwrap();
        let reports = verify_multi_triplet_decomposition(
            &x,
            &mu,
            &pt(0, 0),
            &[[pt(1, 0), pt(0, 0), pt(0, 1)], [pt(1, 0), pt(0, 0), pt(2, 0)]],
        )
        .unwrap();
        let first = status_of(&reports, "decomposition.i");
        assert_eq!(first.status, Status::Vacuous);
        assert!(first.detail.contains("share the pair"), "{}", first.detail);
    }

    #[test]
    fn prescribed_set_passes_collinearity_and_usage_bound() {
        let (set, b) = cg_with_prescribed_2node_lines(3, 1).unwrap();
        let x = CorrectSet::new(set).unwrap();
        let bp = x.node(b).clone();
        for r in verify_collinearity(&x, &bp).unwrap() {
            assert_eq!(r.status, Status::Pass, "{r:?}");
        }
        let usage = verify_usage_bound(&x, &bp).unwrap();
        for r in &usage {
            assert_eq!(r.status, Status::Pass, "{r:?}");
        }
        assert_eq!(usage_counts(&x, b), (Some(3), 3));
    }

    #[test]
    fn chung_yao_counts() {
        let lines: Vec<LinearForm> =
            [(1, 0, 0), (0, 1, 0), (1, 1, -4), (1, -1, -1), (1, 2, -3)].iter().map(|&(a, b, c)| LinearForm::from_ints(a, b, c).unwrap()).collect();
        let x = CorrectSet::new(chung_yao(&lines).unwrap()).unwrap();
        for b in 0..x.len() {
            assert_eq!(usage_counts(&x, b), (Some(3), 0));
        }
        let reports = verify_collinearity(&x, x.node(0)).unwrap();
        assert!(reports.iter().all(|r| r.status == Status::Vacuous));
        assert!(verify_gc6_corollary(&x).iter().all(|r| r.status == Status::Vacuous));
    }

    #[test]
    fn empty_target_list() {
        assert!(run_suite(&[], &Family::ALL, 0).is_empty());
    }

    #[test]
    fn non_correct_target_is_vacuous() {
        let mut nodes = principal_lattice(2).unwrap().nodes().to_vec();
        nodes[5] = Point::from_ints(3, 0);
        let set = NodeSet::new(2, nodes).unwrap();
        let target = TargetSpec::Supplied { name: "moved".into(), set, distinguished: None };
        let reports = run_suite(&[target], &[Family::MaxLines], 0);
        assert!(!reports.is_empty());
        assert!(reports.iter().all(|r| r.status == Status::Vacuous));
    }

    #[test]
    fn small_suite_has_no_failures() {
        let targets = vec![
            TargetSpec::Principal { degree: 2 },
            TargetSpec::Principal { degree: 3 },
            TargetSpec::ChungYao { degree: 2, seed: 1 },
            TargetSpec::CgPrescribed { degree: 3, seed: 1 },
        ];
        let reports = run_suite(&targets, &Family::ALL, 7);
        let failures: Vec<_> = reports.iter().filter(|r| r.status == Status::Fail).collect();
        assert!(failures.is_empty(), "{failures:#?}");
        assert_eq!(reports, run_suite(&targets, &Family::ALL, 7));
    }

    #[test]
    fn suite_names_parse() {
        assert_eq!("peel".parse::<Suite>().unwrap(), Suite::Peel);
        assert!("nope".parse::<Suite>().is_err());
        assert_eq!(Suite::All.families().len(), Family::ALL.len());
    }
}
