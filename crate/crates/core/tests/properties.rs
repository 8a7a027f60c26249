use std::collections::BTreeSet;

use num_traits::{One, Zero};
use proptest::prelude::*;

use gcsets::algebra::rational::{int, ratio};
use gcsets::curves::all_special_triplets;
use gcsets::generators::{
    check_general_position, principal_lattice, random_carnicer_gasca, random_chung_yao,
    random_general_position_lines,
};
use gcsets::io::{parse_nodeset, serialize_nodeset, NodeSetDocument};
use gcsets::lines::{classify_correct, maximal_lines};
use gcsets::{BivariatePoly, CorrectSet, NodeSet, Point, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=9).prop_map(|(n, d)| ratio(n, d))
}

fn distinct_points(max: usize) -> impl Strategy<Value = Vec<Point>> {
    prop::collection::btree_set((rational(), rational()).prop_map(|(x, y)| (x, y)), 1..=max)
        .prop_map(|s| s.into_iter().map(|(x, y)| Point::new(x, y)).collect())
}

fn small_gc_set() -> impl Strategy<Value = NodeSet> {
    (0usize..3, 1usize..=3, 0u64..40).prop_map(|(kind, n, seed)| match kind {
        0 => random_chung_yao(n, seed).unwrap(),
        1 => random_carnicer_gasca(n, seed).unwrap(),
        _ => principal_lattice(n).unwrap(),
    })
}

/// `(x, y) ↦ (a x + b y + e, c x + d y + f)` with `ad − bc ≠ 0`.
fn affine() -> impl Strategy<Value = [i64; 6]> {
    prop::array::uniform6(-4i64..=4).prop_filter("invertible", |m| m[0] * m[3] - m[1] * m[2] != 0)
}

fn apply(m: &[i64; 6], p: &Point) -> Point {
    Point::new(
        int(m[0]) * &p.x + int(m[1]) * &p.y + int(m[4]),
        int(m[2]) * &p.x + int(m[3]) * &p.y + int(m[5]),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn document_round_trip(points in distinct_points(12), degree in 0usize..4) {
        let set = NodeSet::new(degree, points).unwrap();
        let text = serialize_nodeset(&NodeSetDocument::from_set(&set));
        let loaded = parse_nodeset(&text).unwrap();
        prop_assert_eq!(loaded.set, set);
        prop_assert_eq!(serialize_nodeset(&loaded.document), text);
    }

    #[test]
    fn general_position_lines_are_general(m in 2usize..8, seed in any::<u64>()) {
        let arrangement = random_general_position_lines(m, seed);
        prop_assert_eq!(arrangement.lines.len(), m);
        prop_assert!(check_general_position(&arrangement.lines));
    }

    #[test]
    fn fundamentals_form_a_partition_of_unity(x in small_gc_set()) {
        let cs = CorrectSet::new(x).unwrap();
        let mut sum = BivariatePoly::zero(cs.degree());
        for p in cs.fundamentals() {
            sum = &sum + p;
        }
        prop_assert_eq!(sum.trimmed(), BivariatePoly::one());
    }

    #[test]
    fn interpolation_reproduces_values(x in small_gc_set(), seed in rational()) {
        let cs = CorrectSet::new(x).unwrap();
        let values: Vec<Rational> = (0..cs.len()).map(|i| &seed * int(i as i64) - int(1)).collect();
        let p = cs.interpolate(&values).unwrap();
        prop_assert!(p.degree().map_or(true, |d| d <= cs.degree()));
        for (i, v) in values.iter().enumerate() {
            prop_assert_eq!(&p.eval(cs.node(i)), v);
        }
    }

    #[test]
    fn fundamental_is_kronecker(x in small_gc_set()) {
        let cs = CorrectSet::new(x).unwrap();
        for i in 0..cs.len() {
            for j in 0..cs.len() {
                let v = cs.fundamental(i).eval(cs.node(j));
                prop_assert_eq!(v, if i == j { Rational::one() } else { Rational::zero() });
            }
        }
    }

    #[test]
    fn structure_is_affine_invariant(n in 1usize..=3, m in affine()) {
        let base = CorrectSet::new(principal_lattice(n).unwrap()).unwrap();
        let moved = NodeSet::new(n, base.set().nodes().iter().map(|p| apply(&m, p)).collect()).unwrap();
        let moved = CorrectSet::new(moved).unwrap();
        prop_assert_eq!(classify_correct(&moved), classify_correct(&base));
        prop_assert_eq!(maximal_lines(&moved).len(), maximal_lines(&base).len());
        let census = |cs: &CorrectSet| cs.census().iter().map(|e| e.indices.clone()).collect::<BTreeSet<_>>();
        prop_assert_eq!(census(&moved), census(&base));
        let triplets = |cs: &CorrectSet| {
            all_special_triplets(cs).iter().map(|t| t.vertex_set()).collect::<BTreeSet<_>>()
        };
        prop_assert_eq!(triplets(&moved), triplets(&base));
    }
}
