//! Order-statistic selection versus brute-force subset enumeration, plus
//! structural properties of closure and granules, on randomized small
//! instances.

use proptest::prelude::*;

use gvpfrs_core::connectives::{
    dual_grouping_of, Grouping, GroupingResidual, Negation, Overlap, OverlapResidual,
};
use gvpfrs_core::engine::{
    approximate, bruteforce_lower, bruteforce_upper, crisp_lower, crisp_upper,
    DEFAULT_ORACLE_CAP,
};
use gvpfrs_core::fuzzy::{
    check_relation, o_granule, o_transitive_closure, FuzzyRelation, FuzzySet, RELATION_TOL,
};

fn overlap_pool(idx: usize) -> Overlap {
    match idx % 4 {
        0 => Overlap::Product,
        1 => Overlap::power(2.0).unwrap(),
        2 => Overlap::Harmonic,
        _ => Overlap::Minimum,
    }
}

fn beta_pool(idx: usize) -> f64 {
    [0.3, 0.5, 0.8, 1.0][idx % 4]
}

fn instance(n: usize) -> impl Strategy<Value = (FuzzyRelation, FuzzySet)> {
    (
        prop::collection::vec(prop::collection::vec(0.0f64..=1.0, n), n),
        prop::collection::vec(0.0f64..=1.0, n),
    )
        .prop_map(|(rows, a)| {
            (
                FuzzyRelation::new(&rows).expect("rows in range"),
                FuzzySet::new(a).expect("memberships in range"),
            )
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn selection_equals_enumeration(
        oi in 0usize..4,
        bi in 0usize..4,
        seeded in (2usize..=8).prop_flat_map(instance),
    ) {
        let (r, a) = seeded;
        let o = overlap_pool(oi);
        let g = dual_grouping_of(&o, Negation::Standard).unwrap();
        let (op, gp) = (OverlapResidual::auto(o), GroupingResidual::auto(g));
        let beta = beta_pool(bi);
        let sel = approximate(&r, &op, &gp, Negation::Standard, &a, beta).unwrap();
        let blo = bruteforce_lower(&r, &op, &a, beta, DEFAULT_ORACLE_CAP).unwrap();
        let bup = bruteforce_upper(&r, &gp, Negation::Standard, &a, beta, DEFAULT_ORACLE_CAP).unwrap();
        prop_assert!(sel.lower.max_abs_diff(&blo) <= 1e-9);
        prop_assert!(sel.upper.max_abs_diff(&bup) <= 1e-9);
    }

    #[test]
    fn closure_contains_input_and_is_idempotent(
        inst in (2usize..=6).prop_flat_map(instance),
        oi in 0usize..4,
    ) {
        let (r, _) = inst;
        let o = overlap_pool(oi);
        let c = o_transitive_closure(&r, &o);
        prop_assert!(r.subrelation_of(&c, 0.0));
        let cc = o_transitive_closure(&c, &o);
        prop_assert!(cc.max_abs_diff(&c) <= 1e-12);
        let report = check_relation(&c, &o, RELATION_TOL);
        prop_assert!(report.o_transitive);
    }

    #[test]
    fn granules_are_monotone_in_level(
        inst in (2usize..=6).prop_flat_map(instance),
        oi in 0usize..4,
        l1 in 0.0f64..=1.0,
        l2 in 0.0f64..=1.0,
    ) {
        let (r, _) = inst;
        let o = overlap_pool(oi);
        let (lo, hi) = if l1 <= l2 { (l1, l2) } else { (l2, l1) };
        for anchor in 0..r.len() {
            let small = o_granule(&r, &o, anchor, lo).unwrap();
            let big = o_granule(&r, &o, anchor, hi).unwrap();
            prop_assert!(small.values.subset_of(&big.values, 1e-15));
        }
    }

    #[test]
    fn crisp_counting_equals_granular_route(
        n in 2usize..=7,
        oi in 0usize..4,
        bi in 0usize..4,
        bits in prop::collection::vec(prop::bool::ANY, 7 * 7 + 7),
    ) {
        let r = FuzzyRelation::from_fn(n, |x, y| if bits[x * n + y] { 1.0 } else { 0.0 });
        let a = FuzzySet::new((0..n).map(|i| if bits[7 * 7 + i] { 1.0 } else { 0.0 }).collect()).unwrap();
        let beta = beta_pool(bi);
        let o = overlap_pool(oi);
        let g = dual_grouping_of(&o, Negation::Standard).unwrap();
        let cl = crisp_lower(&r, &a, beta).unwrap();
        let gl = approximate(&r, &OverlapResidual::auto(o), &GroupingResidual::auto(g), Negation::Standard, &a, beta).unwrap();
        prop_assert!(cl.max_abs_diff(&gl.lower) <= 1e-12);
        let cu = crisp_upper(&r, &a, beta).unwrap();
        prop_assert!(cu.max_abs_diff(&gl.upper) <= 1e-12);
    }

    #[test]
    fn symmetry_verdict_is_inverse_invariant(
        inst in (2usize..=6).prop_flat_map(instance),
    ) {
        let (r, _) = inst;
        let a = check_relation(&r, &Overlap::Product, RELATION_TOL);
        let b = check_relation(&r.inverse(), &Overlap::Product, RELATION_TOL);
        prop_assert_eq!(a.symmetric, b.symmetric);
    }
}
