//! Quantified residuation checks: the adjunction, its dual, and the
//! derived bounds, over a dense grid plus seeded random triples, for every
//! built-in connective in both residual modes.

use gvpfrs_core::connectives::{
    dual_grouping_of, Grouping, GroupingResidual, Negation, Overlap, OverlapResidual,
};

fn unit_grid(n: usize) -> Vec<f64> {
    (0..n).map(|i| i as f64 / (n - 1) as f64).collect()
}

fn random_units(count: usize, seed: u64) -> Vec<f64> {
    // splitmix64 stream; the adjunction should hold wherever we look
    let mut state = seed;
    (0..count)
        .map(|_| {
            state = state.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            ((z ^ (z >> 31)) >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
        })
        .collect()
}

fn overlaps() -> Vec<Overlap> {
    vec![
        Overlap::Product,
        Overlap::Minimum,
        Overlap::power(2.0).unwrap(),
        Overlap::power(3.5).unwrap(),
        Overlap::Harmonic,
    ]
}

fn groupings() -> Vec<Grouping> {
    vec![
        Grouping::ProbabilisticSum,
        Grouping::Maximum,
        Grouping::power(2.0).unwrap(),
        dual_grouping_of(&Overlap::Harmonic, Negation::Standard).unwrap(),
    ]
}

/// O(x,u) <= y  =>  u <= I_O(x,y), and u <= I_O(x,y) => O(x,u) <= y.
fn check_overlap_adjunction(o: &Overlap, pair: &OverlapResidual, slack: f64) {
    let grid = unit_grid(21);
    let mut triples: Vec<(f64, f64, f64)> = Vec::new();
    for &x in &grid {
        for &y in &grid {
            for &u in &grid {
                triples.push((x, y, u));
            }
        }
    }
    let r = random_units(3000, 0x5eed);
    for w in r.chunks_exact(3) {
        triples.push((w[0], w[1], w[2]));
    }

    let mut forward: f64 = 0.0; // u - I when O(x,u) <= y
    let mut backward: f64 = 0.0; // O(x,u) - y when u <= I
    for &(x, y, u) in &triples {
        let i = pair.implication(x, y);
        if o.eval(x, u) <= y {
            forward = forward.max(u - i);
        }
        if u <= i {
            backward = backward.max(o.eval(x, u) - y);
        }
    }
    assert!(
        forward <= slack && backward <= slack,
        "adjunction violated for {o}: forward {forward:e}, backward {backward:e}"
    );
}

/// y <= G(x,u)  <=>  I^G(x,y) <= u, same sampling.
fn check_grouping_adjunction(g: &Grouping, pair: &GroupingResidual, slack: f64) {
    let grid = unit_grid(21);
    let mut triples: Vec<(f64, f64, f64)> = Vec::new();
    for &x in &grid {
        for &y in &grid {
            for &u in &grid {
                triples.push((x, y, u));
            }
        }
    }
    let r = random_units(3000, 0xfade);
    for w in r.chunks_exact(3) {
        triples.push((w[0], w[1], w[2]));
    }

    let mut forward: f64 = 0.0; // I - u when y <= G(x,u)
    let mut backward: f64 = 0.0; // y - G(x,u) when I <= u
    for &(x, y, u) in &triples {
        let i = pair.coimplication(x, y);
        if y <= g.eval(x, u) {
            forward = forward.max(i - u);
        }
        if i <= u {
            backward = backward.max(y - g.eval(x, u));
        }
    }
    assert!(
        forward <= slack && backward <= slack,
        "co-adjunction violated for {g}: forward {forward:e}, backward {backward:e}"
    );
}

#[test]
fn closed_form_adjunctions_are_exact() {
    for o in overlaps() {
        let pair = OverlapResidual::closed_form(o.clone()).unwrap();
        check_overlap_adjunction(&o, &pair, 1e-12);
    }
    for g in groupings() {
        let pair = GroupingResidual::closed_form(g.clone()).unwrap();
        check_grouping_adjunction(&g, &pair, 1e-12);
    }
}

#[test]
fn bisected_adjunctions_hold_within_twice_tolerance() {
    for o in overlaps() {
        let pair = OverlapResidual::bisection(o.clone(), 1e-12);
        check_overlap_adjunction(&o, &pair, 2e-12);
    }
    for g in groupings() {
        let pair = GroupingResidual::bisection(g.clone(), 1e-12);
        check_grouping_adjunction(&g, &pair, 2e-12);
    }
}

#[test]
fn bisection_matches_closed_forms_on_dense_grid() {
    // the residuation cross-check: closed forms vs raw bisection on a
    // 101x101 grid, absolute gap below 1e-9. G_p is excluded: it meets 1
    // with zero slope, so rounding of G values at the boundary inflates
    // the bisected preimage far beyond the z-space tolerance.
    let grid = unit_grid(101);
    for o in [
        Overlap::Product,
        Overlap::power(2.0).unwrap(),
        Overlap::Harmonic,
        Overlap::Minimum,
    ] {
        let closed = OverlapResidual::closed_form(o.clone()).unwrap();
        let bisect = OverlapResidual::bisection(o.clone(), 1e-12);
        let mut worst: f64 = 0.0;
        for &x in &grid {
            for &y in &grid {
                worst = worst.max((closed.implication(x, y) - bisect.implication(x, y)).abs());
            }
        }
        assert!(worst <= 1e-9, "closed vs bisected residual for {o}: {worst:e}");
    }
    for g in [Grouping::Maximum, Grouping::ProbabilisticSum] {
        let closed = GroupingResidual::closed_form(g.clone()).unwrap();
        let bisect = GroupingResidual::bisection(g.clone(), 1e-12);
        let mut worst: f64 = 0.0;
        for &x in &grid {
            for &y in &grid {
                worst = worst.max((closed.coimplication(x, y) - bisect.coimplication(x, y)).abs());
            }
        }
        assert!(worst <= 1e-9, "closed vs bisected coresidual for {g}: {worst:e}");
    }
}

#[test]
fn residuals_of_dual_pairs_conjugate_through_negation() {
    // I_O(x,y) = N(I^G(N(x), N(y))) for standard-dual pairs
    let n = Negation::Standard;
    let pairs = [
        (Overlap::Product, Grouping::ProbabilisticSum),
        (Overlap::Minimum, Grouping::Maximum),
        (Overlap::power(2.0).unwrap(), Grouping::power(2.0).unwrap()),
    ];
    let grid = unit_grid(51);
    for (o, g) in pairs {
        let op = OverlapResidual::closed_form(o).unwrap();
        let gp = GroupingResidual::closed_form(g).unwrap();
        let mut worst: f64 = 0.0;
        for &x in &grid {
            for &y in &grid {
                let lhs = op.implication(x, y);
                let rhs = n.eval(gp.coimplication(n.eval(x), n.eval(y)));
                worst = worst.max((lhs - rhs).abs());
            }
        }
        assert!(worst <= 1e-12, "duality conjugation gap {worst:e}");
    }
}
