//! The registered laws.
//!
//! Each law restates one identity exactly at the level it holds
//! (containment, equality, cardinality bound, or biconditional), guarded
//! by the premises it needs. Quantifiers over `[0,1]` are sampled on
//! `{0, 0.25, 0.5, 0.75, 1}` plus three random values per trial.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;

use super::gen;
use super::{gpair, opair, Checks, Ctx, LawDef, TrialResult};
use crate::connectives::{
    satisfies_exchange_grouping, satisfies_exchange_overlap, unit_row_above_identity,
    zero_row_below_identity, Grouping,
    GroupingResidual, Negation, Overlap, OverlapResidual,
};
use crate::engine::{
    check_comparability, crisp_lower, crisp_upper, lower_approx, upper_approx,
    ComparabilityVerdict, Precision,
};
use crate::fuzzy::{check_relation, o_transitive_closure, FuzzyRelation, FuzzySet};

// ---------------------------------------------------------------------------
// Shorthands
// ---------------------------------------------------------------------------

fn lower(r: &FuzzyRelation, op: &OverlapResidual, a: &FuzzySet, beta: f64) -> FuzzySet {
    lower_approx(r, op, a, beta).expect("generated instance is well formed").values
}

fn upper(
    r: &FuzzyRelation,
    gp: &GroupingResidual,
    neg: Negation,
    a: &FuzzySet,
    beta: f64,
) -> FuzzySet {
    upper_approx(r, gp, neg, a, beta)
        .expect("generated instance is well formed")
        .values
}

fn gvec(r: &FuzzyRelation, op: &OverlapResidual, a: &FuzzySet, beta: f64) -> FuzzySet {
    crate::engine::g_vector(r, op, a, beta).expect("generated instance is well formed")
}

fn hvec(
    r: &FuzzyRelation,
    gp: &GroupingResidual,
    neg: Negation,
    a: &FuzzySet,
    beta: f64,
) -> FuzzySet {
    crate::engine::h_vector(r, gp, neg, a, beta).expect("generated instance is well formed")
}

/// `I_O(alpha_X, A)` pointwise.
fn io_const(op: &OverlapResidual, alpha: f64, a: &FuzzySet) -> FuzzySet {
    a.map(|v| op.implication(alpha, v))
}

/// `O(alpha_X, A)` pointwise.
fn o_const(o: &Overlap, alpha: f64, a: &FuzzySet) -> FuzzySet {
    a.map(|v| o.eval(alpha, v))
}

/// `I^G(alpha_X, A)` pointwise.
fn ig_const(gp: &GroupingResidual, alpha: f64, a: &FuzzySet) -> FuzzySet {
    a.map(|v| gp.coimplication(alpha, v))
}

/// `G(alpha_X, A)` pointwise.
fn g_const(g: &Grouping, alpha: f64, a: &FuzzySet) -> FuzzySet {
    a.map(|v| g.eval(alpha, v))
}

fn ok(checks: Checks) -> TrialResult {
    TrialResult::Checked(checks)
}

const SLACK: f64 = 1e-12;

/// Number of anchors `y` whose O-granule at `level` sits below `A`.
fn lower_witness_count(
    r: &FuzzyRelation,
    o: &Overlap,
    a: &FuzzySet,
    x: usize,
    level: f64,
) -> usize {
    (0..r.len())
        .filter(|&y| o.eval(r.at(x, y), level) <= a.value(y) + SLACK)
        .count()
}

/// Number of anchors `y` whose G-granule at `level` sits above `A`.
fn upper_witness_count(
    rn: &FuzzyRelation,
    g: &Grouping,
    a: &FuzzySet,
    x: usize,
    level: f64,
) -> usize {
    (0..rn.len())
        .filter(|&y| a.value(y) <= g.eval(rn.at(x, y), level) + SLACK)
        .count()
}

/// `{x : |[x]_R ∩ A^c| <= n - k}` for crisp `R`, `A`.
fn counting_lower_set(r: &FuzzyRelation, a: &FuzzySet, k: usize) -> FuzzySet {
    let n = r.len();
    let values: Vec<f64> = (0..n)
        .map(|x| {
            let c = (0..n)
                .filter(|&y| r.at(x, y) == 1.0 && a.value(y) == 0.0)
                .count();
            if c <= n - k {
                1.0
            } else {
                0.0
            }
        })
        .collect();
    FuzzySet::new(values).expect("crisp output")
}

/// `{x : |[x]_R ∩ A| > n - k}` for crisp `R`, `A`.
fn counting_upper_set(r: &FuzzyRelation, a: &FuzzySet, k: usize) -> FuzzySet {
    let n = r.len();
    let values: Vec<f64> = (0..n)
        .map(|x| {
            let c = (0..n)
                .filter(|&y| r.at(x, y) == 1.0 && a.value(y) == 1.0)
                .count();
            if c > n - k {
                1.0
            } else {
                0.0
            }
        })
        .collect();
    FuzzySet::new(values).expect("crisp output")
}

// Fixtures shared with the acceptance goldens.

fn similarity_fixture() -> FuzzyRelation {
    FuzzyRelation::new(&[
        alloc::vec![1.0, 0.6, 1.0],
        alloc::vec![0.6, 1.0, 0.6],
        alloc::vec![1.0, 0.6, 1.0],
    ])
    .expect("fixture")
}

fn non_transitive_fixture() -> FuzzyRelation {
    FuzzyRelation::new(&[
        alloc::vec![0.0, 0.2, 0.8],
        alloc::vec![1.0, 0.0, 1.0],
        alloc::vec![0.0, 0.1, 0.0],
    ])
    .expect("fixture")
}

fn harmonic_fixture_relation() -> FuzzyRelation {
    FuzzyRelation::new(&[
        alloc::vec![0.0, 0.4, 0.4],
        alloc::vec![0.2, 0.0, 0.2],
        alloc::vec![0.2, 0.2, 0.0],
    ])
    .expect("fixture")
}

fn crisp_similarity_fixture() -> FuzzyRelation {
    FuzzyRelation::new(&[
        alloc::vec![1.0, 0.0, 1.0],
        alloc::vec![0.0, 1.0, 0.0],
        alloc::vec![1.0, 0.0, 1.0],
    ])
    .expect("fixture")
}

fn set(values: &[f64]) -> FuzzySet {
    FuzzySet::new(values.to_vec()).expect("fixture")
}

// ---------------------------------------------------------------------------
// Lemma 2.1 — residuation without extra premises
// ---------------------------------------------------------------------------

fn lemma_2_1_residual_bounds(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let o = ctx.any_overlap(rng);
    let g = ctx.any_grouping(rng);
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let mut c = Checks::new(ctx.tolerance(), format!("O={o} G={g}"));
    for x in gen::alphas(rng) {
        for y in gen::alphas(rng) {
            c.le(o.eval(x, op.implication(x, y)), y, "O(x, I_O(x,y)) <= y");
            c.le(y, g.eval(gp.coimplication(x, y), x), "y <= G(I^G(x,y), x)");
        }
    }
    ok(c)
}

fn lemma_2_1_meet_distribution(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let o = ctx.any_overlap(rng);
    let g = ctx.any_grouping(rng);
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let mut c = Checks::new(ctx.tolerance(), format!("O={o} G={g}"));
    let m = 1 + gen::index(rng, 6);
    let xs: Vec<f64> = (0..m).map(|_| gen::unit(rng)).collect();
    let y = gen::unit(rng);
    let meet = xs.iter().copied().fold(1.0f64, f64::min);
    let join = xs.iter().copied().fold(0.0f64, f64::max);
    let io_meet = xs.iter().map(|&v| op.implication(y, v)).fold(1.0f64, f64::min);
    let ig_join = xs.iter().map(|&v| gp.coimplication(y, v)).fold(0.0f64, f64::max);
    c.eq(op.implication(y, meet), io_meet, "I_O(y, meet) = meet I_O(y, .)");
    c.eq(gp.coimplication(y, join), ig_join, "I^G(y, join) = join I^G(y, .)");
    ok(c)
}

fn lemma_2_1_join_distribution(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let o = ctx.any_overlap(rng);
    let g = ctx.any_grouping(rng);
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let mut c = Checks::new(ctx.tolerance(), format!("O={o} G={g}"));
    let m = 1 + gen::index(rng, 6);
    let xs: Vec<f64> = (0..m).map(|_| gen::unit(rng)).collect();
    let y = gen::unit(rng);
    let meet = xs.iter().copied().fold(1.0f64, f64::min);
    let join = xs.iter().copied().fold(0.0f64, f64::max);
    let io_join = xs.iter().map(|&v| op.implication(y, v)).fold(0.0f64, f64::max);
    let ig_meet = xs.iter().map(|&v| gp.coimplication(y, v)).fold(1.0f64, f64::min);
    c.eq(op.implication(y, join), io_join, "I_O(y, join) = join I_O(y, .)");
    c.eq(gp.coimplication(y, meet), ig_meet, "I^G(y, meet) = meet I^G(y, .)");
    ok(c)
}

fn lemma_2_1_antitone_first_arg(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let o = ctx.any_overlap(rng);
    let g = ctx.any_grouping(rng);
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let mut c = Checks::new(ctx.tolerance(), format!("O={o} G={g}"));
    let m = 1 + gen::index(rng, 6);
    let xs: Vec<f64> = (0..m).map(|_| gen::unit(rng)).collect();
    let y = gen::unit(rng);
    let meet = xs.iter().copied().fold(1.0f64, f64::min);
    let join = xs.iter().copied().fold(0.0f64, f64::max);
    let io_meet = xs.iter().map(|&v| op.implication(v, y)).fold(1.0f64, f64::min);
    let ig_join = xs.iter().map(|&v| gp.coimplication(v, y)).fold(0.0f64, f64::max);
    c.eq(op.implication(join, y), io_meet, "I_O(join, y) = meet I_O(., y)");
    c.eq(gp.coimplication(meet, y), ig_join, "I^G(meet, y) = join I^G(., y)");
    ok(c)
}

fn lemma_2_1_exchange_iff(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let o = ctx.any_overlap(rng);
    let g = ctx.any_grouping(rng);
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let mut c = Checks::new(ctx.tolerance(), format!("O={o} G={g}"));
    // A clean gap separates the associative built-ins from the rest, so a
    // sampled certificate on each side of the "iff" is reliable.
    let cert = 1e-7;
    let o6 = satisfies_exchange_overlap(&o);
    let g6 = satisfies_exchange_grouping(&g);
    let mut io_exchange = 0.0f64;
    let mut io_compose = 0.0f64;
    let mut ig_exchange = 0.0f64;
    let mut ig_compose = 0.0f64;
    let pts = gen::alphas(rng);
    for x in pts {
        for y in pts {
            for z in pts {
                let a = op.implication(x, op.implication(y, z));
                let b = op.implication(y, op.implication(x, z));
                io_exchange = io_exchange.max((a - b).abs());
                io_compose = io_compose.max((a - op.implication(o.eval(x, y), z)).abs());
                let a = gp.coimplication(x, gp.coimplication(y, z));
                let b = gp.coimplication(y, gp.coimplication(x, z));
                ig_exchange = ig_exchange.max((a - b).abs());
                ig_compose = ig_compose.max((a - gp.coimplication(g.eval(x, y), z)).abs());
            }
        }
    }
    c.agree(o6, io_exchange <= cert, "O6 iff I_O exchange");
    c.agree(o6, io_compose <= cert, "O6 iff I_O(x,I_O(y,z)) = I_O(O(x,y),z)");
    c.agree(g6, ig_exchange <= cert, "G6 iff I^G exchange");
    c.agree(g6, ig_compose <= cert, "G6 iff I^G(x,I^G(y,z)) = I^G(G(x,y),z)");
    ok(c)
}

// ---------------------------------------------------------------------------
// Lemma 2.2 — identity elements
// ---------------------------------------------------------------------------

fn lemma_2_2_identity_unit(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let (Some(o), Some(g)) = (ctx.identity_overlap(rng), ctx.identity_grouping(rng)) else {
        return TrialResult::PremiseUnmet;
    };
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let mut c = Checks::new(ctx.tolerance(), format!("O={o} G={g}"));
    for x in gen::alphas(rng) {
        c.eq(op.implication(1.0, x), x, "I_O(1,x) = x");
        c.eq(gp.coimplication(0.0, x), x, "I^G(0,x) = x");
    }
    ok(c)
}

fn lemma_2_2_order_iff(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let (Some(o), Some(g)) = (ctx.identity_overlap(rng), ctx.identity_grouping(rng)) else {
        return TrialResult::PremiseUnmet;
    };
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let mut c = Checks::new(ctx.tolerance(), format!("O={o} G={g}"));
    let pts = gen::alphas(rng);
    for x in pts {
        for y in pts {
            let io = op.implication(x, y);
            let ig = gp.coimplication(y, x);
            if x <= y {
                c.le(1.0, io + 1e-9, "x <= y implies I_O(x,y) = 1");
                c.le(ig, 1e-9, "x <= y implies I^G(y,x) = 0");
            }
            if io >= 1.0 {
                c.le(x, y + 1e-7, "I_O(x,y) = 1 implies x <= y");
            }
            if ig <= 0.0 {
                c.le(x, y + 1e-7, "I^G(y,x) = 0 implies x <= y");
            }
        }
    }
    ok(c)
}

fn lemma_2_2_residual_dominance(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let (Some(o), Some(g)) = (ctx.identity_overlap(rng), ctx.identity_grouping(rng)) else {
        return TrialResult::PremiseUnmet;
    };
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let mut c = Checks::new(ctx.tolerance(), format!("O={o} G={g}"));
    for x in gen::alphas(rng) {
        for y in gen::alphas(rng) {
            c.le(x, op.implication(y, x), "x <= I_O(y,x)");
            c.le(gp.coimplication(y, x), x, "I^G(y,x) <= x");
        }
    }
    ok(c)
}

// ---------------------------------------------------------------------------
// Lemma 2.3 — exchange principle consequences
// ---------------------------------------------------------------------------

fn lemma_2_3_shift_inequality(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let (Some(o), Some(g)) = (ctx.assoc_overlap(rng), ctx.assoc_grouping(rng)) else {
        return TrialResult::PremiseUnmet;
    };
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let mut c = Checks::new(ctx.tolerance(), format!("O={o} G={g}"));
    let pts = gen::alphas(rng);
    for x in pts {
        for y in pts {
            for z in pts {
                c.le(
                    o.eval(x, op.implication(y, z)),
                    op.implication(y, o.eval(x, z)),
                    "O(x,I_O(y,z)) <= I_O(y,O(x,z))",
                );
                c.le(
                    gp.coimplication(y, g.eval(x, z)),
                    g.eval(x, gp.coimplication(y, z)),
                    "I^G(y,G(x,z)) <= G(x,I^G(y,z))",
                );
            }
        }
    }
    ok(c)
}

fn lemma_2_3_self_distribution(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let (Some(o), Some(g)) = (ctx.assoc_overlap(rng), ctx.assoc_grouping(rng)) else {
        return TrialResult::PremiseUnmet;
    };
    let (op, gp) = (opair(o), gpair(g));
    let mut c = Checks::new(ctx.tolerance(), String::from("self-distribution"));
    let pts = gen::alphas(rng);
    for x in pts {
        for y in pts {
            for z in pts {
                c.le(
                    op.implication(y, z),
                    op.implication(op.implication(x, y), op.implication(x, z)),
                    "I_O(y,z) <= I_O(I_O(x,y),I_O(x,z))",
                );
                c.le(
                    gp.coimplication(gp.coimplication(x, y), gp.coimplication(x, z)),
                    gp.coimplication(y, z),
                    "I^G(I^G(x,y),I^G(x,z)) <= I^G(y,z)",
                );
            }
        }
    }
    ok(c)
}

// ---------------------------------------------------------------------------
// Lemma 3.1 — crisp-relation duality (no duality premise on O, G)
// ---------------------------------------------------------------------------

fn lemma_3_1_crisp_duality(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let Some(neg) = ctx.involutive_negation() else {
        return TrialResult::PremiseUnmet;
    };
    let o = ctx.any_overlap(rng);
    let g = ctx.any_grouping(rng);
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::crisp_relation(rng, n);
    let a = gen::fuzzy_set(rng, n);
    let beta = ctx.beta(rng);
    let mut c = Checks::new(
        ctx.tolerance(),
        format!("n={n} beta={beta:.6} O={o} G={g} crisp R"),
    );
    let an = a.complement(neg);
    c.set_eq(
        &lower(&r, &op, &a, beta).complement(neg),
        &upper(&r, &gp, neg, &an, beta),
        "N(lower(A)) = upper(A^N)",
    );
    c.set_eq(
        &upper(&r, &gp, neg, &a, beta).complement(neg),
        &lower(&r, &op, &an, beta),
        "N(upper(A)) = lower(A^N)",
    );
    ok(c)
}

// ---------------------------------------------------------------------------
// Lemma 4.1 — per-subset level vectors
// ---------------------------------------------------------------------------

fn lemma_4_1_granular_meet_join(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let o = ctx.any_overlap(rng);
    let g = ctx.any_grouping(rng);
    let Some(neg) = ctx.involutive_negation() else {
        return TrialResult::PremiseUnmet;
    };
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::relation(rng, n);
    let rn = r.complement(neg);
    let beta = ctx.beta(rng);
    let k = Precision::new(beta, n).expect("beta validated").k;
    // one fixed admissible subset X_i with |X_i| >= k
    let mut members: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        members.swap(i, gen::index(rng, i + 1));
    }
    members.truncate(k + gen::index(rng, n - k + 1));
    let m = 2 + gen::index(rng, 3);
    let fam: Vec<FuzzySet> = (0..m).map(|_| gen::fuzzy_set(rng, n)).collect();
    let meet = fam
        .iter()
        .skip(1)
        .fold(fam[0].clone(), |acc, s| acc.intersection(s));
    let join = fam.iter().skip(1).fold(fam[0].clone(), |acc, s| acc.union(s));

    let g_i = |a: &FuzzySet, x: usize| {
        members
            .iter()
            .map(|&y| op.implication(r.at(x, y), a.value(y)))
            .fold(1.0f64, f64::min)
    };
    let h_i = |a: &FuzzySet, x: usize| {
        members
            .iter()
            .map(|&y| gp.coimplication(rn.at(x, y), a.value(y)))
            .fold(0.0f64, f64::max)
    };

    let mut c = Checks::new(
        ctx.tolerance(),
        format!("n={n} |X_i|={} family={m} O={o} G={g}", members.len()),
    );
    for x in 0..n {
        let lhs = g_i(&meet, x);
        let rhs = fam.iter().map(|a| g_i(a, x)).fold(1.0f64, f64::min);
        c.eq(lhs, rhs, "g_i over meet = meet of g_i");
        let lhs = h_i(&join, x);
        let rhs = fam.iter().map(|a| h_i(a, x)).fold(0.0f64, f64::max);
        c.eq(lhs, rhs, "h_i over join = join of h_i");
    }
    ok(c)
}

fn lemma_4_1_monotone(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let o = ctx.any_overlap(rng);
    let g = ctx.any_grouping(rng);
    let Some(neg) = ctx.involutive_negation() else {
        return TrialResult::PremiseUnmet;
    };
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::relation(rng, n);
    let a = gen::fuzzy_set(rng, n);
    let b = gen::superset_of(rng, &a);
    let beta = ctx.beta(rng);
    let mut c = Checks::new(ctx.tolerance(), format!("n={n} beta={beta:.6} O={o} G={g}"));
    c.set_le(&gvec(&r, &op, &a, beta), &gvec(&r, &op, &b, beta), "g_A <= g_B");
    c.set_le(
        &hvec(&r, &gp, neg, &a, beta),
        &hvec(&r, &gp, neg, &b, beta),
        "h_A <= h_B",
    );
    ok(c)
}

// ---------------------------------------------------------------------------
// Lemma 4.2 — identity-element consequences for g and h
// ---------------------------------------------------------------------------

fn lemma_4_2_top_bottom(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let (Some(o), Some(g)) = (ctx.identity_overlap(rng), ctx.identity_grouping(rng)) else {
        return TrialResult::PremiseUnmet;
    };
    let Some(neg) = ctx.involutive_negation() else {
        return TrialResult::PremiseUnmet;
    };
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::relation(rng, n);
    let beta = ctx.beta(rng);
    let mut c = Checks::new(ctx.tolerance(), format!("n={n} beta={beta:.6} O={o} G={g}"));
    c.set_eq(&gvec(&r, &op, &FuzzySet::full(n), beta), &FuzzySet::full(n), "g_X = X");
    c.set_eq(
        &hvec(&r, &gp, neg, &FuzzySet::empty(n), beta),
        &FuzzySet::empty(n),
        "h_empty = empty",
    );
    ok(c)
}

fn lemma_4_2_constant_bounds(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let (Some(o), Some(g)) = (ctx.identity_overlap(rng), ctx.identity_grouping(rng)) else {
        return TrialResult::PremiseUnmet;
    };
    let Some(neg) = ctx.involutive_negation() else {
        return TrialResult::PremiseUnmet;
    };
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::relation(rng, n);
    let beta = ctx.beta(rng);
    let mut c = Checks::new(ctx.tolerance(), format!("n={n} beta={beta:.6} O={o} G={g}"));
    for alpha in gen::alphas(rng) {
        let am = FuzzySet::constant(n, alpha).expect("alpha in range");
        c.set_le(&am, &gvec(&r, &op, &am, beta), "alpha_X <= g_alpha");
        c.set_le(&hvec(&r, &gp, neg, &am, beta), &am, "h_alpha <= alpha_X");
    }
    ok(c)
}

fn lemma_4_2_implication_point_case(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let Some(o) = ctx.identity_overlap(rng) else {
        return TrialResult::PremiseUnmet;
    };
    let op = opair(o.clone());
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::relation(rng, n);
    let beta = ctx.beta(rng);
    let y = gen::index(rng, n);
    let alpha = gen::unit(rng);
    // A = I_O(y_1, alpha_X): alpha at y, 1 elsewhere.
    let a = FuzzySet::new(
        (0..n)
            .map(|z| op.implication(if z == y { 1.0 } else { 0.0 }, alpha))
            .collect(),
    )
    .expect("values in range");
    let gv = gvec(&r, &op, &a, beta);
    let boundary = (n - 1) as f64 / n as f64;
    let mut c = Checks::new(
        ctx.tolerance(),
        format!("n={n} beta={beta:.6} alpha={alpha:.6} y={y} O={o}"),
    );
    if beta <= boundary {
        c.set_eq(&gv, &FuzzySet::full(n), "g_A = X when beta <= (n-1)/n");
    } else {
        for x in 0..n {
            c.eq(
                gv.value(x),
                op.implication(r.at(x, y), alpha),
                "g_A(x) = I_O(R(x,y), alpha)",
            );
        }
    }
    ok(c)
}

fn lemma_4_2_point_case(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let Some(g) = ctx.identity_grouping(rng) else {
        return TrialResult::PremiseUnmet;
    };
    let Some(neg) = ctx.involutive_negation() else {
        return TrialResult::PremiseUnmet;
    };
    let gp = gpair(g.clone());
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::relation(rng, n);
    let rn = r.complement(neg);
    let beta = ctx.beta(rng);
    let y = gen::index(rng, n);
    let alpha = gen::unit(rng);
    let a = FuzzySet::point(n, y, alpha).expect("point in range");
    let hv = hvec(&r, &gp, neg, &a, beta);
    let boundary = (n - 1) as f64 / n as f64;
    let mut c = Checks::new(
        ctx.tolerance(),
        format!("n={n} beta={beta:.6} alpha={alpha:.6} y={y} G={g}"),
    );
    if beta <= boundary {
        c.set_eq(&hv, &FuzzySet::empty(n), "h_A = empty when beta <= (n-1)/n");
    } else {
        for x in 0..n {
            c.eq(
                hv.value(x),
                gp.coimplication(rn.at(x, y), alpha),
                "h_A(x) = I^G(R^N(x,y), alpha)",
            );
        }
    }
    ok(c)
}

// ---------------------------------------------------------------------------
// Lemma 4.3 — constant shifts under the exchange principle
// ---------------------------------------------------------------------------

fn lemma_4_3_residual_shift(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let (Some(o), Some(g)) = (ctx.assoc_overlap(rng), ctx.assoc_grouping(rng)) else {
        return TrialResult::PremiseUnmet;
    };
    let Some(neg) = ctx.involutive_negation() else {
        return TrialResult::PremiseUnmet;
    };
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::relation(rng, n);
    let a = gen::fuzzy_set(rng, n);
    let beta = ctx.beta(rng);
    let mut c = Checks::new(ctx.tolerance(), format!("n={n} beta={beta:.6} O={o} G={g}"));
    for alpha in gen::alphas(rng) {
        c.set_eq(
            &gvec(&r, &op, &io_const(&op, alpha, &a), beta),
            &io_const(&op, alpha, &gvec(&r, &op, &a, beta)),
            "g over I_O(alpha_X, A) = I_O(alpha_X, g_A)",
        );
        c.set_eq(
            &hvec(&r, &gp, neg, &ig_const(&gp, alpha, &a), beta),
            &ig_const(&gp, alpha, &hvec(&r, &gp, neg, &a, beta)),
            "h over I^G(alpha_X, A) = I^G(alpha_X, h_A)",
        );
    }
    ok(c)
}

fn lemma_4_3_scale_bounds(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let (Some(o), Some(g)) = (ctx.assoc_overlap(rng), ctx.assoc_grouping(rng)) else {
        return TrialResult::PremiseUnmet;
    };
    let Some(neg) = ctx.involutive_negation() else {
        return TrialResult::PremiseUnmet;
    };
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::relation(rng, n);
    let a = gen::fuzzy_set(rng, n);
    let beta = ctx.beta(rng);
    let mut c = Checks::new(ctx.tolerance(), format!("n={n} beta={beta:.6} O={o} G={g}"));
    for alpha in gen::alphas(rng) {
        c.set_le(
            &o_const(&o, alpha, &gvec(&r, &op, &a, beta)),
            &gvec(&r, &op, &o_const(&o, alpha, &a), beta),
            "O(alpha_X, g_A) <= g over O(alpha_X, A)",
        );
        c.set_le(
            &hvec(&r, &gp, neg, &g_const(&g, alpha, &a), beta),
            &g_const(&g, alpha, &hvec(&r, &gp, neg, &a, beta)),
            "h over G(alpha_X, A) <= G(alpha_X, h_A)",
        );
    }
    ok(c)
}

// ---------------------------------------------------------------------------
// Lemma 4.4 — subrelations reverse the approximations
// ---------------------------------------------------------------------------

fn lemma_4_4_subrelation(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let Some((o, g)) = ctx.assoc_dual_pair(rng) else {
        return TrialResult::PremiseUnmet;
    };
    let neg = ctx.negation();
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let n = gen::size(rng, ctx.max_universe());
    let (s, r) = gen::subpreorder_pair(rng, n, &o);
    let a = gen::fuzzy_set(rng, n);
    let beta = ctx.beta(rng);
    let mut c = Checks::new(ctx.tolerance(), format!("n={n} beta={beta:.6} O={o} G={g}"));
    c.set_le(
        &lower(&r, &op, &a, beta),
        &lower(&s, &op, &a, beta),
        "lower_R(A) <= lower_S(A) for S <= R",
    );
    c.set_le(
        &upper(&s, &gp, neg, &a, beta),
        &upper(&r, &gp, neg, &a, beta),
        "upper_S(A) <= upper_R(A) for S <= R",
    );
    ok(c)
}

// ---------------------------------------------------------------------------
// Proposition 3.1 — witness condition of the selection form
// ---------------------------------------------------------------------------

fn prop_3_1_witness_condition(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let o = ctx.any_overlap(rng);
    let op = opair(o.clone());
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::relation(rng, n);
    let a = gen::fuzzy_set(rng, n);
    let beta = ctx.beta(rng);
    let k = Precision::new(beta, n).expect("beta validated").k;
    let side = lower_approx(&r, &op, &a, beta).expect("well formed");
    let mut c = Checks::new(ctx.tolerance(), format!("n={n} beta={beta:.6} O={o}"));
    for x in 0..n {
        let count = lower_witness_count(&r, &o, &a, x, side.levels.value(x));
        c.require(count >= k, "witness set {y : granule <= A} has >= k members");
        c.require(side.witnesses[x].len() == k, "recorded witness set has k members");
        for &y in &side.witnesses[x] {
            c.le(
                o.eval(r.at(x, y), side.levels.value(x)),
                a.value(y) + SLACK,
                "recorded witness satisfies granule containment",
            );
        }
    }
    ok(c)
}

// ---------------------------------------------------------------------------
// Proposition 3.3 — duality
// ---------------------------------------------------------------------------

fn prop_3_3_duality(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let Some((o, g)) = ctx.dual_pair(rng) else {
        return TrialResult::PremiseUnmet;
    };
    let neg = ctx.negation();
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::relation(rng, n);
    let a = gen::fuzzy_set(rng, n);
    let an = a.complement(neg);
    let beta = ctx.beta(rng);
    let mut c = Checks::new(ctx.tolerance(), format!("n={n} beta={beta:.6} O={o} G={g}"));
    c.set_eq(
        &gvec(&r, &op, &a, beta).complement(neg),
        &hvec(&r, &gp, neg, &an, beta),
        "N(g_A) = h_{A^N}",
    );
    c.set_eq(
        &hvec(&r, &gp, neg, &a, beta).complement(neg),
        &gvec(&r, &op, &an, beta),
        "N(h_A) = g_{A^N}",
    );
    c.set_eq(
        &lower(&r, &op, &a, beta).complement(neg),
        &upper(&r, &gp, neg, &an, beta),
        "N(lower(A)) = upper(A^N)",
    );
    c.set_eq(
        &upper(&r, &gp, neg, &a, beta).complement(neg),
        &lower(&r, &op, &an, beta),
        "N(upper(A)) = lower(A^N)",
    );
    ok(c)
}

// ---------------------------------------------------------------------------
// Propositions 3.4 / 3.5 — crisp degenerations
// ---------------------------------------------------------------------------

fn prop_3_4_crisp_counting(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let Some(neg) = ctx.involutive_negation() else {
        return TrialResult::PremiseUnmet;
    };
    let o = ctx.any_overlap(rng);
    let g = ctx.any_grouping(rng);
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::crisp_relation(rng, n);
    let a = gen::crisp_set(rng, n);
    let beta = ctx.beta(rng);
    let mut c = Checks::new(
        ctx.tolerance(),
        format!("n={n} beta={beta:.6} O={o} G={g} crisp"),
    );
    c.set_eq(
        &crisp_lower(&r, &a, beta).expect("crisp inputs"),
        &lower(&r, &op, &a, beta),
        "counting lower = granular lower",
    );
    c.set_eq(
        &crisp_upper(&r, &a, beta).expect("crisp inputs"),
        &upper(&r, &gp, neg, &a, beta),
        "counting upper = granular upper",
    );
    ok(c)
}

fn prop_3_5_instance(
    ctx: &Ctx<'_>,
    rng: &mut ChaCha8Rng,
    reflexive: bool,
    transitive: bool,
) -> Option<(FuzzyRelation, FuzzySet, f64, usize, Checks)> {
    let n = gen::size(rng, ctx.max_universe());
    let mut r = gen::crisp_relation(rng, n);
    if reflexive {
        r = gen::reflexive(&r);
    }
    if transitive {
        // min-transitive closure of a crisp relation stays crisp
        r = o_transitive_closure(&r, &Overlap::Minimum);
    }
    let a = gen::crisp_set(rng, n);
    let beta = ctx.beta(rng);
    let k = Precision::new(beta, n).expect("beta validated").k;
    let c = Checks::new(
        ctx.tolerance(),
        format!("n={n} beta={beta:.6} reflexive={reflexive} transitive={transitive}"),
    );
    Some((r, a, beta, k, c))
}

fn prop_3_5_crisp_reflexive(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let Some(neg) = ctx.involutive_negation() else {
        return TrialResult::PremiseUnmet;
    };
    let o = ctx.any_overlap(rng);
    let g = ctx.any_grouping(rng);
    let (op, gp) = (opair(o), gpair(g));
    let Some((r, a, beta, k, mut c)) = prop_3_5_instance(ctx, rng, true, false) else {
        return TrialResult::PremiseUnmet;
    };
    c.set_le(
        &counting_lower_set(&r, &a, k),
        &lower(&r, &op, &a, beta),
        "{x : |[x]_R and A^c| <= (1-beta)|X|} <= lower",
    );
    c.set_le(
        &upper(&r, &gp, neg, &a, beta),
        &counting_upper_set(&r, &a, k),
        "upper <= {x : |[x]_R and A| > (1-beta)|X|}",
    );
    ok(c)
}

fn prop_3_5_crisp_transitive(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let Some(neg) = ctx.involutive_negation() else {
        return TrialResult::PremiseUnmet;
    };
    let o = ctx.any_overlap(rng);
    let g = ctx.any_grouping(rng);
    let (op, gp) = (opair(o), gpair(g));
    let Some((r, a, beta, k, mut c)) = prop_3_5_instance(ctx, rng, false, true) else {
        return TrialResult::PremiseUnmet;
    };
    c.set_le(
        &lower(&r, &op, &a, beta),
        &counting_lower_set(&r, &a, k),
        "lower <= {x : |[x]_R and A^c| <= (1-beta)|X|}",
    );
    c.set_le(
        &counting_upper_set(&r, &a, k),
        &upper(&r, &gp, neg, &a, beta),
        "{x : |[x]_R and A| > (1-beta)|X|} <= upper",
    );
    ok(c)
}

fn prop_3_5_crisp_preorder(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let Some(neg) = ctx.involutive_negation() else {
        return TrialResult::PremiseUnmet;
    };
    let o = ctx.any_overlap(rng);
    let g = ctx.any_grouping(rng);
    let (op, gp) = (opair(o), gpair(g));
    let Some((r, a, beta, k, mut c)) = prop_3_5_instance(ctx, rng, true, true) else {
        return TrialResult::PremiseUnmet;
    };
    c.set_eq(
        &lower(&r, &op, &a, beta),
        &counting_lower_set(&r, &a, k),
        "lower = {x : |[x]_R and A^c| <= (1-beta)|X|}",
    );
    c.set_eq(
        &upper(&r, &gp, neg, &a, beta),
        &counting_upper_set(&r, &a, k),
        "upper = {x : |[x]_R and A| > (1-beta)|X|}",
    );
    ok(c)
}

// ---------------------------------------------------------------------------
// Proposition 4.1 — monotonicity and the 2β−1 shift
// ---------------------------------------------------------------------------

fn prop_4_1_monotone(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let Some(neg) = ctx.involutive_negation() else {
        return TrialResult::PremiseUnmet;
    };
    let o = ctx.any_overlap(rng);
    let g = ctx.any_grouping(rng);
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::relation(rng, n);
    let a = gen::fuzzy_set(rng, n);
    let b = gen::superset_of(rng, &a);
    let beta = ctx.beta(rng);
    let mut c = Checks::new(ctx.tolerance(), format!("n={n} beta={beta:.6} O={o} G={g}"));
    c.set_le(
        &lower(&r, &op, &a, beta),
        &lower(&r, &op, &b, beta),
        "A <= B implies lower(A) <= lower(B)",
    );
    c.set_le(
        &upper(&r, &gp, neg, &a, beta),
        &upper(&r, &gp, neg, &b, beta),
        "A <= B implies upper(A) <= upper(B)",
    );
    ok(c)
}

fn prop_4_1_union_shift(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let Some(neg) = ctx.involutive_negation() else {
        return TrialResult::PremiseUnmet;
    };
    let Some(beta) = ctx.beta_above_half(rng) else {
        return TrialResult::PremiseUnmet;
    };
    let o = ctx.any_overlap(rng);
    let g = ctx.any_grouping(rng);
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::relation(rng, n);
    let a = gen::fuzzy_set(rng, n);
    let b = gen::fuzzy_set(rng, n);
    let shifted = 2.0 * beta - 1.0;
    let mut c = Checks::new(ctx.tolerance(), format!("n={n} beta={beta:.6} O={o} G={g}"));
    c.set_le(
        &lower(&r, &op, &a, beta).union(&lower(&r, &op, &b, beta)),
        &lower(&r, &op, &a.union(&b), shifted),
        "lower(A) or lower(B) <= lower_{2b-1}(A or B)",
    );
    c.set_le(
        &upper(&r, &gp, neg, &a.intersection(&b), shifted),
        &upper(&r, &gp, neg, &a, beta).intersection(&upper(&r, &gp, neg, &b, beta)),
        "upper_{2b-1}(A and B) <= upper(A) and upper(B)",
    );
    ok(c)
}

// ---------------------------------------------------------------------------
// Proposition 4.2 — constants, ratios, points
// ---------------------------------------------------------------------------

fn prop_4_2_constant_bounds(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let (Some(o), Some(g)) = (ctx.identity_overlap(rng), ctx.identity_grouping(rng)) else {
        return TrialResult::PremiseUnmet;
    };
    let Some(neg) = ctx.involutive_negation() else {
        return TrialResult::PremiseUnmet;
    };
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::relation(rng, n);
    let rn = r.complement(neg);
    let beta = ctx.beta(rng);
    let mut c = Checks::new(ctx.tolerance(), format!("n={n} beta={beta:.6} O={o} G={g}"));
    for alpha in gen::alphas(rng) {
        let am = FuzzySet::constant(n, alpha).expect("alpha in range");
        let lo = lower(&r, &op, &am, beta);
        let up = upper(&r, &gp, neg, &am, beta);
        for z in 0..n {
            let col_max = (0..n).fold(0.0f64, |acc, x| acc.max(r.at(x, z)));
            let col_min = (0..n).fold(1.0f64, |acc, x| acc.min(rn.at(x, z)));
            c.le(
                o.eval(alpha, col_max),
                lo.value(z),
                "O(alpha, sup_x R(x,z)) <= lower(alpha_X)(z)",
            );
            c.le(
                up.value(z),
                g.eval(alpha, col_min),
                "upper(alpha_X)(z) <= G(alpha, inf_x R^N(x,z))",
            );
        }
    }
    ok(c)
}

fn prop_4_2_crisp_ratio(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let (Some(o), Some(g)) = (ctx.identity_overlap(rng), ctx.identity_grouping(rng)) else {
        return TrialResult::PremiseUnmet;
    };
    let Some(neg) = ctx.involutive_negation() else {
        return TrialResult::PremiseUnmet;
    };
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::relation(rng, n);
    let rn = r.complement(neg);
    let y = gen::nonempty_crisp_set(rng, n);
    let beta = y.crisp_cardinality() as f64 / n as f64;
    let mut c = Checks::new(ctx.tolerance(), format!("n={n} |Y|={} O={o} G={g}", y.crisp_cardinality()));
    let lo = lower(&r, &op, &y, beta);
    let up = upper(&r, &gp, neg, &y.complement(neg), beta);
    for z in 0..n {
        let col_max = (0..n).fold(0.0f64, |acc, x| acc.max(r.at(x, z)));
        let col_min = (0..n).fold(1.0f64, |acc, x| acc.min(rn.at(x, z)));
        c.le(col_max, lo.value(z), "sup_x R(x,z) <= lower(Y)(z)");
        c.le(up.value(z), col_min, "upper(Y^c)(z) <= inf_x R^N(x,z)");
    }
    ok(c)
}

fn prop_4_2_implication_point_formula(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let Some(o) = ctx.identity_overlap(rng) else {
        return TrialResult::PremiseUnmet;
    };
    let op = opair(o.clone());
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::relation(rng, n);
    let beta = ctx.beta(rng);
    let y = gen::index(rng, n);
    let alpha = gen::unit(rng);
    let a = FuzzySet::new(
        (0..n)
            .map(|z| op.implication(if z == y { 1.0 } else { 0.0 }, alpha))
            .collect(),
    )
    .expect("values in range");
    let lo = lower(&r, &op, &a, beta);
    let boundary = (n - 1) as f64 / n as f64;
    let mut c = Checks::new(
        ctx.tolerance(),
        format!("n={n} beta={beta:.6} alpha={alpha:.6} y={y} O={o}"),
    );
    for z in 0..n {
        let expected = if beta <= boundary {
            (0..n).fold(0.0f64, |acc, x| acc.max(r.at(x, z)))
        } else {
            (0..n).fold(0.0f64, |acc, x| {
                acc.max(o.eval(r.at(x, z), op.implication(r.at(x, y), alpha)))
            })
        };
        c.eq(lo.value(z), expected, "lower of I_O(y_1, alpha_X) case formula");
    }
    ok(c)
}

fn prop_4_2_point_formula(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let Some(g) = ctx.identity_grouping(rng) else {
        return TrialResult::PremiseUnmet;
    };
    let Some(neg) = ctx.involutive_negation() else {
        return TrialResult::PremiseUnmet;
    };
    let gp = gpair(g.clone());
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::relation(rng, n);
    let rn = r.complement(neg);
    let beta = ctx.beta(rng);
    let y = gen::index(rng, n);
    let alpha = gen::unit(rng);
    let a = FuzzySet::point(n, y, alpha).expect("point in range");
    let up = upper(&r, &gp, neg, &a, beta);
    let boundary = (n - 1) as f64 / n as f64;
    let mut c = Checks::new(
        ctx.tolerance(),
        format!("n={n} beta={beta:.6} alpha={alpha:.6} y={y} G={g}"),
    );
    for z in 0..n {
        let expected = if beta <= boundary {
            (0..n).fold(1.0f64, |acc, x| acc.min(rn.at(x, z)))
        } else {
            (0..n).fold(1.0f64, |acc, x| {
                acc.min(g.eval(rn.at(x, z), gp.coimplication(rn.at(x, y), alpha)))
            })
        };
        c.eq(up.value(z), expected, "upper of y_alpha case formula");
    }
    ok(c)
}

// ---------------------------------------------------------------------------
// Proposition 4.3 — constant shifts through the operators
// ---------------------------------------------------------------------------

fn prop_4_3_residual_containment(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let (Some(o), Some(g)) = (ctx.assoc_overlap(rng), ctx.assoc_grouping(rng)) else {
        return TrialResult::PremiseUnmet;
    };
    let Some(neg) = ctx.involutive_negation() else {
        return TrialResult::PremiseUnmet;
    };
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::relation(rng, n);
    let a = gen::fuzzy_set(rng, n);
    let beta = ctx.beta(rng);
    let alphas = gen::alphas(rng);
    let mut c = Checks::new(ctx.tolerance(), format!("n={n} beta={beta:.6} O={o} G={g}"));
    for alpha in alphas {
        c.set_le(
            &lower(&r, &op, &io_const(&op, alpha, &a), beta),
            &io_const(&op, alpha, &lower(&r, &op, &a, beta)),
            "lower(I_O(alpha_X, A)) <= I_O(alpha_X, lower(A))",
        );
        c.set_le(
            &ig_const(&gp, alpha, &upper(&r, &gp, neg, &a, beta)),
            &upper(&r, &gp, neg, &ig_const(&gp, alpha, &a), beta),
            "I^G(alpha_X, upper(A)) <= upper(I^G(alpha_X, A))",
        );
    }
    // The "especially" clauses.
    let empty = FuzzySet::empty(n);
    let full = FuzzySet::full(n);
    let tol = ctx.tolerance();
    let lower_fix_all = alphas.iter().all(|&alpha| {
        let shifted = io_const(&op, alpha, &empty);
        lower(&r, &op, &shifted, beta).max_abs_diff(&shifted) <= tol
    });
    if lower_fix_all {
        c.set_eq(
            &lower(&r, &op, &empty, beta),
            &empty,
            "fixed I_O-shifts imply lower(empty) = empty",
        );
    }
    let upper_fix_all = alphas.iter().all(|&alpha| {
        let shifted = ig_const(&gp, alpha, &full);
        upper(&r, &gp, neg, &shifted, beta).max_abs_diff(&shifted) <= tol
    });
    if upper_fix_all {
        c.set_eq(
            &upper(&r, &gp, neg, &full, beta),
            &full,
            "fixed I^G-shifts imply upper(X) = X",
        );
    }
    ok(c)
}

fn prop_4_3_scale_containment(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let (Some(o), Some(g)) = (ctx.assoc_overlap(rng), ctx.assoc_grouping(rng)) else {
        return TrialResult::PremiseUnmet;
    };
    let Some(neg) = ctx.involutive_negation() else {
        return TrialResult::PremiseUnmet;
    };
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::relation(rng, n);
    let a = gen::fuzzy_set(rng, n);
    let beta = ctx.beta(rng);
    let mut c = Checks::new(ctx.tolerance(), format!("n={n} beta={beta:.6} O={o} G={g}"));
    for alpha in gen::alphas(rng) {
        c.set_le(
            &o_const(&o, alpha, &lower(&r, &op, &a, beta)),
            &lower(&r, &op, &o_const(&o, alpha, &a), beta),
            "O(alpha_X, lower(A)) <= lower(O(alpha_X, A))",
        );
        c.set_le(
            &upper(&r, &gp, neg, &g_const(&g, alpha, &a), beta),
            &g_const(&g, alpha, &upper(&r, &gp, neg, &a, beta)),
            "upper(G(alpha_X, A)) <= G(alpha_X, upper(A))",
        );
    }
    ok(c)
}

// ---------------------------------------------------------------------------
// Proposition 4.4 — nine-way seriality equivalence
// ---------------------------------------------------------------------------

fn prop_4_4_serial_equivalences(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let (Some(o), Some(g)) = (ctx.identity_overlap(rng), ctx.identity_grouping(rng)) else {
        return TrialResult::PremiseUnmet;
    };
    let Some(neg) = ctx.involutive_negation() else {
        return TrialResult::PremiseUnmet;
    };
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let n = gen::size(rng, ctx.max_universe());
    // Bias half the instances toward column-seriality so both truth values
    // of the equivalence class occur.
    let raw = gen::relation(rng, n);
    let r = if gen::index(rng, 2) == 0 {
        FuzzyRelation::from_fn(n, |x, y| {
            if x == (y * 7 + 3) % n {
                1.0
            } else {
                raw.at(x, y)
            }
        })
    } else {
        raw
    };
    let beta = ctx.beta(rng);
    let tol = ctx.tolerance();
    let mut c = Checks::new(tol, format!("n={n} beta={beta:.6} O={o} G={g}"));

    let full = FuzzySet::full(n);
    let empty = FuzzySet::empty(n);
    let serial_inverse = (0..n).all(|z| (0..n).fold(0.0f64, |m, x| m.max(r.at(x, z))) >= 1.0 - tol);
    let s2 = lower(&r, &op, &full, beta).max_abs_diff(&full) <= tol;
    let s3 = upper(&r, &gp, neg, &empty, beta).max_abs_diff(&empty) <= tol;
    let alphas = gen::alphas(rng);
    let s4 = alphas.iter().all(|&alpha| {
        let am = FuzzySet::constant(n, alpha).expect("alpha in range");
        am.subset_of(&lower(&r, &op, &am, beta), tol)
    });
    let s5 = alphas.iter().all(|&alpha| {
        let am = FuzzySet::constant(n, alpha).expect("alpha in range");
        upper(&r, &gp, neg, &am, beta).subset_of(&am, tol)
    });
    let mut s6 = true;
    let mut s7 = true;
    for _ in 0..3 {
        let yset = gen::nonempty_crisp_set(rng, n);
        let ratio = yset.crisp_cardinality() as f64 / n as f64;
        s6 &= lower(&r, &op, &yset, ratio).max_abs_diff(&full) <= tol;
        s7 &= upper(&r, &gp, neg, &yset.complement(neg), ratio).max_abs_diff(&empty) <= tol;
    }
    // Statements gated on beta <= (n-1)/n are evaluated at the nearest
    // admissible precision.
    let beta_cap = beta.min((n - 1) as f64 / n as f64);
    let mut s8 = true;
    let mut s9 = true;
    for y in 0..n {
        for &alpha in &alphas {
            let a = FuzzySet::new(
                (0..n)
                    .map(|z| op.implication(if z == y { 1.0 } else { 0.0 }, alpha))
                    .collect(),
            )
            .expect("values in range");
            s8 &= lower(&r, &op, &a, beta_cap).max_abs_diff(&full) <= tol;
            let pt = FuzzySet::point(n, y, alpha).expect("point in range");
            s9 &= upper(&r, &gp, neg, &pt, beta_cap).max_abs_diff(&empty) <= tol;
        }
    }

    for (label, s) in [
        ("X = lower(X)", s2),
        ("empty = upper(empty)", s3),
        ("alpha_X <= lower(alpha_X)", s4),
        ("upper(alpha_X) <= alpha_X", s5),
        ("lower(Y) = X at beta = |Y|/|X|", s6),
        ("upper(Y^c) = empty at beta = |Y|/|X|", s7),
        ("lower(I_O(y_1, alpha_X)) = X", s8),
        ("upper(y_alpha) = empty", s9),
    ] {
        c.agree(serial_inverse, s, label);
    }
    ok(c)
}

// ---------------------------------------------------------------------------
// Propositions 4.5 / 4.6 — reflexive and symmetric relations
// ---------------------------------------------------------------------------

fn prop_4_5_reflexive_g_below_lower(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, trial: u32) -> TrialResult {
    let Some(neg) = ctx.involutive_negation() else {
        return TrialResult::PremiseUnmet;
    };
    // Trial 0 replays the crisp similarity fixture with the harmonic
    // overlap, where the gap between g and the lower approximation is
    // strict.
    if trial == 0 && ctx.cfg_defaults() {
        let r = crisp_similarity_fixture();
        let a = set(&[0.2, 0.0, 0.5]);
        let op = opair(Overlap::Harmonic);
        let gp = gpair(Grouping::dual_of(Overlap::Harmonic, neg).expect("involutive"));
        let mut c = Checks::new(ctx.tolerance(), String::from("crisp similarity fixture"));
        let gv = gvec(&r, &op, &a, 0.5);
        let lo = lower(&r, &op, &a, 0.5);
        c.set_eq(&gv, &set(&[1.0 / 3.0, 1.0, 1.0 / 3.0]), "g_A fixture");
        c.set_eq(&lo, &set(&[0.5, 1.0, 0.5]), "lower fixture");
        c.set_le(&gv, &lo, "g_A <= lower(A)");
        c.require(lo.value(0) > gv.value(0) + 1e-9, "gap is strict at x1");
        c.set_le(&upper(&r, &gp, neg, &a, 0.5), &hvec(&r, &gp, neg, &a, 0.5), "upper <= h_A");
        return ok(c);
    }
    // The containments need the unit/zero rows to dominate the identity
    // map (automatic for unital connectives, true for the harmonic pair,
    // false for the power families).
    let o = ctx.any_overlap(rng);
    let g = ctx.any_grouping(rng);
    if !unit_row_above_identity(&o) || !zero_row_below_identity(&g) {
        return TrialResult::PremiseUnmet;
    }
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::reflexive(&gen::relation(rng, n));
    let a = gen::fuzzy_set(rng, n);
    let beta = ctx.beta(rng);
    let mut c = Checks::new(ctx.tolerance(), format!("n={n} beta={beta:.6} O={o} G={g}"));
    c.set_le(&gvec(&r, &op, &a, beta), &lower(&r, &op, &a, beta), "g_A <= lower(A)");
    c.set_le(&upper(&r, &gp, neg, &a, beta), &hvec(&r, &gp, neg, &a, beta), "upper(A) <= h_A");
    ok(c)
}

fn prop_4_5_reflexive_boundaries(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let Some(neg) = ctx.involutive_negation() else {
        return TrialResult::PremiseUnmet;
    };
    let o = ctx.any_overlap(rng);
    let g = ctx.any_grouping(rng);
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::reflexive(&gen::relation(rng, n));
    let beta = ctx.beta(rng);
    let full = FuzzySet::full(n);
    let empty = FuzzySet::empty(n);
    let mut c = Checks::new(ctx.tolerance(), format!("n={n} beta={beta:.6} O={o} G={g}"));
    c.set_eq(&lower(&r, &op, &full, beta), &full, "lower(X) = X");
    c.set_eq(&upper(&r, &gp, neg, &empty, beta), &empty, "upper(empty) = empty");
    for alpha in gen::alphas(rng) {
        let am = FuzzySet::constant(n, alpha).expect("alpha in range");
        c.set_le(&am, &lower(&r, &op, &am, beta), "alpha_X <= lower(alpha_X)");
        c.set_le(&upper(&r, &gp, neg, &am, beta), &am, "upper(alpha_X) <= alpha_X");
    }
    let yset = gen::nonempty_crisp_set(rng, n);
    let ratio = yset.crisp_cardinality() as f64 / n as f64;
    c.set_eq(&lower(&r, &op, &yset, ratio), &full, "lower(Y) = X at beta = |Y|/|X|");
    c.set_eq(
        &upper(&r, &gp, neg, &yset.complement(neg), ratio),
        &empty,
        "upper(Y^c) = empty at beta = |Y|/|X|",
    );
    let beta_cap = beta.min((n - 1) as f64 / n as f64);
    let y = gen::index(rng, n);
    let alpha = gen::unit(rng);
    let a = FuzzySet::new(
        (0..n)
            .map(|z| op.implication(if z == y { 1.0 } else { 0.0 }, alpha))
            .collect(),
    )
    .expect("values in range");
    c.set_eq(&lower(&r, &op, &a, beta_cap), &full, "lower(I_O(y_1, alpha_X)) = X");
    let pt = FuzzySet::point(n, y, alpha).expect("point in range");
    c.set_eq(&upper(&r, &gp, neg, &pt, beta_cap), &empty, "upper(y_alpha) = empty");
    ok(c)
}

fn prop_4_6_symmetric_inverse(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let Some(neg) = ctx.involutive_negation() else {
        return TrialResult::PremiseUnmet;
    };
    let o = ctx.any_overlap(rng);
    let g = ctx.any_grouping(rng);
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::symmetrized(&gen::relation(rng, n));
    let ri = r.inverse();
    let a = gen::fuzzy_set(rng, n);
    let beta = ctx.beta(rng);
    let mut c = Checks::new(ctx.tolerance(), format!("n={n} beta={beta:.6} O={o} G={g}"));
    c.set_eq(
        &lower(&r, &op, &a, beta),
        &lower(&ri, &op, &a, beta),
        "lower_R = lower_{R^-1}",
    );
    c.set_eq(
        &upper(&r, &gp, neg, &a, beta),
        &upper(&ri, &gp, neg, &a, beta),
        "upper_R = upper_{R^-1}",
    );
    ok(c)
}

// ---------------------------------------------------------------------------
// Propositions 4.7 / 4.8 / 4.9 — O-transitive and O-preorder relations
// ---------------------------------------------------------------------------

fn prop_4_7_transitive_lower_below_g(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let Some(o) = ctx.assoc_overlap(rng) else {
        return TrialResult::PremiseUnmet;
    };
    let op = opair(o.clone());
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::o_transitive(rng, n, &o);
    let a = gen::fuzzy_set(rng, n);
    let beta = ctx.beta(rng);
    let alpha = (0..n).fold(1.0f64, |m, x| m.min(r.at(x, x)));
    let mut c = Checks::new(ctx.tolerance(), format!("n={n} beta={beta:.6} O={o}"));
    let lo = lower(&r, &op, &a, beta);
    c.set_le(&lo, &gvec(&r, &op, &a, beta), "lower(A) <= g_A");
    c.set_le(
        &o_const(&o, alpha, &lo),
        &lower(&r, &op, &lo, beta),
        "O(alpha_X, lower(A)) <= lower(lower(A))",
    );
    ok(c)
}

fn prop_4_7_transitive_upper(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let Some((o, g)) = ctx.assoc_dual_pair(rng) else {
        return TrialResult::PremiseUnmet;
    };
    let neg = ctx.negation();
    let gp = gpair(g.clone());
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::o_transitive(rng, n, &o);
    let a = gen::fuzzy_set(rng, n);
    let beta = ctx.beta(rng);
    let alpha = (0..n).fold(1.0f64, |m, x| m.min(r.at(x, x)));
    let mut c = Checks::new(ctx.tolerance(), format!("n={n} beta={beta:.6} O={o} G={g}"));
    let up = upper(&r, &gp, neg, &a, beta);
    c.set_le(&hvec(&r, &gp, neg, &a, beta), &up, "h_A <= upper(A)");
    c.set_le(
        &upper(&r, &gp, neg, &up, beta),
        &g_const(&g, neg.eval(alpha), &up),
        "upper(upper(A)) <= G(N(alpha)_X, upper(A))",
    );
    ok(c)
}

fn prop_4_8_preorder_lower_equals_g(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let Some(o) = ctx.assoc_overlap(rng) else {
        return TrialResult::PremiseUnmet;
    };
    let op = opair(o.clone());
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::o_preorder(rng, n, &o);
    let a = gen::fuzzy_set(rng, n);
    let beta = ctx.beta(rng);
    let mut c = Checks::new(ctx.tolerance(), format!("n={n} beta={beta:.6} O={o}"));
    let lo = lower(&r, &op, &a, beta);
    c.set_eq(&lo, &gvec(&r, &op, &a, beta), "lower(A) = g_A");
    c.set_le(&lo, &lower(&r, &op, &lo, beta), "lower(A) <= lower(lower(A))");
    ok(c)
}

fn prop_4_8_preorder_upper_equals_h(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let Some((o, g)) = ctx.assoc_dual_pair(rng) else {
        return TrialResult::PremiseUnmet;
    };
    let neg = ctx.negation();
    let gp = gpair(g.clone());
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::o_preorder(rng, n, &o);
    let a = gen::fuzzy_set(rng, n);
    let beta = ctx.beta(rng);
    let mut c = Checks::new(ctx.tolerance(), format!("n={n} beta={beta:.6} O={o} G={g}"));
    let up = upper(&r, &gp, neg, &a, beta);
    c.set_eq(&up, &hvec(&r, &gp, neg, &a, beta), "upper(A) = h_A");
    c.set_le(&upper(&r, &gp, neg, &up, beta), &up, "upper(upper(A)) <= upper(A)");
    ok(c)
}

fn prop_4_9_preorder_residual_equality(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let Some((o, g)) = ctx.assoc_dual_pair(rng) else {
        return TrialResult::PremiseUnmet;
    };
    let neg = ctx.negation();
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::o_preorder(rng, n, &o);
    let a = gen::fuzzy_set(rng, n);
    let beta = ctx.beta(rng);
    let mut c = Checks::new(ctx.tolerance(), format!("n={n} beta={beta:.6} O={o} G={g}"));
    for alpha in gen::alphas(rng) {
        c.set_eq(
            &lower(&r, &op, &io_const(&op, alpha, &a), beta),
            &io_const(&op, alpha, &lower(&r, &op, &a, beta)),
            "lower(I_O(alpha_X, A)) = I_O(alpha_X, lower(A))",
        );
        c.set_eq(
            &upper(&r, &gp, neg, &ig_const(&gp, alpha, &a), beta),
            &ig_const(&gp, alpha, &upper(&r, &gp, neg, &a, beta)),
            "upper(I^G(alpha_X, A)) = I^G(alpha_X, upper(A))",
        );
    }
    ok(c)
}

fn prop_4_9_boundary_iff(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let Some((o, g)) = ctx.assoc_dual_pair(rng) else {
        return TrialResult::PremiseUnmet;
    };
    let neg = ctx.negation();
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::o_preorder(rng, n, &o);
    let beta = ctx.beta(rng);
    let tol = ctx.tolerance();
    let empty = FuzzySet::empty(n);
    let full = FuzzySet::full(n);
    let alphas = gen::alphas(rng);
    let mut c = Checks::new(tol, format!("n={n} beta={beta:.6} O={o} G={g}"));
    let lower_empty_fixed = lower(&r, &op, &empty, beta).max_abs_diff(&empty) <= tol;
    let lower_shift_fixed = alphas.iter().all(|&alpha| {
        let shifted = io_const(&op, alpha, &empty);
        lower(&r, &op, &shifted, beta).max_abs_diff(&shifted) <= tol
    });
    c.agree(
        lower_empty_fixed,
        lower_shift_fixed,
        "lower(empty) = empty iff I_O-shifts of empty are fixed",
    );
    let upper_full_fixed = upper(&r, &gp, neg, &full, beta).max_abs_diff(&full) <= tol;
    let upper_shift_fixed = alphas.iter().all(|&alpha| {
        let shifted = ig_const(&gp, alpha, &full);
        upper(&r, &gp, neg, &shifted, beta).max_abs_diff(&shifted) <= tol
    });
    c.agree(
        upper_full_fixed,
        upper_shift_fixed,
        "upper(X) = X iff I^G-shifts of X are fixed",
    );
    ok(c)
}

fn prop_4_9_beta_shift(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let Some((o, g)) = ctx.assoc_dual_pair(rng) else {
        return TrialResult::PremiseUnmet;
    };
    let Some(beta) = ctx.beta_above_half(rng) else {
        return TrialResult::PremiseUnmet;
    };
    let neg = ctx.negation();
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let n = gen::size(rng, ctx.max_universe());
    let r = gen::o_preorder(rng, n, &o);
    let a = gen::fuzzy_set(rng, n);
    let b = gen::fuzzy_set(rng, n);
    let shifted = 2.0 * beta - 1.0;
    let mut c = Checks::new(ctx.tolerance(), format!("n={n} beta={beta:.6} O={o} G={g}"));
    c.set_le(
        &lower(&r, &op, &a, beta).intersection(&lower(&r, &op, &b, beta)),
        &lower(&r, &op, &a.intersection(&b), shifted),
        "lower(A) and lower(B) <= lower_{2b-1}(A and B)",
    );
    c.set_le(
        &upper(&r, &gp, neg, &a.intersection(&b), shifted),
        &upper(&r, &gp, neg, &a, beta).intersection(&upper(&r, &gp, neg, &b, beta)),
        "upper_{2b-1}(A and B) <= upper(A) and upper(B)",
    );
    c.set_le(
        &lower(&r, &op, &a, beta).union(&lower(&r, &op, &b, beta)),
        &lower(&r, &op, &a.union(&b), shifted),
        "lower(A) or lower(B) <= lower_{2b-1}(A or B)",
    );
    c.set_le(
        &upper(&r, &gp, neg, &a.union(&b), shifted),
        &upper(&r, &gp, neg, &a, beta).union(&upper(&r, &gp, neg, &b, beta)),
        "upper_{2b-1}(A or B) <= upper(A) or upper(B)",
    );
    ok(c)
}

// ---------------------------------------------------------------------------
// Proposition 4.10 — compatibility conditions
// ---------------------------------------------------------------------------

fn prop_4_10_compatible_lower(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let Some(o) = ctx.assoc_overlap(rng) else {
        return TrialResult::PremiseUnmet;
    };
    let op = opair(o.clone());
    let n = gen::size(rng, ctx.max_universe());
    let a = gen::fuzzy_set(rng, n);
    // Cap R so that R(x,y) <= I_O(A(x), A(y)) holds by construction.
    let raw = gen::relation(rng, n);
    let r = FuzzyRelation::from_fn(n, |x, y| {
        raw.at(x, y).min(op.implication(a.value(x), a.value(y)))
    });
    let alpha = (0..n).fold(1.0f64, |m, x| m.min(r.at(x, x)));
    let beta = ctx.beta(rng);
    let mut c = Checks::new(ctx.tolerance(), format!("n={n} beta={beta:.6} O={o}"));
    c.set_le(
        &lower(&r, &op, &o_const(&o, alpha, &a), beta),
        &lower(&r, &op, &lower(&r, &op, &a, beta), beta),
        "lower(O(alpha_X, A)) <= lower(lower(A))",
    );
    ok(c)
}

fn prop_4_10_compatible_upper(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let Some((o, g)) = ctx.assoc_dual_pair(rng) else {
        return TrialResult::PremiseUnmet;
    };
    let neg = ctx.negation();
    let gp = gpair(g.clone());
    let n = gen::size(rng, ctx.max_universe());
    let a = gen::fuzzy_set(rng, n);
    // Cap R so that R^N(x,y) >= I^G(A(x), A(y)) holds by construction.
    let raw = gen::relation(rng, n);
    let r = FuzzyRelation::from_fn(n, |x, y| {
        raw.at(x, y)
            .min(neg.eval(gp.coimplication(a.value(x), a.value(y))))
    });
    let alpha = (0..n).fold(1.0f64, |m, x| m.min(r.at(x, x)));
    let beta = ctx.beta(rng);
    let mut c = Checks::new(ctx.tolerance(), format!("n={n} beta={beta:.6} O={o} G={g}"));
    let up = upper(&r, &gp, neg, &a, beta);
    c.set_le(
        &upper(&r, &gp, neg, &up, beta),
        &upper(&r, &gp, neg, &g_const(&g, neg.eval(alpha), &a), beta),
        "upper(upper(A)) <= upper(G(N(alpha)_X, A))",
    );
    ok(c)
}

// ---------------------------------------------------------------------------
// Propositions 4.11–4.14 — two relations
// ---------------------------------------------------------------------------

/// Common instance for the two-relation laws: an N-dual associative pair
/// and preorders `S ⊆ R` (with `S = R` on half the trials so the
/// hypothesis side of the biconditionals is exercised non-vacuously).
fn two_relation_instance(
    ctx: &Ctx<'_>,
    rng: &mut ChaCha8Rng,
) -> Option<(
    Overlap,
    Grouping,
    OverlapResidual,
    GroupingResidual,
    FuzzyRelation,
    FuzzyRelation,
    usize,
    f64,
)> {
    let (o, g) = ctx.assoc_dual_pair(rng)?;
    let op = opair(o.clone());
    let gp = gpair(g.clone());
    let n = gen::size(rng, ctx.max_universe());
    let (s, r) = if gen::index(rng, 2) == 0 {
        let r = gen::o_preorder(rng, n, &o);
        (r.clone(), r)
    } else {
        gen::subpreorder_pair(rng, n, &o)
    };
    let beta = ctx.beta(rng);
    Some((o, g, op, gp, s, r, n, beta))
}

fn prop_4_11_equal_implies_witness(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let Some((o, g, op, gp, s, r, n, beta)) = two_relation_instance(ctx, rng) else {
        return TrialResult::PremiseUnmet;
    };
    let neg = ctx.negation();
    let a = gen::fuzzy_set(rng, n);
    let k = Precision::new(beta, n).expect("beta validated").k;
    let tol = ctx.tolerance();
    let rn = r.complement(neg);
    let lo_s = lower(&s, &op, &a, beta);
    let lo_r = lower(&r, &op, &a, beta);
    let up_s = upper(&s, &gp, neg, &a, beta);
    let up_r = upper(&r, &gp, neg, &a, beta);
    let mut hit = false;
    let mut c = Checks::new(tol, format!("n={n} beta={beta:.6} O={o} G={g}"));
    for x in 0..n {
        if (lo_s.value(x) - lo_r.value(x)).abs() <= tol {
            hit = true;
            c.require(
                lower_witness_count(&r, &o, &a, x, lo_s.value(x)) >= k,
                "equal lower values imply the R-granule witness condition",
            );
        }
        if (up_s.value(x) - up_r.value(x)).abs() <= tol {
            hit = true;
            c.require(
                upper_witness_count(&rn, &g, &a, x, up_s.value(x)) >= k,
                "equal upper values imply the R-granule witness condition",
            );
        }
    }
    if hit {
        ok(c)
    } else {
        TrialResult::PremiseUnmet
    }
}

fn prop_4_12_witness_implies_equal(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let Some((o, g, op, gp, s, r, n, beta)) = two_relation_instance(ctx, rng) else {
        return TrialResult::PremiseUnmet;
    };
    let neg = ctx.negation();
    let a = gen::fuzzy_set(rng, n);
    let k = Precision::new(beta, n).expect("beta validated").k;
    let rn = r.complement(neg);
    let lo_s = lower(&s, &op, &a, beta);
    let up_s = upper(&s, &gp, neg, &a, beta);
    let lower_hyp =
        (0..n).all(|x| lower_witness_count(&r, &o, &a, x, lo_s.value(x)) >= k);
    let upper_hyp =
        (0..n).all(|x| upper_witness_count(&rn, &g, &a, x, up_s.value(x)) >= k);
    if !lower_hyp && !upper_hyp {
        return TrialResult::PremiseUnmet;
    }
    let mut c = Checks::new(ctx.tolerance(), format!("n={n} beta={beta:.6} O={o} G={g}"));
    if lower_hyp {
        c.set_eq(
            &lo_s,
            &lower(&r, &op, &a, beta),
            "witness condition for all x implies lower_S = lower_R",
        );
    }
    if upper_hyp {
        c.set_eq(
            &up_s,
            &upper(&r, &gp, neg, &a, beta),
            "witness condition for all x implies upper_S = upper_R",
        );
    }
    ok(c)
}

fn prop_4_13_equal_iff_witness(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let Some((o, g, op, gp, s, r, n, beta)) = two_relation_instance(ctx, rng) else {
        return TrialResult::PremiseUnmet;
    };
    let neg = ctx.negation();
    let a = gen::fuzzy_set(rng, n);
    let k = Precision::new(beta, n).expect("beta validated").k;
    let tol = ctx.tolerance();
    let rn = r.complement(neg);
    let lo_s = lower(&s, &op, &a, beta);
    let up_s = upper(&s, &gp, neg, &a, beta);
    let mut c = Checks::new(tol, format!("n={n} beta={beta:.6} O={o} G={g}"));
    c.agree(
        lo_s.max_abs_diff(&lower(&r, &op, &a, beta)) <= tol,
        (0..n).all(|x| lower_witness_count(&r, &o, &a, x, lo_s.value(x)) >= k),
        "lower_S = lower_R iff witness condition for all x",
    );
    c.agree(
        up_s.max_abs_diff(&upper(&r, &gp, neg, &a, beta)) <= tol,
        (0..n).all(|x| upper_witness_count(&rn, &g, &a, x, up_s.value(x)) >= k),
        "upper_S = upper_R iff witness condition for all x",
    );
    ok(c)
}

fn prop_4_14_crisp_cardinality(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let Some((o, g, op, gp, s, r, n, beta)) = two_relation_instance(ctx, rng) else {
        return TrialResult::PremiseUnmet;
    };
    let neg = ctx.negation();
    let a = gen::crisp_set(rng, n);
    let k = Precision::new(beta, n).expect("beta validated").k;
    let tol = ctx.tolerance();
    let rn = r.complement(neg);
    let lo_s = lower(&s, &op, &a, beta);
    let up_s = upper(&s, &gp, neg, &a, beta);
    let card = a.crisp_cardinality();
    let mut c = Checks::new(tol, format!("n={n} beta={beta:.6} |A|={card} O={o} G={g}"));
    // |{y not in A : granule(y) = 0}| >= beta|X| - |A|, i.e. count + |A| >= k.
    let lower_counts = (0..n).all(|x| {
        let zeros = (0..n)
            .filter(|&y| a.value(y) == 0.0 && o.eval(r.at(x, y), lo_s.value(x)) <= SLACK)
            .count();
        zeros + card >= k
    });
    c.agree(
        lo_s.max_abs_diff(&lower(&r, &op, &a, beta)) <= tol,
        lower_counts,
        "lower_S = lower_R iff zero-granule count >= beta|X| - |A|",
    );
    // |{y in A : granule(y) = 1}| >= |A| + (beta-1)|X|, i.e. count + (n-k) >= |A|.
    let upper_counts = (0..n).all(|x| {
        let ones = (0..n)
            .filter(|&y| a.value(y) == 1.0 && g.eval(rn.at(x, y), up_s.value(x)) >= 1.0 - SLACK)
            .count();
        ones + (n - k) >= card
    });
    c.agree(
        up_s.max_abs_diff(&upper(&r, &gp, neg, &a, beta)) <= tol,
        upper_counts,
        "upper_S = upper_R iff one-granule count >= |A| + (beta-1)|X|",
    );
    ok(c)
}

// ---------------------------------------------------------------------------
// Remarks — fixed numeric fixtures
// ---------------------------------------------------------------------------

fn remark_3_3_comparability(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, trial: u32) -> TrialResult {
    let Some(neg) = ctx.involutive_negation() else {
        return TrialResult::PremiseUnmet;
    };
    let tol = ctx.tolerance();
    if trial == 0 && ctx.cfg_defaults() {
        // O-similarity relation, product/probabilistic-sum dual pair.
        let r = similarity_fixture();
        let a = set(&[0.8, 0.1, 0.6]);
        let op = opair(Overlap::Product);
        let gp = gpair(Grouping::ProbabilisticSum);
        let mut c = Checks::new(tol, String::from("similarity fixture, beta=0.5"));
        let lo = lower(&r, &op, &a, 0.5);
        let up = upper(&r, &gp, neg, &a, 0.5);
        c.set_eq(&lo, &set(&[0.6, 1.0, 0.6]), "lower fixture");
        c.set_eq(&up, &set(&[0.6, 1.0 / 3.0, 0.6]), "upper fixture");
        c.set_eq(
            &lo.complement(neg),
            &set(&[0.4, 0.0, 0.4]),
            "N(lower(A)) reproduces the dual-route vector",
        );
        c.set_eq(
            &upper(&r, &gp, neg, &a.complement(neg), 0.5),
            &set(&[0.4, 0.0, 0.4]),
            "upper(A^N) = N(lower(A))",
        );
        c.require(!lo.subset_of(&up, SLACK), "lower not below upper");
        let rep = check_comparability(&r, &op, &gp, neg, &a, 0.5).expect("well formed");
        c.require(
            rep.verdict == ComparabilityVerdict::UpperBelowLower,
            "verdict: upper strictly below lower",
        );
        return ok(c);
    }
    if trial == 1 && ctx.cfg_defaults() {
        // Non-transitive relation, product overlap with the maximum
        // grouping (not a dual pair).
        let r = non_transitive_fixture();
        let a = set(&[0.2, 0.0, 0.6]);
        let op = opair(Overlap::Product);
        let gp = gpair(Grouping::Maximum);
        let mut c = Checks::new(tol, String::from("non-transitive fixture, beta=0.5"));
        c.set_eq(&gvec(&r, &op, &a, 0.5), &set(&[0.75, 0.6, 1.0]), "g fixture");
        let lo = lower(&r, &op, &a, 0.5);
        let up = upper(&r, &gp, neg, &a, 0.5);
        c.set_eq(&lo, &set(&[0.6, 0.15, 0.6]), "lower fixture");
        c.set_eq(&up, &set(&[0.2, 0.8, 0.2]), "upper fixture");
        c.require(!lo.subset_of(&up, SLACK), "lower not below upper");
        c.require(!up.subset_of(&lo, SLACK), "upper not below lower");
        let rep = check_comparability(&r, &op, &gp, neg, &a, 0.5).expect("well formed");
        c.require(
            rep.verdict == ComparabilityVerdict::Incomparable,
            "verdict: incomparable",
        );
        return ok(c);
    }
    // Random instances in the comparable regime: beta = 1, or
    // (n-1)/n < beta <= 1 with a reflexive relation and unital pair.
    let (o, g) = match ctx.assoc_dual_pair(rng) {
        Some(pair) => pair,
        None => return TrialResult::PremiseUnmet,
    };
    let (op, gp) = (opair(o.clone()), gpair(g.clone()));
    let n = gen::size(rng, ctx.max_universe());
    let reflexive_case = gen::index(rng, 2) == 0;
    let (r, beta) = if reflexive_case {
        let lo_b = (n - 1) as f64 / n as f64;
        (
            gen::reflexive(&gen::relation(rng, n)),
            lo_b + (1.0 - lo_b) * (1.0 - gen::unit(rng)),
        )
    } else {
        (gen::relation(rng, n), 1.0)
    };
    let a = gen::fuzzy_set(rng, n);
    let mut c = Checks::new(
        tol,
        format!("n={n} beta={beta:.6} reflexive={reflexive_case} O={o} G={g}"),
    );
    let rep = check_comparability(&r, &op, &gp, neg, &a, beta).expect("well formed");
    c.require(rep.lower_below_set, "lower(A) <= A");
    c.require(rep.set_below_upper, "A <= upper(A)");
    c.require(rep.lower_below_upper, "lower(A) <= upper(A)");
    ok(c)
}

fn remark_4_1_counterexample(ctx: &Ctx<'_>, _rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let r = harmonic_fixture_relation();
    let a = set(&[0.2, 0.4, 0.0]);
    let o = Overlap::Harmonic;
    let op = opair(o.clone());
    let beta = 0.5;
    let mut c = Checks::new(ctx.tolerance(), String::from("harmonic fixture, alpha=1"));

    let lower_of_scaled = lower(&r, &op, &o_const(&o, 1.0, &a), beta);
    c.set_eq(
        &lower_of_scaled,
        &set(&[1.0 / 3.0, 4.0 / 7.0, 4.0 / 7.0]),
        "lower(O(alpha_X, A))",
    );
    let lo = lower(&r, &op, &a, beta);
    c.set_eq(&lo, &set(&[1.0 / 3.0, 0.4, 0.4]), "lower(A)");
    let scaled_lower = o_const(&o, 1.0, &lo);
    c.set_eq(
        &scaled_lower,
        &set(&[0.5, 4.0 / 7.0, 4.0 / 7.0]),
        "O(alpha_X, lower(A))",
    );
    c.set_le(&lower_of_scaled, &scaled_lower, "containment direction");
    c.require(
        scaled_lower.value(0) > lower_of_scaled.value(0) + 1e-9,
        "containment is strict at x1",
    );

    let shifted_lower = io_const(&op, 1.0, &lo);
    c.set_eq(
        &shifted_lower,
        &set(&[0.2, 0.25, 0.25]),
        "I_O(alpha_X, lower(A))",
    );
    let lower_of_shifted = lower(&r, &op, &io_const(&op, 1.0, &a), beta);
    c.set_eq(
        &lower_of_shifted,
        &set(&[0.25, 0.25, 0.25]),
        "lower(I_O(alpha_X, A))",
    );
    c.set_le(&shifted_lower, &lower_of_shifted, "containment direction");
    c.require(
        lower_of_shifted.value(0) > shifted_lower.value(0) + 1e-9,
        "containment is strict at x1",
    );
    c.require(
        !satisfies_exchange_overlap(&o),
        "the harmonic overlap violates the exchange principle",
    );
    ok(c)
}

fn remark_4_2_crisp_fixture(ctx: &Ctx<'_>, _rng: &mut ChaCha8Rng, _t: u32) -> TrialResult {
    let r = crisp_similarity_fixture();
    let a = set(&[0.2, 0.0, 0.5]);
    let o = Overlap::Harmonic;
    let op = opair(o.clone());
    let beta = 0.5;
    // alpha = min_x R(x,x) = 1 on this fixture.
    let alpha = 1.0;
    let mut c = Checks::new(ctx.tolerance(), String::from("crisp similarity fixture"));
    let report = check_relation(&r, &o, crate::fuzzy::RELATION_TOL);
    c.require(report.similarity, "crisp fixture is an O-similarity relation");
    let gv = gvec(&r, &op, &a, beta);
    c.set_eq(&gv, &set(&[1.0 / 3.0, 1.0, 1.0 / 3.0]), "g_A");
    let lo = lower(&r, &op, &a, beta);
    c.set_eq(&lo, &set(&[0.5, 1.0, 0.5]), "lower(A)");
    c.set_eq(
        &o_const(&o, alpha, &lo),
        &set(&[2.0 / 3.0, 1.0, 2.0 / 3.0]),
        "O(alpha_X, lower(A))",
    );
    let lo2 = lower(&r, &op, &lo, beta);
    c.set_eq(&lo2, &set(&[0.5, 1.0, 0.5]), "lower(lower(A))");
    c.set_le(&gv, &lo, "g_A <= lower(A)");
    c.set_le(&lo2, &o_const(&o, alpha, &lo), "lower(lower(A)) <= O(alpha_X, lower(A))");
    ok(c)
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

pub(super) const CATALOGUE: &[LawDef] = &[
    LawDef { id: "lemma2.1-residual-bounds", anchor: "Lemma 2.1(1)", fixed: false, runner: lemma_2_1_residual_bounds },
    LawDef { id: "lemma2.1-meet-distribution", anchor: "Lemma 2.1(2)", fixed: false, runner: lemma_2_1_meet_distribution },
    LawDef { id: "lemma2.1-join-distribution", anchor: "Lemma 2.1(3)", fixed: false, runner: lemma_2_1_join_distribution },
    LawDef { id: "lemma2.1-antitone-first-arg", anchor: "Lemma 2.1(4)", fixed: false, runner: lemma_2_1_antitone_first_arg },
    LawDef { id: "lemma2.1-exchange-iff-o6", anchor: "Lemma 2.1(5); Remark 2.4", fixed: false, runner: lemma_2_1_exchange_iff },
    LawDef { id: "lemma2.2-identity-unit", anchor: "Lemma 2.2(1)", fixed: false, runner: lemma_2_2_identity_unit },
    LawDef { id: "lemma2.2-order-iff", anchor: "Lemma 2.2(2)", fixed: false, runner: lemma_2_2_order_iff },
    LawDef { id: "lemma2.2-residual-dominance", anchor: "Lemma 2.2(3)", fixed: false, runner: lemma_2_2_residual_dominance },
    LawDef { id: "lemma2.3-shift-inequality", anchor: "Lemma 2.3(1)", fixed: false, runner: lemma_2_3_shift_inequality },
    LawDef { id: "lemma2.3-self-distribution", anchor: "Lemma 2.3(2)", fixed: false, runner: lemma_2_3_self_distribution },
    LawDef { id: "lemma3.1-crisp-duality", anchor: "Lemma 3.1", fixed: false, runner: lemma_3_1_crisp_duality },
    LawDef { id: "lemma4.1-granular-meet-join", anchor: "Lemma 4.1(1)", fixed: false, runner: lemma_4_1_granular_meet_join },
    LawDef { id: "lemma4.1-monotone", anchor: "Lemma 4.1(2)", fixed: false, runner: lemma_4_1_monotone },
    LawDef { id: "lemma4.2-top-bottom", anchor: "Lemma 4.2(1)", fixed: false, runner: lemma_4_2_top_bottom },
    LawDef { id: "lemma4.2-constant-bounds", anchor: "Lemma 4.2(2)", fixed: false, runner: lemma_4_2_constant_bounds },
    LawDef { id: "lemma4.2-implication-point-case", anchor: "Lemma 4.2(3)", fixed: false, runner: lemma_4_2_implication_point_case },
    LawDef { id: "lemma4.2-point-case", anchor: "Lemma 4.2(4)", fixed: false, runner: lemma_4_2_point_case },
    LawDef { id: "lemma4.3-residual-shift", anchor: "Lemma 4.3(1)", fixed: false, runner: lemma_4_3_residual_shift },
    LawDef { id: "lemma4.3-scale-bounds", anchor: "Lemma 4.3(2)", fixed: false, runner: lemma_4_3_scale_bounds },
    LawDef { id: "lemma4.4-subrelation-reverses", anchor: "Lemma 4.4", fixed: false, runner: lemma_4_4_subrelation },
    LawDef { id: "prop3.1-witness-condition", anchor: "Prop 3.1", fixed: false, runner: prop_3_1_witness_condition },
    LawDef { id: "prop3.3-duality", anchor: "Prop 3.3", fixed: false, runner: prop_3_3_duality },
    LawDef { id: "prop3.4-crisp-counting", anchor: "Prop 3.4", fixed: false, runner: prop_3_4_crisp_counting },
    LawDef { id: "prop3.5-crisp-reflexive", anchor: "Prop 3.5(1)", fixed: false, runner: prop_3_5_crisp_reflexive },
    LawDef { id: "prop3.5-crisp-transitive", anchor: "Prop 3.5(2)", fixed: false, runner: prop_3_5_crisp_transitive },
    LawDef { id: "prop3.5-crisp-preorder", anchor: "Prop 3.5(3)", fixed: false, runner: prop_3_5_crisp_preorder },
    LawDef { id: "prop4.1-monotone", anchor: "Prop 4.1(1)", fixed: false, runner: prop_4_1_monotone },
    LawDef { id: "prop4.1-union-shift", anchor: "Prop 4.1(2)", fixed: false, runner: prop_4_1_union_shift },
    LawDef { id: "prop4.2-constant-bounds", anchor: "Prop 4.2(1)", fixed: false, runner: prop_4_2_constant_bounds },
    LawDef { id: "prop4.2-crisp-ratio", anchor: "Prop 4.2(2)", fixed: false, runner: prop_4_2_crisp_ratio },
    LawDef { id: "prop4.2-implication-point-formula", anchor: "Prop 4.2(3)", fixed: false, runner: prop_4_2_implication_point_formula },
    LawDef { id: "prop4.2-point-formula", anchor: "Prop 4.2(4)", fixed: false, runner: prop_4_2_point_formula },
    LawDef { id: "prop4.3-residual-containment", anchor: "Prop 4.3(1)", fixed: false, runner: prop_4_3_residual_containment },
    LawDef { id: "prop4.3-scale-containment", anchor: "Prop 4.3(2)", fixed: false, runner: prop_4_3_scale_containment },
    LawDef { id: "prop4.4-serial-equivalences", anchor: "Prop 4.4", fixed: false, runner: prop_4_4_serial_equivalences },
    LawDef { id: "prop4.5-reflexive-g-below-lower", anchor: "Prop 4.5(1); Remark 4.2", fixed: false, runner: prop_4_5_reflexive_g_below_lower },
    LawDef { id: "prop4.5-reflexive-boundaries", anchor: "Prop 4.5(2)-(5)", fixed: false, runner: prop_4_5_reflexive_boundaries },
    LawDef { id: "prop4.6-symmetric-inverse", anchor: "Prop 4.6", fixed: false, runner: prop_4_6_symmetric_inverse },
    LawDef { id: "prop4.7-transitive-lower-below-g", anchor: "Prop 4.7(1)", fixed: false, runner: prop_4_7_transitive_lower_below_g },
    LawDef { id: "prop4.7-transitive-upper", anchor: "Prop 4.7(2)", fixed: false, runner: prop_4_7_transitive_upper },
    LawDef { id: "prop4.8-preorder-lower-equals-g", anchor: "Prop 4.8(1)", fixed: false, runner: prop_4_8_preorder_lower_equals_g },
    LawDef { id: "prop4.8-preorder-upper-equals-h", anchor: "Prop 4.8(2)", fixed: false, runner: prop_4_8_preorder_upper_equals_h },
    LawDef { id: "prop4.9-preorder-residual-equality", anchor: "Prop 4.9(1)", fixed: false, runner: prop_4_9_preorder_residual_equality },
    LawDef { id: "prop4.9-boundary-iff", anchor: "Prop 4.9(2)-(3)", fixed: false, runner: prop_4_9_boundary_iff },
    LawDef { id: "prop4.9-beta-shift", anchor: "Prop 4.9(4)", fixed: false, runner: prop_4_9_beta_shift },
    LawDef { id: "prop4.10-compatible-lower", anchor: "Prop 4.10(1)", fixed: false, runner: prop_4_10_compatible_lower },
    LawDef { id: "prop4.10-compatible-upper", anchor: "Prop 4.10(2)", fixed: false, runner: prop_4_10_compatible_upper },
    LawDef { id: "prop4.11-equal-implies-witness", anchor: "Prop 4.11", fixed: false, runner: prop_4_11_equal_implies_witness },
    LawDef { id: "prop4.12-witness-implies-equal", anchor: "Prop 4.12", fixed: false, runner: prop_4_12_witness_implies_equal },
    LawDef { id: "prop4.13-equal-iff-witness", anchor: "Prop 4.13", fixed: false, runner: prop_4_13_equal_iff_witness },
    LawDef { id: "prop4.14-crisp-cardinality", anchor: "Prop 4.14", fixed: false, runner: prop_4_14_crisp_cardinality },
    LawDef { id: "remark3.3-comparability", anchor: "Remark 3.3(1)-(3)", fixed: false, runner: remark_3_3_comparability },
    LawDef { id: "remark4.1-counterexample", anchor: "Remark 4.1", fixed: true, runner: remark_4_1_counterexample },
    LawDef { id: "remark4.2-crisp-fixture", anchor: "Remark 4.2", fixed: true, runner: remark_4_2_crisp_fixture },
];
