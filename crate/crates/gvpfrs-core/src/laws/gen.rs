//! Random instance generators for the law suite and the bench command.
//!
//! Premise-bearing laws construct rather than reject: reflexivity by
//! forcing the diagonal, O-transitivity by closure, preorders by both,
//! subrelation pairs by scaling down and re-closing. Rejection sampling
//! almost never produces an O-transitive relation.

use alloc::vec::Vec;
use rand_core::RngCore;

use crate::connectives::Overlap;
use crate::fuzzy::{o_transitive_closure, FuzzyRelation, FuzzySet};
use crate::sample;

pub fn unit(rng: &mut impl RngCore) -> f64 {
    sample::unit(rng)
}

pub fn index(rng: &mut impl RngCore, bound: usize) -> usize {
    sample::index(rng, bound)
}

/// Universe size uniform in `2..=max`.
pub fn size(rng: &mut impl RngCore, max: usize) -> usize {
    2 + sample::index(rng, max.max(2) - 1)
}

/// Uniform memberships; a third of the draws mix in exact 0/1 entries so
/// boundary behaviour is exercised.
pub fn fuzzy_set(rng: &mut impl RngCore, n: usize) -> FuzzySet {
    let snap = rng.next_u64() % 3 == 0;
    let values: Vec<f64> = (0..n)
        .map(|_| {
            let v = sample::unit(rng);
            if snap {
                match rng.next_u64() % 4 {
                    0 => 0.0,
                    1 => 1.0,
                    _ => v,
                }
            } else {
                v
            }
        })
        .collect();
    FuzzySet::new(values).expect("generated memberships are in range")
}

/// Crisp set; may be empty or full.
pub fn crisp_set(rng: &mut impl RngCore, n: usize) -> FuzzySet {
    let values: Vec<f64> = (0..n)
        .map(|_| if rng.next_u64() % 2 == 0 { 1.0 } else { 0.0 })
        .collect();
    FuzzySet::new(values).expect("crisp memberships are in range")
}

/// Crisp set with at least one member.
pub fn nonempty_crisp_set(rng: &mut impl RngCore, n: usize) -> FuzzySet {
    let mut values = crisp_set(rng, n).values().to_vec();
    if values.iter().all(|&v| v == 0.0) {
        values[sample::index(rng, n)] = 1.0;
    }
    FuzzySet::new(values).expect("crisp memberships are in range")
}

/// Superset of `a`: pointwise max with fresh uniform values.
pub fn superset_of(rng: &mut impl RngCore, a: &FuzzySet) -> FuzzySet {
    a.union(&fuzzy_set(rng, a.len()))
}

/// Raw uniform relation, with zero entries mixed in so sparse structure
/// (and empty rows/columns) occurs.
pub fn relation(rng: &mut impl RngCore, n: usize) -> FuzzyRelation {
    let sparse = rng.next_u64() % 2 == 0;
    FuzzyRelation::from_fn(n, |_, _| {
        let v = sample::unit(rng);
        if sparse && rng.next_u64() % 3 == 0 {
            0.0
        } else {
            v
        }
    })
}

pub fn crisp_relation(rng: &mut impl RngCore, n: usize) -> FuzzyRelation {
    FuzzyRelation::from_fn(n, |_, _| if rng.next_u64() % 2 == 0 { 1.0 } else { 0.0 })
}

pub fn reflexive(r: &FuzzyRelation) -> FuzzyRelation {
    FuzzyRelation::from_fn(r.len(), |x, y| if x == y { 1.0 } else { r.at(x, y) })
}

/// Symmetrised by pointwise maximum with the transpose.
pub fn symmetrized(r: &FuzzyRelation) -> FuzzyRelation {
    FuzzyRelation::from_fn(r.len(), |x, y| r.at(x, y).max(r.at(y, x)))
}

/// O-transitive relation (closure of a raw draw).
pub fn o_transitive(rng: &mut impl RngCore, n: usize, o: &Overlap) -> FuzzyRelation {
    o_transitive_closure(&relation(rng, n), o)
}

/// Fuzzy O-preorder: reflexive + closed.
pub fn o_preorder(rng: &mut impl RngCore, n: usize, o: &Overlap) -> FuzzyRelation {
    o_transitive_closure(&reflexive(&relation(rng, n)), o)
}

/// Fuzzy O-similarity: reflexive + symmetric + closed (closure preserves
/// symmetry for commutative connectives).
pub fn o_similarity(rng: &mut impl RngCore, n: usize, o: &Overlap) -> FuzzyRelation {
    o_transitive_closure(&reflexive(&symmetrized(&relation(rng, n))), o)
}

/// A pair `(S, R)` of O-preorders with `S ⊆ R`, built by scaling `R` down
/// off the diagonal and re-closing (closure is monotone, so the closure
/// of the scaled relation stays inside the closed `R`).
pub fn subpreorder_pair(
    rng: &mut impl RngCore,
    n: usize,
    o: &Overlap,
) -> (FuzzyRelation, FuzzyRelation) {
    let r = o_preorder(rng, n, o);
    let c = sample::unit(rng);
    let scaled = FuzzyRelation::from_fn(n, |x, y| {
        if x == y {
            1.0
        } else {
            r.at(x, y) * c
        }
    });
    let s = o_transitive_closure(&scaled, o);
    (s, r)
}

/// Precision drawn from `(0, 1]`.
pub fn beta(rng: &mut impl RngCore) -> f64 {
    1.0 - sample::unit(rng)
}

/// Precision drawn from `(0.5, 1]`.
pub fn beta_above_half(rng: &mut impl RngCore) -> f64 {
    0.5 + 0.5 * (1.0 - sample::unit(rng))
}

/// The scalar grid `{0, 0.25, 0.5, 0.75, 1}` plus three fresh uniform
/// draws, used wherever a law quantifies over all of `[0,1]`.
pub fn alphas(rng: &mut impl RngCore) -> [f64; 8] {
    [
        0.0,
        0.25,
        0.5,
        0.75,
        1.0,
        sample::unit(rng),
        sample::unit(rng),
        sample::unit(rng),
    ]
}
