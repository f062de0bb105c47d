//! The variable precision approximation operators.
//!
//! For a fuzzy relation `R`, fuzzy set `A` and precision `β`, the lower
//! approximation is the union of O-granules over all anchors and all
//! levels whose granule sits below `A` on some subset of cardinality at
//! least `β|X|`; the upper approximation is the dual intersection of
//! G-granules. The computational form used here replaces the subset
//! family by per-anchor optimal levels:
//!
//! * `g_A(x)` = the k-th largest of the residuated scores
//!   `I_O(R(x,y), A(y))`, with `k = ⌈β·|X|⌉` clamped to `[1, |X|]` — the
//!   inner minimum over any admissible subset is maximised by the subset
//!   holding the k largest scores;
//! * `h_A(x)` = dually the k-th smallest of `I^G(R^N(x,y), A(y))`;
//! * `lower(z) = max_x O(R(x,z), g_A(x))`,
//!   `upper(z) = min_x G(R^N(x,z), h_A(x))`.
//!
//! The order-statistic reduction is validated against
//! [`bruteforce_lower`]/[`bruteforce_upper`], which enumerate every subset
//! of cardinality at least `k` literally (capped at [`DEFAULT_ORACLE_CAP`]
//! elements).
//!
//! The subset family never includes the empty set: at `β = 0` the
//! threshold clamps to `k = 1`, since a minimum over the empty subset has
//! no value in `[0,1]`. All in-range behaviour (`β > 0`) is unaffected.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::connectives::{
    certify_dual_pair, GroupingResidual, Negation, OverlapResidual,
};
use crate::fuzzy::{FuzzyError, FuzzyRelation, FuzzySet};

/// Largest universe the brute-force enumeration accepts by default.
pub const DEFAULT_ORACLE_CAP: usize = 16;

/// Absolute slack for containment predicates (witness verification,
/// comparability).
pub const CONTAINMENT_SLACK: f64 = 1e-12;

/// Downward nudge applied before the ceiling in `k = ⌈β·n⌉` so that
/// representation error (e.g. `0.5 * 3 = 1.5000000000000002`) cannot
/// inflate the threshold.
const CEIL_NUDGE: f64 = 1e-12;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
pub enum EngineError {
    Fuzzy(FuzzyError),
    /// β outside `[0,1]`.
    InvalidPrecision { beta: f64 },
    /// The brute-force oracle refuses universes above its cap.
    UniverseExceedsCap { size: usize, cap: usize },
    /// Crisp-case operators require 0/1 inputs.
    NotCrisp { place: String, value: f64 },
    /// The configured grouping is not the N-dual of the configured
    /// overlap (largest sampled gap attached).
    NotDual { max_gap: f64 },
    NonInvolutiveNegation,
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::Fuzzy(e) => e.fmt(f),
            EngineError::InvalidPrecision { beta } => {
                write!(f, "precision beta = {beta} outside [0,1]")
            }
            EngineError::UniverseExceedsCap { size, cap } => write!(
                f,
                "universe size {size} exceeds the brute-force oracle cap {cap}"
            ),
            EngineError::NotCrisp { place, value } => {
                write!(f, "{place} = {value} is not crisp (must be 0 or 1)")
            }
            EngineError::NotDual { max_gap } => write!(
                f,
                "configured grouping is not the N-dual of the overlap (max sampled gap {max_gap:e})"
            ),
            EngineError::NonInvolutiveNegation => {
                write!(f, "operation requires an involutive negation")
            }
        }
    }
}

impl From<FuzzyError> for EngineError {
    fn from(e: FuzzyError) -> Self {
        EngineError::Fuzzy(e)
    }
}

// ---------------------------------------------------------------------------
// Precision family
// ---------------------------------------------------------------------------

/// The variable precision threshold: subsets of cardinality at least
/// `β·n` participate, i.e. at least `k = clamp(⌈β·n⌉, 1, n)` elements.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Precision {
    pub beta: f64,
    pub n: usize,
    pub k: usize,
}

impl Precision {
    pub fn new(beta: f64, n: usize) -> Result<Self, EngineError> {
        if beta.is_nan() || !(0.0..=1.0).contains(&beta) {
            return Err(EngineError::InvalidPrecision { beta });
        }
        if n == 0 {
            return Err(EngineError::Fuzzy(FuzzyError::EmptyUniverse));
        }
        let raw = libm::ceil(beta * n as f64 - CEIL_NUDGE);
        let k = if raw < 1.0 { 1 } else { raw as usize }.clamp(1, n);
        Ok(Precision { beta, n, k })
    }
}

fn check_shapes(r: &FuzzyRelation, a: &FuzzySet) -> Result<(), EngineError> {
    if r.len() != a.len() {
        return Err(EngineError::Fuzzy(FuzzyError::DimensionMismatch {
            expected: r.len(),
            got: a.len(),
        }));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Order-statistic form
// ---------------------------------------------------------------------------

/// k-th largest value of a score slice (1-based k).
fn kth_largest(scores: &mut [f64], k: usize) -> f64 {
    let (_, v, _) = scores.select_nth_unstable_by(k - 1, |a, b| b.total_cmp(a));
    *v
}

/// k-th smallest value of a score slice (1-based k).
fn kth_smallest(scores: &mut [f64], k: usize) -> f64 {
    let (_, v, _) = scores.select_nth_unstable_by(k - 1, f64::total_cmp);
    *v
}

/// Indices of the k best scores, ties resolved toward smaller indices so
/// the witness set is the lexicographically smallest among equals.
/// `descending` picks largest-first (lower side), otherwise smallest-first.
fn top_k_indices(scores: &[f64], k: usize, descending: bool) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..scores.len()).collect();
    idx.sort_unstable_by(|&i, &j| {
        let ord = if descending {
            scores[j].total_cmp(&scores[i])
        } else {
            scores[i].total_cmp(&scores[j])
        };
        ord.then(i.cmp(&j))
    });
    idx.truncate(k);
    idx.sort_unstable();
    idx
}

/// Per-anchor optimal granule levels for the lower approximation:
/// `g_A(x)` = k-th largest of `I_O(R(x,y), A(y))` over `y`.
pub fn g_vector(
    r: &FuzzyRelation,
    opair: &OverlapResidual,
    a: &FuzzySet,
    beta: f64,
) -> Result<FuzzySet, EngineError> {
    check_shapes(r, a)?;
    let p = Precision::new(beta, r.len())?;
    let mut out = Vec::with_capacity(p.n);
    let mut scores = vec![0.0; p.n];
    for x in 0..p.n {
        for (y, s) in scores.iter_mut().enumerate() {
            *s = opair.implication(r.at(x, y), a.value(y));
        }
        out.push(kth_largest(&mut scores, p.k));
    }
    Ok(FuzzySet::new(out)?)
}

/// Per-anchor optimal granule levels for the upper approximation:
/// `h_A(x)` = k-th smallest of `I^G(R^N(x,y), A(y))` over `y`. Requires an
/// involutive negation.
pub fn h_vector(
    r: &FuzzyRelation,
    gpair: &GroupingResidual,
    neg: Negation,
    a: &FuzzySet,
    beta: f64,
) -> Result<FuzzySet, EngineError> {
    check_shapes(r, a)?;
    if !neg.is_involutive() {
        return Err(EngineError::NonInvolutiveNegation);
    }
    let p = Precision::new(beta, r.len())?;
    let rn = r.complement(neg);
    let mut out = Vec::with_capacity(p.n);
    let mut scores = vec![0.0; p.n];
    for x in 0..p.n {
        for (y, s) in scores.iter_mut().enumerate() {
            *s = gpair.coimplication(rn.at(x, y), a.value(y));
        }
        out.push(kth_smallest(&mut scores, p.k));
    }
    Ok(FuzzySet::new(out)?)
}

/// Which computation path produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Selection,
    Bruteforce,
}

/// One side of an approximation: values, the per-anchor levels, and the
/// per-anchor witness subsets (the k best-scoring elements).
#[derive(Debug, Clone, PartialEq)]
pub struct ApproxSide {
    pub values: FuzzySet,
    /// `g_A` for the lower side, `h_A` for the upper side.
    pub levels: FuzzySet,
    /// Per anchor, the k element indices realising the level.
    pub witnesses: Vec<Vec<usize>>,
}

/// Lower approximation with levels and witnesses.
pub fn lower_approx(
    r: &FuzzyRelation,
    opair: &OverlapResidual,
    a: &FuzzySet,
    beta: f64,
) -> Result<ApproxSide, EngineError> {
    check_shapes(r, a)?;
    let p = Precision::new(beta, r.len())?;
    let mut levels = Vec::with_capacity(p.n);
    let mut witnesses = Vec::with_capacity(p.n);
    let mut scores = vec![0.0; p.n];
    for x in 0..p.n {
        for (y, s) in scores.iter_mut().enumerate() {
            *s = opair.implication(r.at(x, y), a.value(y));
        }
        witnesses.push(top_k_indices(&scores, p.k, true));
        levels.push(kth_largest(&mut scores, p.k));
    }
    let values = (0..p.n)
        .map(|z| {
            (0..p.n).fold(0.0f64, |acc, x| {
                acc.max(opair.overlap.eval(r.at(x, z), levels[x]))
            })
        })
        .collect();
    Ok(ApproxSide {
        values: FuzzySet::new(values)?,
        levels: FuzzySet::new(levels)?,
        witnesses,
    })
}

/// Upper approximation with levels and witnesses.
pub fn upper_approx(
    r: &FuzzyRelation,
    gpair: &GroupingResidual,
    neg: Negation,
    a: &FuzzySet,
    beta: f64,
) -> Result<ApproxSide, EngineError> {
    check_shapes(r, a)?;
    if !neg.is_involutive() {
        return Err(EngineError::NonInvolutiveNegation);
    }
    let p = Precision::new(beta, r.len())?;
    let rn = r.complement(neg);
    let mut levels = Vec::with_capacity(p.n);
    let mut witnesses = Vec::with_capacity(p.n);
    let mut scores = vec![0.0; p.n];
    for x in 0..p.n {
        for (y, s) in scores.iter_mut().enumerate() {
            *s = gpair.coimplication(rn.at(x, y), a.value(y));
        }
        witnesses.push(top_k_indices(&scores, p.k, false));
        levels.push(kth_smallest(&mut scores, p.k));
    }
    let values = (0..p.n)
        .map(|z| {
            (0..p.n).fold(1.0f64, |acc, x| {
                acc.min(gpair.grouping.eval(rn.at(x, z), levels[x]))
            })
        })
        .collect();
    Ok(ApproxSide {
        values: FuzzySet::new(values)?,
        levels: FuzzySet::new(levels)?,
        witnesses,
    })
}

/// Both approximations of one set.
#[derive(Debug, Clone, PartialEq)]
pub struct ApproximationResult {
    pub lower: FuzzySet,
    pub upper: FuzzySet,
    pub g: FuzzySet,
    pub h: FuzzySet,
    pub witnesses_lower: Vec<Vec<usize>>,
    pub witnesses_upper: Vec<Vec<usize>>,
    pub method: Method,
}

pub fn approximate(
    r: &FuzzyRelation,
    opair: &OverlapResidual,
    gpair: &GroupingResidual,
    neg: Negation,
    a: &FuzzySet,
    beta: f64,
) -> Result<ApproximationResult, EngineError> {
    let lo = lower_approx(r, opair, a, beta)?;
    let up = upper_approx(r, gpair, neg, a, beta)?;
    Ok(ApproximationResult {
        lower: lo.values,
        upper: up.values,
        g: lo.levels,
        h: up.levels,
        witnesses_lower: lo.witnesses,
        witnesses_upper: up.witnesses,
        method: Method::Selection,
    })
}

// ---------------------------------------------------------------------------
// Brute-force definitional oracle
// ---------------------------------------------------------------------------

fn check_cap(n: usize, cap: usize) -> Result<(), EngineError> {
    if n > cap {
        return Err(EngineError::UniverseExceedsCap { size: n, cap });
    }
    Ok(())
}

/// Definitional lower approximation: for each anchor the level supremum
/// is found by enumerating *every* subset of cardinality at least `k`
/// (the inner minimum of residuated scores over the subset, maximised
/// across subsets), then the granule union is taken literally.
pub fn bruteforce_lower(
    r: &FuzzyRelation,
    opair: &OverlapResidual,
    a: &FuzzySet,
    beta: f64,
    cap: usize,
) -> Result<FuzzySet, EngineError> {
    check_shapes(r, a)?;
    let p = Precision::new(beta, r.len())?;
    check_cap(p.n, cap)?;
    let mut levels = Vec::with_capacity(p.n);
    for x in 0..p.n {
        let scores: Vec<f64> = (0..p.n)
            .map(|y| opair.implication(r.at(x, y), a.value(y)))
            .collect();
        let mut best = 0.0f64;
        for mask in 1u32..(1u32 << p.n) {
            if (mask.count_ones() as usize) < p.k {
                continue;
            }
            let mut inner = 1.0f64;
            for (y, &s) in scores.iter().enumerate() {
                if mask & (1 << y) != 0 {
                    inner = inner.min(s);
                }
            }
            best = best.max(inner);
        }
        levels.push(best);
    }
    let values = (0..p.n)
        .map(|z| {
            (0..p.n).fold(0.0f64, |acc, x| {
                acc.max(opair.overlap.eval(r.at(x, z), levels[x]))
            })
        })
        .collect();
    Ok(FuzzySet::new(values)?)
}

/// Definitional upper approximation by full subset enumeration.
pub fn bruteforce_upper(
    r: &FuzzyRelation,
    gpair: &GroupingResidual,
    neg: Negation,
    a: &FuzzySet,
    beta: f64,
    cap: usize,
) -> Result<FuzzySet, EngineError> {
    check_shapes(r, a)?;
    if !neg.is_involutive() {
        return Err(EngineError::NonInvolutiveNegation);
    }
    let p = Precision::new(beta, r.len())?;
    check_cap(p.n, cap)?;
    let rn = r.complement(neg);
    let mut levels = Vec::with_capacity(p.n);
    for x in 0..p.n {
        let scores: Vec<f64> = (0..p.n)
            .map(|y| gpair.coimplication(rn.at(x, y), a.value(y)))
            .collect();
        let mut best = 1.0f64;
        for mask in 1u32..(1u32 << p.n) {
            if (mask.count_ones() as usize) < p.k {
                continue;
            }
            let mut inner = 0.0f64;
            for (y, &s) in scores.iter().enumerate() {
                if mask & (1 << y) != 0 {
                    inner = inner.max(s);
                }
            }
            best = best.min(inner);
        }
        levels.push(best);
    }
    let values = (0..p.n)
        .map(|z| {
            (0..p.n).fold(1.0f64, |acc, x| {
                acc.min(gpair.grouping.eval(rn.at(x, z), levels[x]))
            })
        })
        .collect();
    Ok(FuzzySet::new(values)?)
}

// ---------------------------------------------------------------------------
// Duality route
// ---------------------------------------------------------------------------

/// Upper approximation computed as `N(lower(A^N))`.
///
/// Valid only when the supplied grouping is the N-dual of the overlap
/// (certified by sampling; [`EngineError::NotDual`] otherwise); the result
/// then equals [`upper_approx`] with that grouping.
pub fn upper_via_duality(
    r: &FuzzyRelation,
    opair: &OverlapResidual,
    gpair: &GroupingResidual,
    neg: Negation,
    a: &FuzzySet,
    beta: f64,
) -> Result<FuzzySet, EngineError> {
    if !neg.is_involutive() {
        return Err(EngineError::NonInvolutiveNegation);
    }
    certify_dual_pair(&opair.overlap, &gpair.grouping, neg, 1e-9)
        .map_err(|max_gap| EngineError::NotDual { max_gap })?;
    let lo = lower_approx(r, opair, &a.complement(neg), beta)?;
    Ok(lo.values.complement(neg))
}

// ---------------------------------------------------------------------------
// Crisp degenerations
// ---------------------------------------------------------------------------

fn require_crisp_inputs(r: &FuzzyRelation, a: &FuzzySet) -> Result<(), EngineError> {
    for x in 0..r.len() {
        for y in 0..r.len() {
            let v = r.at(x, y);
            if v != 0.0 && v != 1.0 {
                return Err(EngineError::NotCrisp {
                    place: alloc::format!("relation[{x}][{y}]"),
                    value: v,
                });
            }
        }
    }
    for (i, &v) in a.values().iter().enumerate() {
        if v != 0.0 && v != 1.0 {
            return Err(EngineError::NotCrisp {
                place: alloc::format!("set[{i}]"),
                value: v,
            });
        }
    }
    Ok(())
}

/// Crisp lower approximation by neighborhood counting:
/// the union of `[x]_R` over anchors with
/// `|[x]_R ∩ A^c| <= (1-β)|X|` (realised as `<= n - k`, which coincides
/// for every `β > 0`).
pub fn crisp_lower(r: &FuzzyRelation, a: &FuzzySet, beta: f64) -> Result<FuzzySet, EngineError> {
    check_shapes(r, a)?;
    require_crisp_inputs(r, a)?;
    let p = Precision::new(beta, r.len())?;
    let mut out = vec![0.0; p.n];
    for x in 0..p.n {
        let outside = (0..p.n)
            .filter(|&y| r.at(x, y) == 1.0 && a.value(y) == 0.0)
            .count();
        if outside <= p.n - p.k {
            for (z, o) in out.iter_mut().enumerate() {
                if r.at(x, z) == 1.0 {
                    *o = 1.0;
                }
            }
        }
    }
    Ok(FuzzySet::new(out)?)
}

/// Crisp upper approximation: the intersection of `[x]_R^c` over anchors
/// with `|[x]_R ∩ A| <= (1-β)|X|`.
pub fn crisp_upper(r: &FuzzyRelation, a: &FuzzySet, beta: f64) -> Result<FuzzySet, EngineError> {
    check_shapes(r, a)?;
    require_crisp_inputs(r, a)?;
    let p = Precision::new(beta, r.len())?;
    let mut out = vec![1.0; p.n];
    for x in 0..p.n {
        let inside = (0..p.n)
            .filter(|&y| r.at(x, y) == 1.0 && a.value(y) == 1.0)
            .count();
        if inside <= p.n - p.k {
            for (z, o) in out.iter_mut().enumerate() {
                if r.at(x, z) == 1.0 {
                    *o = 0.0;
                }
            }
        }
    }
    Ok(FuzzySet::new(out)?)
}

// ---------------------------------------------------------------------------
// Comparability diagnostics
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComparabilityVerdict {
    LowerBelowUpper,
    UpperBelowLower,
    Equal,
    Incomparable,
}

/// Pointwise order relations among `lower(A)`, `A` and `upper(A)`.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ComparabilityReport {
    pub lower_below_set: bool,
    pub set_below_upper: bool,
    pub lower_below_upper: bool,
    pub upper_below_lower: bool,
    pub verdict: ComparabilityVerdict,
}

pub fn check_comparability(
    r: &FuzzyRelation,
    opair: &OverlapResidual,
    gpair: &GroupingResidual,
    neg: Negation,
    a: &FuzzySet,
    beta: f64,
) -> Result<ComparabilityReport, EngineError> {
    let res = approximate(r, opair, gpair, neg, a, beta)?;
    let s = CONTAINMENT_SLACK;
    let lu = res.lower.subset_of(&res.upper, s);
    let ul = res.upper.subset_of(&res.lower, s);
    let verdict = match (lu, ul) {
        (true, true) => ComparabilityVerdict::Equal,
        (true, false) => ComparabilityVerdict::LowerBelowUpper,
        (false, true) => ComparabilityVerdict::UpperBelowLower,
        (false, false) => ComparabilityVerdict::Incomparable,
    };
    Ok(ComparabilityReport {
        lower_below_set: res.lower.subset_of(a, s),
        set_below_upper: a.subset_of(&res.upper, s),
        lower_below_upper: lu,
        upper_below_lower: ul,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectives::{Grouping, Overlap};
    use alloc::vec;
    use alloc::vec::Vec;

    fn rel(rows: &[&[f64]]) -> FuzzyRelation {
        FuzzyRelation::new(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn set(values: &[f64]) -> FuzzySet {
        FuzzySet::new(values.to_vec()).unwrap()
    }

    fn close(a: &FuzzySet, b: &[f64]) -> bool {
        a.max_abs_diff(&set(b)) < 1e-12
    }

    fn similarity_fixture() -> FuzzyRelation {
        rel(&[&[1.0, 0.6, 1.0], &[0.6, 1.0, 0.6], &[1.0, 0.6, 1.0]])
    }

    fn non_transitive_fixture() -> FuzzyRelation {
        rel(&[&[0.0, 0.2, 0.8], &[1.0, 0.0, 1.0], &[0.0, 0.1, 0.0]])
    }

    fn product_pair() -> OverlapResidual {
        OverlapResidual::auto(Overlap::Product)
    }

    fn psum_pair() -> GroupingResidual {
        GroupingResidual::auto(Grouping::ProbabilisticSum)
    }

    #[test]
    fn precision_thresholds() {
        assert_eq!(Precision::new(0.5, 3).unwrap().k, 2);
        assert_eq!(Precision::new(1.0, 5).unwrap().k, 5);
        assert_eq!(Precision::new(0.0, 4).unwrap().k, 1);
        assert_eq!(Precision::new(2.0 / 3.0, 3).unwrap().k, 2);
        assert_eq!(Precision::new(0.75, 4).unwrap().k, 3);
        assert!(Precision::new(1.5, 3).is_err());
        assert!(Precision::new(-0.1, 3).is_err());
    }

    #[test]
    fn g_vector_similarity_fixture() {
        let g = g_vector(&similarity_fixture(), &product_pair(), &set(&[0.8, 0.1, 0.6]), 0.5)
            .unwrap();
        assert!(close(&g, &[0.6, 1.0, 0.6]));
    }

    #[test]
    fn g_vector_non_transitive_fixture() {
        let g = g_vector(
            &non_transitive_fixture(),
            &product_pair(),
            &set(&[0.2, 0.0, 0.6]),
            0.5,
        )
        .unwrap();
        assert!(close(&g, &[0.75, 0.6, 1.0]));
    }

    #[test]
    fn beta_one_forces_full_minimum() {
        let r = similarity_fixture();
        let a = set(&[0.8, 0.1, 0.6]);
        let g = g_vector(&r, &product_pair(), &a, 1.0).unwrap();
        for x in 0..3 {
            let full_min = (0..3)
                .map(|y| product_pair().implication(r.at(x, y), a.value(y)))
                .fold(1.0f64, f64::min);
            assert!((g.value(x) - full_min).abs() < 1e-15);
        }
    }

    #[test]
    fn h_vector_matches_duality_identity() {
        // h_A = N(g_{A^N}) for a dual pair
        let r = similarity_fixture();
        let a = set(&[0.8, 0.1, 0.6]);
        let h = h_vector(&r, &psum_pair(), Negation::Standard, &a, 0.5).unwrap();
        assert!(close(&h, &[0.6, 1.0 / 3.0, 0.6]));
        let g_an = g_vector(&r, &product_pair(), &a.complement(Negation::Standard), 0.5).unwrap();
        assert!(h.max_abs_diff(&g_an.complement(Negation::Standard)) < 1e-12);

        let err = h_vector(&r, &psum_pair(), Negation::SquareComplement, &a, 0.5).unwrap_err();
        assert_eq!(err, EngineError::NonInvolutiveNegation);
    }

    #[test]
    fn h_of_empty_set_is_empty() {
        let r = non_transitive_fixture();
        let h = h_vector(&r, &psum_pair(), Negation::Standard, &FuzzySet::empty(3), 0.4).unwrap();
        assert!(close(&h, &[0.0, 0.0, 0.0]));
    }

    #[test]
    fn similarity_fixture_approximations() {
        let r = similarity_fixture();
        let a = set(&[0.8, 0.1, 0.6]);
        let res = approximate(
            &r,
            &product_pair(),
            &psum_pair(),
            Negation::Standard,
            &a,
            0.5,
        )
        .unwrap();
        assert!(close(&res.lower, &[0.6, 1.0, 0.6]));
        assert!(close(&res.upper, &[0.6, 1.0 / 3.0, 0.6]));
        // the dual-route vector the comparability discussion exhibits
        assert!(close(
            &res.lower.complement(Negation::Standard),
            &[0.4, 0.0, 0.4]
        ));
        assert_eq!(res.method, Method::Selection);
    }

    #[test]
    fn non_transitive_fixture_approximations() {
        let r = non_transitive_fixture();
        let a = set(&[0.2, 0.0, 0.6]);
        let lo = lower_approx(&r, &product_pair(), &a, 0.5).unwrap();
        assert!(close(&lo.values, &[0.6, 0.15, 0.6]));
        let up = upper_approx(
            &r,
            &GroupingResidual::auto(Grouping::Maximum),
            Negation::Standard,
            &a,
            0.5,
        )
        .unwrap();
        assert!(close(&up.values, &[0.2, 0.8, 0.2]));
    }

    #[test]
    fn witnesses_have_k_members_and_satisfy_containment() {
        let r = similarity_fixture();
        let a = set(&[0.8, 0.1, 0.6]);
        let lo = lower_approx(&r, &product_pair(), &a, 0.5).unwrap();
        for x in 0..3 {
            assert_eq!(lo.witnesses[x].len(), 2);
            for &y in &lo.witnesses[x] {
                assert!(
                    Overlap::Product.eval(r.at(x, y), lo.levels.value(x))
                        <= a.value(y) + CONTAINMENT_SLACK
                );
            }
        }
        // scores at x2 are (1, 0.1, 1): the two top scorers win
        assert_eq!(lo.witnesses[1], vec![0, 2]);
        // a genuine tie (all scores equal) resolves to the smallest indices
        let flat = lower_approx(
            &FuzzyRelation::identity(4),
            &product_pair(),
            &FuzzySet::constant(4, 0.3).unwrap(),
            0.5,
        )
        .unwrap();
        assert_eq!(flat.witnesses[0], vec![1, 2]);
    }

    #[test]
    fn bruteforce_agrees_on_fixtures() {
        let r = similarity_fixture();
        let a = set(&[0.8, 0.1, 0.6]);
        let sel = approximate(&r, &product_pair(), &psum_pair(), Negation::Standard, &a, 0.5)
            .unwrap();
        let blo = bruteforce_lower(&r, &product_pair(), &a, 0.5, DEFAULT_ORACLE_CAP).unwrap();
        let bup = bruteforce_upper(
            &r,
            &psum_pair(),
            Negation::Standard,
            &a,
            0.5,
            DEFAULT_ORACLE_CAP,
        )
        .unwrap();
        assert!(sel.lower.max_abs_diff(&blo) < 1e-9);
        assert!(sel.upper.max_abs_diff(&bup) < 1e-9);
    }

    #[test]
    fn bruteforce_refuses_above_cap() {
        let r = FuzzyRelation::identity(20);
        let a = FuzzySet::constant(20, 0.5).unwrap();
        let err = bruteforce_lower(&r, &product_pair(), &a, 0.5, 16).unwrap_err();
        assert_eq!(err, EngineError::UniverseExceedsCap { size: 20, cap: 16 });
    }

    #[test]
    fn beta_one_brackets_the_set() {
        let r = non_transitive_fixture();
        let a = set(&[0.2, 0.0, 0.6]);
        let res = approximate(&r, &product_pair(), &psum_pair(), Negation::Standard, &a, 1.0)
            .unwrap();
        assert!(res.lower.subset_of(&a, CONTAINMENT_SLACK));
        assert!(a.subset_of(&res.upper, CONTAINMENT_SLACK));
    }

    #[test]
    fn duality_route_matches_direct_upper() {
        let r = similarity_fixture();
        let a = set(&[0.8, 0.1, 0.6]);
        let via = upper_via_duality(
            &r,
            &product_pair(),
            &psum_pair(),
            Negation::Standard,
            &a,
            0.5,
        )
        .unwrap();
        assert!(close(&via, &[0.6, 1.0 / 3.0, 0.6]));
        let direct = upper_approx(&r, &psum_pair(), Negation::Standard, &a, 0.5).unwrap();
        assert!(via.max_abs_diff(&direct.values) < 1e-12);

        let err = upper_via_duality(
            &r,
            &product_pair(),
            &GroupingResidual::auto(Grouping::Maximum),
            Negation::Standard,
            &a,
            0.5,
        )
        .unwrap_err();
        assert!(matches!(err, EngineError::NotDual { .. }));
    }

    #[test]
    fn duality_route_of_empty_is_empty_for_serial_inverse() {
        // reflexive relation, so the inverse is serial
        let r = rel(&[&[1.0, 0.3, 0.0], &[0.2, 1.0, 0.9], &[0.0, 0.4, 1.0]]);
        let via = upper_via_duality(
            &r,
            &product_pair(),
            &psum_pair(),
            Negation::Standard,
            &FuzzySet::empty(3),
            0.6,
        )
        .unwrap();
        assert!(close(&via, &[0.0, 0.0, 0.0]));
    }

    #[test]
    fn crisp_operators_match_counting_examples() {
        // identity relation, A = {x1, x2}, beta = 2/3: every neighborhood
        // misses A^c by at most (1-beta)|X| = 1, so the lower approximation
        // is the whole universe.
        let r = FuzzyRelation::identity(3);
        let a = set(&[1.0, 1.0, 0.0]);
        let lo = crisp_lower(&r, &a, 2.0 / 3.0).unwrap();
        assert!(close(&lo, &[1.0, 1.0, 1.0]));

        let err = crisp_lower(&r, &set(&[0.5, 0.0, 1.0]), 0.5).unwrap_err();
        assert!(matches!(err, EngineError::NotCrisp { .. }));
    }

    #[test]
    fn crisp_operators_agree_with_granular_route() {
        let r = rel(&[
            &[1.0, 0.0, 1.0, 0.0],
            &[0.0, 1.0, 0.0, 0.0],
            &[1.0, 0.0, 1.0, 0.0],
            &[0.0, 1.0, 1.0, 1.0],
        ]);
        let a = set(&[1.0, 0.0, 1.0, 0.0]);
        for beta in [0.25, 0.5, 0.75, 1.0] {
            let c = crisp_lower(&r, &a, beta).unwrap();
            let g = lower_approx(&r, &OverlapResidual::auto(Overlap::Harmonic), &a, beta)
                .unwrap()
                .values;
            assert!(c.max_abs_diff(&g) < 1e-12);
            let cu = crisp_upper(&r, &a, beta).unwrap();
            let gu = upper_approx(
                &r,
                &GroupingResidual::auto(Grouping::power(2.0).unwrap()),
                Negation::Standard,
                &a,
                beta,
            )
            .unwrap()
            .values;
            assert!(cu.max_abs_diff(&gu) < 1e-12);
        }
    }

    #[test]
    fn comparability_fixture_verdicts() {
        let rep = check_comparability(
            &similarity_fixture(),
            &product_pair(),
            &psum_pair(),
            Negation::Standard,
            &set(&[0.8, 0.1, 0.6]),
            0.5,
        )
        .unwrap();
        assert_eq!(rep.verdict, ComparabilityVerdict::UpperBelowLower);
        assert!(!rep.lower_below_upper);

        let rep = check_comparability(
            &non_transitive_fixture(),
            &product_pair(),
            &GroupingResidual::auto(Grouping::Maximum),
            Negation::Standard,
            &set(&[0.2, 0.0, 0.6]),
            0.5,
        )
        .unwrap();
        assert_eq!(rep.verdict, ComparabilityVerdict::Incomparable);
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let r = FuzzyRelation::identity(3);
        let a = FuzzySet::constant(4, 0.2).unwrap();
        assert!(matches!(
            g_vector(&r, &product_pair(), &a, 0.5),
            Err(EngineError::Fuzzy(FuzzyError::DimensionMismatch { .. }))
        ));
    }
}
