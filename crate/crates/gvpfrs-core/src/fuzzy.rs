//! Finite-universe fuzzy sets, fuzzy relations, relation property checks,
//! fuzzy granules and O-transitive closure.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::connectives::{gn_implication, Grouping, Negation, Overlap};

/// Slack used by default when deciding relation properties on floats.
pub const RELATION_TOL: f64 = 1e-9;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
pub enum FuzzyError {
    EmptyUniverse,
    DuplicateLabel(String),
    UnknownLabel(String),
    /// A membership or relation entry outside `[0,1]`; `place` names it.
    OutOfRange { place: String, value: f64 },
    DimensionMismatch { expected: usize, got: usize },
    NotSquare { rows: usize, row: usize, len: usize },
    IndexOutOfBounds { index: usize, size: usize },
    NotCrisp { place: String, value: f64 },
    NonInvolutiveNegation,
}

impl fmt::Display for FuzzyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FuzzyError::EmptyUniverse => write!(f, "universe must contain at least one element"),
            FuzzyError::DuplicateLabel(l) => write!(f, "duplicate universe label {l:?}"),
            FuzzyError::UnknownLabel(l) => write!(f, "unknown universe label {l:?}"),
            FuzzyError::OutOfRange { place, value } => {
                write!(f, "{place} = {value} outside [0,1]")
            }
            FuzzyError::DimensionMismatch { expected, got } => {
                write!(f, "expected length {expected}, got {got}")
            }
            FuzzyError::NotSquare { rows, row, len } => {
                write!(f, "relation with {rows} rows has row {row} of length {len}")
            }
            FuzzyError::IndexOutOfBounds { index, size } => {
                write!(f, "element index {index} out of bounds for universe of size {size}")
            }
            FuzzyError::NotCrisp { place, value } => {
                write!(f, "{place} = {value} is not crisp (must be 0 or 1)")
            }
            FuzzyError::NonInvolutiveNegation => {
                write!(f, "G-granules require an involutive negation")
            }
        }
    }
}

fn check_unit_at(place: impl Fn() -> String, value: f64) -> Result<(), FuzzyError> {
    if value.is_nan() || !(0.0..=1.0).contains(&value) {
        Err(FuzzyError::OutOfRange {
            place: place(),
            value,
        })
    } else {
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Universe
// ---------------------------------------------------------------------------

/// An ordered, duplicate-free list of element names.
#[derive(Debug, Clone, PartialEq)]
pub struct Universe {
    labels: Vec<String>,
}

impl Universe {
    pub fn new(labels: Vec<String>) -> Result<Self, FuzzyError> {
        if labels.is_empty() {
            return Err(FuzzyError::EmptyUniverse);
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(FuzzyError::DuplicateLabel(l.clone()));
            }
        }
        Ok(Universe { labels })
    }

    /// Universe `x1, .., xn`.
    pub fn indexed(n: usize) -> Result<Self, FuzzyError> {
        if n == 0 {
            return Err(FuzzyError::EmptyUniverse);
        }
        Ok(Universe {
            labels: (1..=n).map(|i| alloc::format!("x{i}")).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Result<usize, FuzzyError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| FuzzyError::UnknownLabel(String::from(label)))
    }
}

// ---------------------------------------------------------------------------
// Fuzzy sets
// ---------------------------------------------------------------------------

/// A membership vector over a finite indexed universe.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzySet {
    values: Vec<f64>,
}

impl FuzzySet {
    pub fn new(values: Vec<f64>) -> Result<Self, FuzzyError> {
        if values.is_empty() {
            return Err(FuzzyError::EmptyUniverse);
        }
        for (i, &v) in values.iter().enumerate() {
            check_unit_at(|| alloc::format!("set[{i}]"), v)?;
        }
        Ok(FuzzySet { values })
    }

    /// The constant set `alpha_X`.
    pub fn constant(n: usize, alpha: f64) -> Result<Self, FuzzyError> {
        check_unit_at(|| String::from("alpha"), alpha)?;
        if n == 0 {
            return Err(FuzzyError::EmptyUniverse);
        }
        Ok(FuzzySet {
            values: vec![alpha; n],
        })
    }

    /// The fuzzy point `y_alpha`: `alpha` at `at`, `0` elsewhere.
    pub fn point(n: usize, at: usize, alpha: f64) -> Result<Self, FuzzyError> {
        check_unit_at(|| String::from("alpha"), alpha)?;
        if at >= n {
            return Err(FuzzyError::IndexOutOfBounds { index: at, size: n });
        }
        let mut values = vec![0.0; n];
        values[at] = alpha;
        Ok(FuzzySet { values })
    }

    pub fn empty(n: usize) -> Self {
        FuzzySet {
            values: vec![0.0; n],
        }
    }

    pub fn full(n: usize) -> Self {
        FuzzySet {
            values: vec![1.0; n],
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn value(&self, i: usize) -> f64 {
        self.values[i]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `A^N`, the pointwise negation.
    pub fn complement(&self, n: Negation) -> FuzzySet {
        FuzzySet {
            values: self.values.iter().map(|&v| n.eval(v)).collect(),
        }
    }

    /// Pointwise map; the caller guarantees `f` stays inside `[0,1]`.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> FuzzySet {
        FuzzySet {
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }

    /// Pointwise combination with another set of the same length.
    pub fn zip(&self, other: &FuzzySet, f: impl Fn(f64, f64) -> f64) -> FuzzySet {
        debug_assert_eq!(self.len(), other.len());
        FuzzySet {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// Pointwise minimum (intersection).
    pub fn intersection(&self, other: &FuzzySet) -> FuzzySet {
        self.zip(other, f64::min)
    }

    /// Pointwise maximum (union).
    pub fn union(&self, other: &FuzzySet) -> FuzzySet {
        self.zip(other, f64::max)
    }

    /// `A ⊆ B` within `slack`.
    pub fn subset_of(&self, other: &FuzzySet, slack: f64) -> bool {
        self.values
            .iter()
            .zip(&other.values)
            .all(|(&a, &b)| a <= b + slack)
    }

    /// Largest pointwise excess of `self` over `other` (0 when contained).
    pub fn containment_violation(&self, other: &FuzzySet) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .fold(0.0f64, |w, (&a, &b)| w.max(a - b))
    }

    /// Largest pointwise absolute difference.
    pub fn max_abs_diff(&self, other: &FuzzySet) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .fold(0.0f64, |w, (&a, &b)| w.max((a - b).abs()))
    }

    pub fn is_crisp(&self) -> bool {
        self.values.iter().all(|&v| v == 0.0 || v == 1.0)
    }

    /// Number of elements with membership 1 (cardinality of a crisp set).
    pub fn crisp_cardinality(&self) -> usize {
        self.values.iter().filter(|&&v| v == 1.0).count()
    }
}

// ---------------------------------------------------------------------------
// Fuzzy relations
// ---------------------------------------------------------------------------

/// A square membership matrix over the universe, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyRelation {
    n: usize,
    values: Vec<f64>,
}

impl FuzzyRelation {
    pub fn new(rows: &[Vec<f64>]) -> Result<Self, FuzzyError> {
        let n = rows.len();
        if n == 0 {
            return Err(FuzzyError::EmptyUniverse);
        }
        let mut values = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(FuzzyError::NotSquare {
                    rows: n,
                    row: i,
                    len: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                check_unit_at(|| alloc::format!("relation[{i}][{j}]"), v)?;
                values.push(v);
            }
        }
        Ok(FuzzyRelation { n, values })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> FuzzyRelation {
        let mut values = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                values.push(f(x, y));
            }
        }
        FuzzyRelation { n, values }
    }

    pub fn identity(n: usize) -> FuzzyRelation {
        Self::from_fn(n, |x, y| if x == y { 1.0 } else { 0.0 })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn at(&self, x: usize, y: usize) -> f64 {
        self.values[x * self.n + y]
    }

    pub fn row(&self, x: usize) -> &[f64] {
        &self.values[x * self.n..(x + 1) * self.n]
    }

    /// `R^{-1}(x, y) = R(y, x)`.
    pub fn inverse(&self) -> FuzzyRelation {
        Self::from_fn(self.n, |x, y| self.at(y, x))
    }

    /// `R^N(x, y) = N(R(x, y))`.
    pub fn complement(&self, neg: Negation) -> FuzzyRelation {
        FuzzyRelation {
            n: self.n,
            values: self.values.iter().map(|&v| neg.eval(v)).collect(),
        }
    }

    pub fn is_crisp(&self) -> bool {
        self.values.iter().all(|&v| v == 0.0 || v == 1.0)
    }

    /// The crisp neighborhood `[x]_R = { y : R(x, y) = 1 }` as a bitmap.
    pub fn crisp_neighborhood(&self, x: usize) -> Vec<bool> {
        self.row(x).iter().map(|&v| v == 1.0).collect()
    }

    pub fn max_abs_diff(&self, other: &FuzzyRelation) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .fold(0.0f64, |w, (&a, &b)| w.max((a - b).abs()))
    }

    /// `S ⊆ R` pointwise within `slack`.
    pub fn subrelation_of(&self, other: &FuzzyRelation, slack: f64) -> bool {
        self.values
            .iter()
            .zip(&other.values)
            .all(|(&a, &b)| a <= b + slack)
    }
}

// ---------------------------------------------------------------------------
// Relation properties
// ---------------------------------------------------------------------------

/// Exhaustive property report for a fuzzy relation under an overlap.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct RelationReport {
    pub serial: bool,
    pub reflexive: bool,
    pub symmetric: bool,
    pub o_transitive: bool,
    /// reflexive and O-transitive
    pub preorder: bool,
    /// preorder and symmetric
    pub similarity: bool,
    /// Row whose supremum falls short of 1, if any.
    pub serial_witness: Option<usize>,
    pub reflexive_witness: Option<usize>,
    pub symmetric_witness: Option<(usize, usize)>,
    /// Triple `(x, y, z)` with `O(R(x,y), R(y,z)) > R(x,z)`, if any.
    pub transitive_witness: Option<(usize, usize, usize)>,
    pub max_transitivity_violation: f64,
}

/// Decides seriality, reflexivity, symmetry and O-transitivity by
/// exhaustive scan (`|X|^3` triples for transitivity) with `eps` slack.
pub fn check_relation(r: &FuzzyRelation, o: &Overlap, eps: f64) -> RelationReport {
    let n = r.len();

    let mut serial = true;
    let mut serial_witness = None;
    for x in 0..n {
        let m = r.row(x).iter().fold(0.0f64, |a, &b| a.max(b));
        if m < 1.0 - eps {
            serial = false;
            serial_witness = Some(x);
            break;
        }
    }

    let mut reflexive = true;
    let mut reflexive_witness = None;
    for x in 0..n {
        if r.at(x, x) < 1.0 - eps {
            reflexive = false;
            reflexive_witness = Some(x);
            break;
        }
    }

    let mut symmetric = true;
    let mut symmetric_witness = None;
    'sym: for x in 0..n {
        for y in x + 1..n {
            if (r.at(x, y) - r.at(y, x)).abs() > eps {
                symmetric = false;
                symmetric_witness = Some((x, y));
                break 'sym;
            }
        }
    }

    let mut max_violation = 0.0f64;
    let mut transitive_witness = None;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let v = o.eval(r.at(x, y), r.at(y, z)) - r.at(x, z);
                if v > max_violation {
                    max_violation = v;
                    transitive_witness = Some((x, y, z));
                }
            }
        }
    }
    let o_transitive = max_violation <= eps;
    if o_transitive {
        transitive_witness = None;
    }

    RelationReport {
        serial,
        reflexive,
        symmetric,
        o_transitive,
        preorder: reflexive && o_transitive,
        similarity: reflexive && o_transitive && symmetric,
        serial_witness,
        reflexive_witness,
        symmetric_witness,
        transitive_witness,
        max_transitivity_violation: max_violation,
    }
}

// ---------------------------------------------------------------------------
// Granules
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GranuleSide {
    Overlap,
    Grouping,
}

/// A fuzzy granule anchored at one element.
///
/// O-granule: `y -> O(R(x,y), level)`. G-granule: `y -> G(N(R(x,y)), level)`,
/// which coincides pointwise with the `(G,N)`-implication
/// `I_{G,N}(R(x,y), level)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Granule {
    pub anchor: usize,
    pub level: f64,
    pub side: GranuleSide,
    pub values: FuzzySet,
}

pub fn o_granule(
    r: &FuzzyRelation,
    o: &Overlap,
    anchor: usize,
    level: f64,
) -> Result<Granule, FuzzyError> {
    if anchor >= r.len() {
        return Err(FuzzyError::IndexOutOfBounds {
            index: anchor,
            size: r.len(),
        });
    }
    check_unit_at(|| String::from("level"), level)?;
    let values = FuzzySet {
        values: r.row(anchor).iter().map(|&v| o.eval(v, level)).collect(),
    };
    Ok(Granule {
        anchor,
        level,
        side: GranuleSide::Overlap,
        values,
    })
}

pub fn g_granule(
    r: &FuzzyRelation,
    g: &Grouping,
    neg: Negation,
    anchor: usize,
    level: f64,
) -> Result<Granule, FuzzyError> {
    if anchor >= r.len() {
        return Err(FuzzyError::IndexOutOfBounds {
            index: anchor,
            size: r.len(),
        });
    }
    if !neg.is_involutive() {
        return Err(FuzzyError::NonInvolutiveNegation);
    }
    check_unit_at(|| String::from("level"), level)?;
    let values = FuzzySet {
        values: r
            .row(anchor)
            .iter()
            .map(|&v| gn_implication(g, neg, v, level))
            .collect(),
    };
    Ok(Granule {
        anchor,
        level,
        side: GranuleSide::Grouping,
        values,
    })
}

// ---------------------------------------------------------------------------
// O-transitive closure
// ---------------------------------------------------------------------------

/// Smallest O-transitive relation containing `r`, by max-composition
/// squaring with an early exit once an iteration moves no entry by more
/// than 1e-15.
///
/// For overlaps below `min` (product, minimum, `O_p` with `p >= 1`) the
/// fixpoint is reached exactly after `⌈log2(n)⌉` rounds. Overlaps that sit
/// above `min` on parts of the square (e.g. `O_DB`, whose cycles pull
/// entries up toward the cycle maximum) approach their fixpoint
/// geometrically; the delta exit leaves a residual well below the
/// relation checker's slack.
pub fn o_transitive_closure(r: &FuzzyRelation, o: &Overlap) -> FuzzyRelation {
    let n = r.len();
    let mut cur = r.clone();
    for _ in 0..4096 {
        let mut next = cur.clone();
        let mut delta = 0.0f64;
        for x in 0..n {
            for z in 0..n {
                let mut best = cur.at(x, z);
                for y in 0..n {
                    best = best.max(o.eval(cur.at(x, y), cur.at(y, z)));
                }
                let d = best - cur.at(x, z);
                if d > 0.0 {
                    next.values[x * n + z] = best;
                    if d > delta {
                        delta = d;
                    }
                }
            }
        }
        cur = next;
        if delta < 1e-15 {
            break;
        }
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectives::Overlap;
    use alloc::string::ToString;

    fn rel(rows: &[&[f64]]) -> FuzzyRelation {
        FuzzyRelation::new(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    // The two relations from the worked comparability examples.
    fn similarity_relation() -> FuzzyRelation {
        rel(&[&[1.0, 0.6, 1.0], &[0.6, 1.0, 0.6], &[1.0, 0.6, 1.0]])
    }

    fn non_transitive_relation() -> FuzzyRelation {
        rel(&[&[0.0, 0.2, 0.8], &[1.0, 0.0, 1.0], &[0.0, 0.1, 0.0]])
    }

    #[test]
    fn universe_rejects_duplicates() {
        let err = Universe::new(vec!["a".to_string(), "a".to_string()]).unwrap_err();
        assert_eq!(err, FuzzyError::DuplicateLabel("a".to_string()));
        assert!(Universe::new(vec![]).is_err());
    }

    #[test]
    fn point_and_complement_match_definitions() {
        let p = FuzzySet::point(3, 1, 0.7).unwrap();
        assert_eq!(p.values(), &[0.0, 0.7, 0.0]);

        let a = FuzzySet::new(vec![0.8, 0.1, 0.6]).unwrap();
        let c = a.complement(Negation::Standard);
        let expect = FuzzySet::new(vec![0.2, 0.9, 0.4]).unwrap();
        assert!(c.max_abs_diff(&expect) < 1e-15);
    }

    #[test]
    fn inverse_of_symmetric_relation_is_identity_operation() {
        let r = similarity_relation();
        assert_eq!(r.inverse(), r);
    }

    #[test]
    fn set_validation_names_offender() {
        let err = FuzzySet::new(vec![0.2, 1.4]).unwrap_err();
        assert_eq!(
            err,
            FuzzyError::OutOfRange {
                place: "set[1]".to_string(),
                value: 1.4
            }
        );
    }

    #[test]
    fn similarity_relation_is_certified() {
        let rep = check_relation(&similarity_relation(), &Overlap::Product, RELATION_TOL);
        assert!(rep.serial && rep.reflexive && rep.symmetric && rep.o_transitive);
        assert!(rep.similarity);
    }

    #[test]
    fn non_transitive_relation_is_flagged_with_witness() {
        let rep = check_relation(&non_transitive_relation(), &Overlap::Product, RELATION_TOL);
        assert!(!rep.o_transitive);
        // O(R(x1,x2), R(x2,x1)) = 0.2 > 0 = R(x1,x1)
        let (x, y, z) = rep.transitive_witness.unwrap();
        assert_eq!((x, z), (0, 0));
        assert_eq!(y, 1);
        assert!((rep.max_transitivity_violation - 0.2).abs() < 1e-12);
    }

    #[test]
    fn identity_relation_has_every_property() {
        let rep = check_relation(&FuzzyRelation::identity(4), &Overlap::Product, RELATION_TOL);
        assert!(rep.serial && rep.reflexive && rep.symmetric && rep.o_transitive);
    }

    #[test]
    fn o_granule_matches_pointwise_products() {
        let r = rel(&[&[1.0, 0.6, 1.0], &[0.6, 1.0, 0.6], &[1.0, 0.6, 1.0]]);
        let g = o_granule(&r, &Overlap::Product, 0, 0.6).unwrap();
        assert_eq!(g.values.values(), &[0.6, 0.36, 0.6]);

        let z = o_granule(&r, &Overlap::Product, 0, 0.0).unwrap();
        assert!(z.values.values().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn g_granule_matches_hand_oracle() {
        // max grouping, standard negation, row (0, 0.2, 0.8), level 0.2:
        // pointwise max(1 - R, 0.2) = (1, 0.8, 0.2)
        let r = rel(&[&[0.0, 0.2, 0.8], &[0.0, 0.0, 0.0], &[0.0, 0.0, 0.0]]);
        let g = g_granule(&r, &Grouping::Maximum, Negation::Standard, 0, 0.2).unwrap();
        assert_eq!(g.values.values(), &[1.0, 0.8, 0.2]);

        let err = g_granule(&r, &Grouping::Maximum, Negation::SquareComplement, 0, 0.2);
        assert_eq!(err.unwrap_err(), FuzzyError::NonInvolutiveNegation);
    }

    #[test]
    fn closure_adds_single_path_product() {
        let mut rows = vec![vec![0.0; 3]; 3];
        rows[0][1] = 0.5;
        rows[1][2] = 0.4;
        let r = FuzzyRelation::new(&rows).unwrap();
        let c = o_transitive_closure(&r, &Overlap::Product);
        assert!((c.at(0, 2) - 0.2).abs() < 1e-15);
        assert_eq!(c.at(0, 1), 0.5);
        assert_eq!(c.at(1, 2), 0.4);
    }

    #[test]
    fn closure_is_idempotent_and_certified() {
        let r = similarity_relation();
        let c = o_transitive_closure(&r, &Overlap::Product);
        assert_eq!(c, r); // already transitive
    }
}
