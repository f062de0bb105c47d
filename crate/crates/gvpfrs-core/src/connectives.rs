//! Overlap functions, grouping functions, fuzzy negations and their
//! residual operators.
//!
//! An *overlap function* is a symmetric, continuous, nondecreasing binary
//! operation `O` on `[0,1]` with `O(x,y) = 0` iff `xy = 0` and
//! `O(x,y) = 1` iff `xy = 1`; it relaxes the positive continuous t-norm by
//! dropping associativity and the identity element. A *grouping function*
//! `G` is the order dual (`G = 0` iff `x = y = 0`, `G = 1` iff `x = 1` or
//! `y = 1`). When a connective additionally satisfies the exchange
//! principle `O(x, O(y,u)) = O(y, O(x,u))` it is associative and `1`
//! (resp. `0`) becomes its identity element.
//!
//! Each overlap induces a residual implication
//! `I_O(x,y) = max { z : O(x,z) <= y }` and each grouping a residual
//! co-implication `I^G(x,y) = min { z : y <= G(x,z) }`. Closed forms are
//! registered for the built-in families; everything else falls back to
//! bisection, which converges on `[0,1]` for any continuous nondecreasing
//! connective.
//!
//! Axioms are *certified by sampling* ([`certify_overlap`] /
//! [`certify_grouping`]): boundary axioms are checked exactly at the
//! boundary nodes, monotonicity on ordered pairs, continuity through a
//! bounded-oscillation proxy on the grid (a heuristic certificate, not a
//! proof), and the exchange principle on sampled triples.

use alloc::boxed::Box;

use alloc::vec::Vec;
use core::fmt;

use crate::sample;

/// Default absolute tolerance for sampled axiom and identity checks.
pub const AXIOM_TOL: f64 = 1e-9;

/// Default absolute tolerance for bisected residuals.
pub const DEFAULT_BISECTION_TOL: f64 = 1e-12;

/// Hard cap on bisection steps; halving `[0,1]` 80 times is far below f64
/// resolution.
pub const MAX_BISECTION_STEPS: u32 = 80;

pub(crate) fn clamp01(v: f64) -> f64 {
    v.clamp(0.0, 1.0)
}

fn pow(x: f64, p: f64) -> f64 {
    libm::pow(x, p)
}

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Errors raised when building or evaluating connectives.
#[derive(Debug, Clone, PartialEq)]
pub enum ConnectiveError {
    /// Parameter outside the admissible range (e.g. `p <= 0` for the power
    /// overlap).
    InvalidParameter { name: &'static str, value: f64 },
    /// The requested operation needs an involutive negation.
    NonInvolutiveNegation,
    /// No closed-form residual is registered for this connective.
    NoClosedResidual,
    /// A tabulated connective was given a malformed or out-of-range grid.
    BadTable(&'static str),
    /// Input outside `[0,1]`.
    OutOfDomain { value: f64 },
}

impl fmt::Display for ConnectiveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConnectiveError::InvalidParameter { name, value } => {
                write!(f, "invalid parameter {name} = {value}")
            }
            ConnectiveError::NonInvolutiveNegation => {
                write!(f, "operation requires an involutive negation")
            }
            ConnectiveError::NoClosedResidual => {
                write!(f, "no closed-form residual registered for this connective")
            }
            ConnectiveError::BadTable(msg) => write!(f, "bad tabulated connective: {msg}"),
            ConnectiveError::OutOfDomain { value } => {
                write!(f, "input {value} outside [0,1]")
            }
        }
    }
}

/// Validates a unit-interval input.
pub fn check_unit(value: f64) -> Result<(), ConnectiveError> {
    if value.is_nan() || !(0.0..=1.0).contains(&value) {
        Err(ConnectiveError::OutOfDomain { value })
    } else {
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Negations
// ---------------------------------------------------------------------------

/// A fuzzy negation: strictly decreasing with `N(0) = 1` and `N(1) = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Negation {
    /// `N(x) = 1 - x`, the standard (involutive) negation.
    Standard,
    /// `N(x) = 1 - x^2`, a stock non-involutive negation.
    SquareComplement,
}

impl Negation {
    pub fn eval(self, x: f64) -> f64 {
        match self {
            Negation::Standard => 1.0 - x,
            Negation::SquareComplement => 1.0 - x * x,
        }
    }

    pub fn is_involutive(self) -> bool {
        matches!(self, Negation::Standard)
    }
}

impl fmt::Display for Negation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Negation::Standard => write!(f, "standard"),
            Negation::SquareComplement => write!(f, "square_complement"),
        }
    }
}

// ---------------------------------------------------------------------------
// Tabulated connectives
// ---------------------------------------------------------------------------

/// A user-supplied connective given by values on a uniform node grid over
/// `[0,1]^2`, evaluated by bilinear interpolation.
///
/// Residuals of tabulated connectives always use bisection.
#[derive(Debug, Clone, PartialEq)]
pub struct BilinearTable {
    nodes: usize,
    values: Vec<f64>,
}

impl BilinearTable {
    /// `rows[i][j]` holds the value at `(i/(m-1), j/(m-1))` for an `m x m`
    /// node grid, `m >= 2`.
    pub fn new(rows: &[Vec<f64>]) -> Result<Self, ConnectiveError> {
        let m = rows.len();
        if m < 2 {
            return Err(ConnectiveError::BadTable("need at least a 2x2 node grid"));
        }
        let mut values = Vec::with_capacity(m * m);
        for row in rows {
            if row.len() != m {
                return Err(ConnectiveError::BadTable("grid must be square"));
            }
            for &v in row {
                if v.is_nan() || !(0.0..=1.0).contains(&v) {
                    return Err(ConnectiveError::BadTable("grid values must lie in [0,1]"));
                }
                values.push(v);
            }
        }
        Ok(BilinearTable { nodes: m, values })
    }

    fn at(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.nodes + j]
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        let m = self.nodes - 1;
        let sx = x * m as f64;
        let sy = y * m as f64;
        let i = (sx as usize).min(m - 1);
        let j = (sy as usize).min(m - 1);
        let fx = sx - i as f64;
        let fy = sy - j as f64;
        let v = self.at(i, j) * (1.0 - fx) * (1.0 - fy)
            + self.at(i + 1, j) * fx * (1.0 - fy)
            + self.at(i, j + 1) * (1.0 - fx) * fy
            + self.at(i + 1, j + 1) * fx * fy;
        clamp01(v)
    }

    /// Largest adjacent-node jump, used as the oscillation bound.
    fn max_node_step(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.nodes {
            for j in 0..self.nodes {
                if i + 1 < self.nodes {
                    worst = worst.max((self.at(i + 1, j) - self.at(i, j)).abs());
                }
                if j + 1 < self.nodes {
                    worst = worst.max((self.at(i, j + 1) - self.at(i, j)).abs());
                }
            }
        }
        worst
    }

    fn node_step(&self) -> f64 {
        1.0 / (self.nodes - 1) as f64
    }
}

// ---------------------------------------------------------------------------
// Overlap and grouping functions
// ---------------------------------------------------------------------------

/// A built-in or derived overlap function.
#[derive(Debug, Clone, PartialEq)]
pub enum Overlap {
    /// `min(x, y)` — an associative overlap (the Gödel t-norm).
    Minimum,
    /// `x * y` — an associative overlap (the product t-norm).
    Product,
    /// `x^p * y^p` with `p > 0`, `p != 1` (the `O_p` family). Neither
    /// associative nor unital.
    Power { p: f64 },
    /// `2xy / (x + y)` (0 when `x + y = 0`) — the harmonic-mean overlap
    /// known as `O_DB`. Not associative.
    Harmonic,
    /// The N-dual of a grouping function: `N(G(N(x), N(y)))`.
    Dual {
        grouping: Box<Grouping>,
        negation: Negation,
    },
    /// Tabulated values with bilinear interpolation.
    Table(BilinearTable),
}

impl Overlap {
    /// Builds the `O_p` overlap, rejecting `p <= 0` and `p = 1`.
    pub fn power(p: f64) -> Result<Self, ConnectiveError> {
        if !p.is_finite() || p <= 0.0 || p == 1.0 {
            return Err(ConnectiveError::InvalidParameter { name: "p", value: p });
        }
        Ok(Overlap::Power { p })
    }

    /// N-dual of a grouping function; `negation` must be involutive.
    pub fn dual_of(grouping: Grouping, negation: Negation) -> Result<Self, ConnectiveError> {
        if !negation.is_involutive() {
            return Err(ConnectiveError::NonInvolutiveNegation);
        }
        Ok(Overlap::Dual {
            grouping: Box::new(grouping),
            negation,
        })
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        debug_assert!((0.0..=1.0).contains(&x) && (0.0..=1.0).contains(&y));
        match self {
            Overlap::Minimum => x.min(y),
            Overlap::Product => x * y,
            Overlap::Power { p } => pow(x, *p) * pow(y, *p),
            Overlap::Harmonic => {
                if x + y == 0.0 {
                    0.0
                } else {
                    clamp01(2.0 * x * y / (x + y))
                }
            }
            Overlap::Dual { grouping, negation } => {
                negation.eval(grouping.eval(negation.eval(x), negation.eval(y)))
            }
            Overlap::Table(t) => t.eval(x, y),
        }
    }

    /// Domain-checked evaluation.
    pub fn eval_checked(&self, x: f64, y: f64) -> Result<f64, ConnectiveError> {
        check_unit(x)?;
        check_unit(y)?;
        Ok(self.eval(x, y))
    }

    pub fn has_closed_residual(&self) -> bool {
        match self {
            Overlap::Minimum | Overlap::Product | Overlap::Power { .. } | Overlap::Harmonic => {
                true
            }
            Overlap::Dual { grouping, .. } => grouping.has_closed_coresidual(),
            Overlap::Table(_) => false,
        }
    }

    /// Slope bound used by the continuity (bounded-oscillation) check.
    fn lipschitz_hint(&self) -> f64 {
        match self {
            Overlap::Minimum | Overlap::Product => 1.5,
            Overlap::Power { p } => p.max(1.0) + 1.0,
            Overlap::Harmonic => 2.5,
            Overlap::Dual { grouping, negation } => {
                let n = match negation {
                    Negation::Standard => 1.0,
                    Negation::SquareComplement => 2.0,
                };
                grouping.lipschitz_hint() * n
            }
            Overlap::Table(t) => t.max_node_step() / t.node_step() * 1.25 + 0.5,
        }
    }
}

impl fmt::Display for Overlap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Overlap::Minimum => write!(f, "minimum"),
            Overlap::Product => write!(f, "product"),
            Overlap::Power { p } => write!(f, "O_p(p={p})"),
            Overlap::Harmonic => write!(f, "O_DB"),
            Overlap::Dual { grouping, negation } => {
                write!(f, "dual_of({grouping}, {negation})")
            }
            Overlap::Table(_) => write!(f, "tabulated"),
        }
    }
}

/// A built-in or derived grouping function.
#[derive(Debug, Clone, PartialEq)]
pub enum Grouping {
    /// `max(x, y)` — an associative grouping (the Gödel t-conorm).
    Maximum,
    /// `x + y - xy` — the probabilistic sum, an associative grouping.
    ProbabilisticSum,
    /// `1 - (1-x)^p (1-y)^p` with `p > 1` (the `G_p` family).
    Power { p: f64 },
    /// The N-dual of an overlap function: `N(O(N(x), N(y)))`.
    Dual {
        overlap: Box<Overlap>,
        negation: Negation,
    },
    /// Tabulated values with bilinear interpolation.
    Table(BilinearTable),
}

impl Grouping {
    /// Builds the `G_p` grouping, rejecting `p <= 1`.
    pub fn power(p: f64) -> Result<Self, ConnectiveError> {
        if !p.is_finite() || p <= 1.0 {
            return Err(ConnectiveError::InvalidParameter { name: "p", value: p });
        }
        Ok(Grouping::Power { p })
    }

    /// N-dual of an overlap function; `negation` must be involutive.
    pub fn dual_of(overlap: Overlap, negation: Negation) -> Result<Self, ConnectiveError> {
        if !negation.is_involutive() {
            return Err(ConnectiveError::NonInvolutiveNegation);
        }
        Ok(Grouping::Dual {
            overlap: Box::new(overlap),
            negation,
        })
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        debug_assert!((0.0..=1.0).contains(&x) && (0.0..=1.0).contains(&y));
        match self {
            Grouping::Maximum => x.max(y),
            // (x + y) - xy drifts below 1 at x = 1, breaking the G3
            // boundary the residual relies on; pin it.
            Grouping::ProbabilisticSum => {
                if x == 1.0 || y == 1.0 {
                    1.0
                } else {
                    clamp01(x + y - x * y)
                }
            }
            Grouping::Power { p } => clamp01(1.0 - pow(1.0 - x, *p) * pow(1.0 - y, *p)),
            Grouping::Dual { overlap, negation } => {
                negation.eval(overlap.eval(negation.eval(x), negation.eval(y)))
            }
            Grouping::Table(t) => t.eval(x, y),
        }
    }

    /// Domain-checked evaluation.
    pub fn eval_checked(&self, x: f64, y: f64) -> Result<f64, ConnectiveError> {
        check_unit(x)?;
        check_unit(y)?;
        Ok(self.eval(x, y))
    }

    pub fn has_closed_coresidual(&self) -> bool {
        match self {
            Grouping::Maximum | Grouping::ProbabilisticSum | Grouping::Power { .. } => true,
            Grouping::Dual { overlap, .. } => overlap.has_closed_residual(),
            Grouping::Table(_) => false,
        }
    }

    fn lipschitz_hint(&self) -> f64 {
        match self {
            Grouping::Maximum | Grouping::ProbabilisticSum => 1.5,
            Grouping::Power { p } => p.max(1.0) + 1.0,
            Grouping::Dual { overlap, negation } => {
                let n = match negation {
                    Negation::Standard => 1.0,
                    Negation::SquareComplement => 2.0,
                };
                overlap.lipschitz_hint() * n
            }
            Grouping::Table(t) => t.max_node_step() / t.node_step() * 1.25 + 0.5,
        }
    }
}

impl fmt::Display for Grouping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Grouping::Maximum => write!(f, "maximum"),
            Grouping::ProbabilisticSum => write!(f, "probabilistic_sum"),
            Grouping::Power { p } => write!(f, "G_p(p={p})"),
            Grouping::Dual { overlap, negation } => {
                write!(f, "dual_of({overlap}, {negation})")
            }
            Grouping::Table(_) => write!(f, "tabulated"),
        }
    }
}

/// `(G,N)`-implication: `I_{G,N}(a, b) = G(N(a), b)`. This is exactly the
/// kernel of the G-granules in [`crate::fuzzy`].
pub fn gn_implication(g: &Grouping, n: Negation, a: f64, b: f64) -> f64 {
    g.eval(n.eval(a), b)
}

/// The N-dual grouping of an overlap, recognising closed-form pairs under
/// the standard negation (`product <-> probabilistic_sum`,
/// `minimum <-> maximum`, `O_p <-> G_p`).
pub fn dual_grouping_of(o: &Overlap, n: Negation) -> Result<Grouping, ConnectiveError> {
    if !n.is_involutive() {
        return Err(ConnectiveError::NonInvolutiveNegation);
    }
    Ok(match (o, n) {
        (Overlap::Product, Negation::Standard) => Grouping::ProbabilisticSum,
        (Overlap::Minimum, Negation::Standard) => Grouping::Maximum,
        (Overlap::Power { p }, Negation::Standard) if *p > 1.0 => Grouping::Power { p: *p },
        (Overlap::Dual { grouping, negation }, _) if *negation == n => (**grouping).clone(),
        _ => Grouping::Dual {
            overlap: Box::new(o.clone()),
            negation: n,
        },
    })
}

/// The N-dual overlap of a grouping; inverse of [`dual_grouping_of`].
pub fn dual_overlap_of(g: &Grouping, n: Negation) -> Result<Overlap, ConnectiveError> {
    if !n.is_involutive() {
        return Err(ConnectiveError::NonInvolutiveNegation);
    }
    Ok(match (g, n) {
        (Grouping::ProbabilisticSum, Negation::Standard) => Overlap::Product,
        (Grouping::Maximum, Negation::Standard) => Overlap::Minimum,
        (Grouping::Power { p }, Negation::Standard) => Overlap::Power { p: *p },
        (Grouping::Dual { overlap, negation }, _) if *negation == n => (**overlap).clone(),
        _ => Overlap::Dual {
            grouping: Box::new(g.clone()),
            negation: n,
        },
    })
}

// ---------------------------------------------------------------------------
// Residual operators
// ---------------------------------------------------------------------------

/// How a residual is evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ResidualMode {
    ClosedForm,
    Bisection { tolerance: f64 },
}

fn closed_implication(o: &Overlap, x: f64, y: f64) -> Option<f64> {
    Some(match o {
        Overlap::Minimum => {
            if x <= y {
                1.0
            } else {
                y
            }
        }
        Overlap::Product => {
            if x == 0.0 {
                1.0
            } else {
                (y / x).min(1.0)
            }
        }
        Overlap::Power { p } => {
            if x == 0.0 {
                1.0
            } else {
                (pow(y, 1.0 / p) / x).min(1.0)
            }
        }
        Overlap::Harmonic => {
            // max{z : 2xz/(x+z) <= y} = xy/(2x - y) while y < 2x/(x+1).
            if x == 0.0 || y >= 2.0 * x / (x + 1.0) {
                1.0
            } else {
                clamp01(x * y / (2.0 * x - y))
            }
        }
        Overlap::Dual { grouping, negation } => {
            let inner =
                closed_coimplication(grouping, negation.eval(x), negation.eval(y))?;
            negation.eval(inner)
        }
        Overlap::Table(_) => return None,
    })
}

fn closed_coimplication(g: &Grouping, x: f64, y: f64) -> Option<f64> {
    Some(match g {
        Grouping::Maximum => {
            if x >= y {
                0.0
            } else {
                y
            }
        }
        Grouping::ProbabilisticSum => {
            if x >= y {
                0.0
            } else {
                // x < y <= 1 implies x < 1 here.
                clamp01((y - x) / (1.0 - x))
            }
        }
        Grouping::Power { p } => {
            if x >= 1.0 {
                0.0
            } else {
                clamp01(1.0 - pow(1.0 - y, 1.0 / p) / (1.0 - x))
            }
        }
        Grouping::Dual { overlap, negation } => {
            let inner = closed_implication(overlap, negation.eval(x), negation.eval(y))?;
            negation.eval(inner)
        }
        Grouping::Table(_) => return None,
    })
}

fn bisect_implication(o: &Overlap, x: f64, y: f64, tol: f64) -> f64 {
    if o.eval(x, 1.0) <= y {
        return 1.0;
    }
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..MAX_BISECTION_STEPS {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if o.eval(x, mid) <= y {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

fn bisect_coimplication(g: &Grouping, x: f64, y: f64, tol: f64) -> f64 {
    if g.eval(x, 0.0) >= y {
        return 0.0;
    }
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..MAX_BISECTION_STEPS {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if g.eval(x, mid) >= y {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// An overlap bundled with its residual implication strategy.
///
/// The adjunction `O(x,u) <= y  <=>  u <= I_O(x,y)` holds exactly for the
/// closed forms and within twice the bisection tolerance otherwise.
#[derive(Debug, Clone, PartialEq)]
pub struct OverlapResidual {
    pub overlap: Overlap,
    pub mode: ResidualMode,
}

impl OverlapResidual {
    /// Closed-form residual; errors when none is registered.
    pub fn closed_form(overlap: Overlap) -> Result<Self, ConnectiveError> {
        if !overlap.has_closed_residual() {
            return Err(ConnectiveError::NoClosedResidual);
        }
        Ok(OverlapResidual {
            overlap,
            mode: ResidualMode::ClosedForm,
        })
    }

    pub fn bisection(overlap: Overlap, tolerance: f64) -> Self {
        OverlapResidual {
            overlap,
            mode: ResidualMode::Bisection { tolerance },
        }
    }

    /// Closed form when available, bisection at the default tolerance
    /// otherwise.
    pub fn auto(overlap: Overlap) -> Self {
        if overlap.has_closed_residual() {
            OverlapResidual {
                overlap,
                mode: ResidualMode::ClosedForm,
            }
        } else {
            Self::bisection(overlap, DEFAULT_BISECTION_TOL)
        }
    }

    /// `I_O(x, y) = max { z : O(x, z) <= y }`.
    pub fn implication(&self, x: f64, y: f64) -> f64 {
        match self.mode {
            ResidualMode::ClosedForm => {
                closed_implication(&self.overlap, x, y).expect("closed form checked on build")
            }
            ResidualMode::Bisection { tolerance } => {
                bisect_implication(&self.overlap, x, y, tolerance)
            }
        }
    }

    /// Comparison slack implied by the residual mode.
    pub fn slack(&self) -> f64 {
        match self.mode {
            ResidualMode::ClosedForm => 0.0,
            ResidualMode::Bisection { tolerance } => 2.0 * tolerance,
        }
    }
}

/// A grouping bundled with its residual co-implication strategy.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupingResidual {
    pub grouping: Grouping,
    pub mode: ResidualMode,
}

impl GroupingResidual {
    pub fn closed_form(grouping: Grouping) -> Result<Self, ConnectiveError> {
        if !grouping.has_closed_coresidual() {
            return Err(ConnectiveError::NoClosedResidual);
        }
        Ok(GroupingResidual {
            grouping,
            mode: ResidualMode::ClosedForm,
        })
    }

    pub fn bisection(grouping: Grouping, tolerance: f64) -> Self {
        GroupingResidual {
            grouping,
            mode: ResidualMode::Bisection { tolerance },
        }
    }

    pub fn auto(grouping: Grouping) -> Self {
        if grouping.has_closed_coresidual() {
            GroupingResidual {
                grouping,
                mode: ResidualMode::ClosedForm,
            }
        } else {
            Self::bisection(grouping, DEFAULT_BISECTION_TOL)
        }
    }

    /// `I^G(x, y) = min { z : y <= G(x, z) }`.
    pub fn coimplication(&self, x: f64, y: f64) -> f64 {
        match self.mode {
            ResidualMode::ClosedForm => {
                closed_coimplication(&self.grouping, x, y).expect("closed form checked on build")
            }
            ResidualMode::Bisection { tolerance } => {
                bisect_coimplication(&self.grouping, x, y, tolerance)
            }
        }
    }

    pub fn slack(&self) -> f64 {
        match self.mode {
            ResidualMode::ClosedForm => 0.0,
            ResidualMode::Bisection { tolerance } => 2.0 * tolerance,
        }
    }
}

// ---------------------------------------------------------------------------
// Sampled certificates
// ---------------------------------------------------------------------------

/// Outcome of one sampled axiom check.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct AxiomCheck {
    pub holds: bool,
    pub max_violation: f64,
    /// Sample at the worst violation: up to three coordinates plus the two
    /// compared values.
    pub witness: Option<AxiomWitness>,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct AxiomWitness {
    pub points: Vec<f64>,
    pub lhs: f64,
    pub rhs: f64,
}

impl AxiomCheck {
    fn passing() -> Self {
        AxiomCheck {
            holds: true,
            max_violation: 0.0,
            witness: None,
        }
    }

    fn record(&mut self, violation: f64, tol: f64, points: &[f64], lhs: f64, rhs: f64) {
        if violation > self.max_violation {
            self.max_violation = violation;
            if violation > tol {
                self.witness = Some(AxiomWitness {
                    points: points.to_vec(),
                    lhs,
                    rhs,
                });
            }
        }
        if violation > tol {
            self.holds = false;
        }
    }
}

/// Per-axiom verdicts for an overlap or grouping function.
///
/// `continuity` is a bounded-oscillation proxy between adjacent grid
/// nodes; it certifies, it does not prove.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ConnectiveAxiomReport {
    pub symmetry: AxiomCheck,
    pub zero_boundary: AxiomCheck,
    pub one_boundary: AxiomCheck,
    pub monotone: AxiomCheck,
    pub continuity: AxiomCheck,
    pub exchange: AxiomCheck,
    /// Sampled `O(1, x) = x` (resp. `G(0, x) = x`).
    pub has_identity: bool,
}

impl ConnectiveAxiomReport {
    /// The five defining axioms (symmetry, boundaries, monotonicity,
    /// continuity) — everything except the optional exchange principle.
    pub fn core_axioms_hold(&self) -> bool {
        self.symmetry.holds
            && self.zero_boundary.holds
            && self.one_boundary.holds
            && self.monotone.holds
            && self.continuity.holds
    }
}

enum Kind<'a> {
    Overlap(&'a Overlap),
    Grouping(&'a Grouping),
}

impl Kind<'_> {
    fn eval(&self, x: f64, y: f64) -> f64 {
        match self {
            Kind::Overlap(o) => o.eval(x, y),
            Kind::Grouping(g) => g.eval(x, y),
        }
    }

    fn lipschitz_hint(&self) -> f64 {
        match self {
            Kind::Overlap(o) => o.lipschitz_hint(),
            Kind::Grouping(g) => g.lipschitz_hint(),
        }
    }
}

fn certify(kind: Kind<'_>, grid_density: usize, random_samples: usize, seed: u64) -> ConnectiveAxiomReport {
    let tol = AXIOM_TOL;
    let is_overlap = matches!(kind, Kind::Overlap(_));
    let d = grid_density.max(2);
    let grid = sample::unit_grid(d, 0, seed, "axiom-grid");
    let pts = sample::unit_grid(d, random_samples, seed, "axiom-points");

    let mut symmetry = AxiomCheck::passing();
    let mut zero_boundary = AxiomCheck::passing();
    let mut one_boundary = AxiomCheck::passing();
    let mut monotone = AxiomCheck::passing();
    let mut continuity = AxiomCheck::passing();
    let mut exchange = AxiomCheck::passing();

    for &x in &pts {
        for &y in &pts {
            let v = kind.eval(x, y);
            let w = kind.eval(y, x);
            symmetry.record((v - w).abs(), tol, &[x, y], v, w);

            if is_overlap {
                // O2: zero exactly on the axes, positive elsewhere.
                if x == 0.0 || y == 0.0 {
                    zero_boundary.record(v, tol, &[x, y], v, 0.0);
                } else if v <= 0.0 {
                    zero_boundary.record(1.0, tol, &[x, y], v, 0.0);
                }
                // O3: one exactly at (1,1), below elsewhere.
                if x == 1.0 && y == 1.0 {
                    one_boundary.record(1.0 - v, tol, &[x, y], v, 1.0);
                } else if v >= 1.0 {
                    one_boundary.record(1.0, tol, &[x, y], v, 1.0);
                }
            } else {
                // G2: zero exactly at (0,0), positive elsewhere.
                if x == 0.0 && y == 0.0 {
                    zero_boundary.record(v, tol, &[x, y], v, 0.0);
                } else if v <= 0.0 {
                    zero_boundary.record(1.0, tol, &[x, y], v, 0.0);
                }
                // G3: one exactly on the lines x=1 or y=1.
                if x == 1.0 || y == 1.0 {
                    one_boundary.record(1.0 - v, tol, &[x, y], v, 1.0);
                } else if v >= 1.0 {
                    one_boundary.record(1.0, tol, &[x, y], v, 1.0);
                }
            }
        }
    }

    // Monotonicity along grid axes plus sampled ordered pairs.
    for i in 0..grid.len() - 1 {
        for &y in &grid {
            let a = kind.eval(grid[i], y);
            let b = kind.eval(grid[i + 1], y);
            monotone.record(a - b, tol, &[grid[i], grid[i + 1], y], a, b);
            let step = grid[i + 1] - grid[i];
            let bound = kind.lipschitz_hint() * step + tol;
            continuity.record((b - a).abs() - bound, tol, &[grid[i], grid[i + 1], y], a, b);
        }
    }
    let mut rng = sample::stream(seed, "axiom-ordered-pairs", 1);
    for _ in 0..random_samples {
        let (a, b) = (sample::unit(&mut rng), sample::unit(&mut rng));
        let (x0, x1) = if a <= b { (a, b) } else { (b, a) };
        let y = sample::unit(&mut rng);
        let lo = kind.eval(x0, y);
        let hi = kind.eval(x1, y);
        monotone.record(lo - hi, tol, &[x0, x1, y], lo, hi);
    }

    // Exchange principle on a coarse triple grid plus sampled triples.
    let tri = sample::unit_grid(d.min(9), 0, seed, "axiom-triples");
    for &x in &tri {
        for &y in &tri {
            for &u in &tri {
                let a = kind.eval(x, kind.eval(y, u));
                let b = kind.eval(y, kind.eval(x, u));
                exchange.record((a - b).abs(), tol, &[x, y, u], a, b);
            }
        }
    }
    let mut rng = sample::stream(seed, "axiom-random-triples", 2);
    for _ in 0..random_samples {
        let (x, y, u) = (
            sample::unit(&mut rng),
            sample::unit(&mut rng),
            sample::unit(&mut rng),
        );
        let a = kind.eval(x, kind.eval(y, u));
        let b = kind.eval(y, kind.eval(x, u));
        exchange.record((a - b).abs(), tol, &[x, y, u], a, b);
    }

    let mut has_identity = true;
    for &x in &pts {
        let v = if is_overlap {
            kind.eval(1.0, x)
        } else {
            kind.eval(0.0, x)
        };
        if (v - x).abs() > tol {
            has_identity = false;
            break;
        }
    }

    ConnectiveAxiomReport {
        symmetry,
        zero_boundary,
        one_boundary,
        monotone,
        continuity,
        exchange,
        has_identity,
    }
}

/// Sampled certification of O1–O6 plus the identity-element probe.
pub fn certify_overlap(
    o: &Overlap,
    grid_density: usize,
    random_samples: usize,
    seed: u64,
) -> ConnectiveAxiomReport {
    certify(Kind::Overlap(o), grid_density, random_samples, seed)
}

/// Sampled certification of G1–G6 plus the identity-element probe.
pub fn certify_grouping(
    g: &Grouping,
    grid_density: usize,
    random_samples: usize,
    seed: u64,
) -> ConnectiveAxiomReport {
    certify(Kind::Grouping(g), grid_density, random_samples, seed)
}

/// Per-axiom verdicts for a fuzzy negation.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct NegationReport {
    pub strictly_decreasing: AxiomCheck,
    pub boundary: AxiomCheck,
    pub involutive: AxiomCheck,
}

pub fn certify_negation(
    n: Negation,
    grid_density: usize,
    random_samples: usize,
    seed: u64,
) -> NegationReport {
    let tol = AXIOM_TOL;
    let pts = sample::unit_grid(grid_density.max(2), random_samples, seed, "negation");
    let mut sorted = pts.clone();
    sorted.sort_by(f64::total_cmp);
    sorted.dedup();

    let mut strictly_decreasing = AxiomCheck::passing();
    for w in sorted.windows(2) {
        let (a, b) = (n.eval(w[0]), n.eval(w[1]));
        // strict: N must drop across any strictly increasing pair
        if b >= a {
            strictly_decreasing.record(b - a + 1e-15, tol, &[w[0], w[1]], a, b);
        }
    }

    let mut boundary = AxiomCheck::passing();
    boundary.record((n.eval(0.0) - 1.0).abs(), tol, &[0.0], n.eval(0.0), 1.0);
    boundary.record(n.eval(1.0).abs(), tol, &[1.0], n.eval(1.0), 0.0);

    let mut involutive = AxiomCheck::passing();
    for &x in &pts {
        let v = n.eval(n.eval(x));
        involutive.record((v - x).abs(), tol, &[x], v, x);
    }

    NegationReport {
        strictly_decreasing,
        boundary,
        involutive,
    }
}

/// Sampled identity-element certificate for an overlap (`O(1,x) = x`).
pub fn has_identity_one(o: &Overlap) -> bool {
    sample::unit_grid(33, 0, 7, "ident")
        .iter()
        .all(|&x| (o.eval(1.0, x) - x).abs() <= AXIOM_TOL)
}

/// Sampled identity-element certificate for a grouping (`G(0,x) = x`).
pub fn has_identity_zero(g: &Grouping) -> bool {
    sample::unit_grid(33, 0, 7, "ident")
        .iter()
        .all(|&x| (g.eval(0.0, x) - x).abs() <= AXIOM_TOL)
}

/// Sampled certificate that `O(1, x) >= x` — the unit row dominates the
/// identity map. Holds for every overlap with identity element 1 and also
/// for the harmonic overlap.
pub fn unit_row_above_identity(o: &Overlap) -> bool {
    sample::unit_grid(33, 0, 7, "unit-row")
        .iter()
        .all(|&x| o.eval(1.0, x) >= x - AXIOM_TOL)
}

/// Sampled certificate that `G(0, x) <= x` — the zero row sits below the
/// identity map; dual of [`unit_row_above_identity`].
pub fn zero_row_below_identity(g: &Grouping) -> bool {
    sample::unit_grid(33, 0, 7, "zero-row")
        .iter()
        .all(|&x| g.eval(0.0, x) <= x + AXIOM_TOL)
}

/// Sampled exchange-principle certificate (associativity for commutative
/// connectives).
pub fn satisfies_exchange_overlap(o: &Overlap) -> bool {
    let pts = sample::unit_grid(7, 30, 11, "exchange");
    pts.iter().all(|&x| {
        pts.iter().all(|&y| {
            pts.iter().all(|&u| {
                (o.eval(x, o.eval(y, u)) - o.eval(y, o.eval(x, u))).abs() <= AXIOM_TOL
            })
        })
    })
}

pub fn satisfies_exchange_grouping(g: &Grouping) -> bool {
    let pts = sample::unit_grid(7, 30, 11, "exchange");
    pts.iter().all(|&x| {
        pts.iter().all(|&y| {
            pts.iter().all(|&u| {
                (g.eval(x, g.eval(y, u)) - g.eval(y, g.eval(x, u))).abs() <= AXIOM_TOL
            })
        })
    })
}

/// Sampled certificate that `g` is the N-dual of `o` within `tol`.
pub fn certify_dual_pair(o: &Overlap, g: &Grouping, n: Negation, tol: f64) -> Result<(), f64> {
    if !n.is_involutive() {
        return Err(f64::INFINITY);
    }
    let pts = sample::unit_grid(21, 40, 13, "dual-pair");
    let mut worst = 0.0f64;
    for &x in &pts {
        for &y in &pts {
            let lhs = g.eval(x, y);
            let rhs = n.eval(o.eval(n.eval(x), n.eval(y)));
            worst = worst.max((lhs - rhs).abs());
        }
    }
    if worst <= tol {
        Ok(())
    } else {
        Err(worst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    #[test]
    fn builtin_evaluations() {
        let op2 = Overlap::power(2.0).unwrap();
        assert!(close(op2.eval(0.5, 0.5), 0.0625));
        assert_eq!(Overlap::Harmonic.eval(0.0, 0.0), 0.0);
        assert!(close(Overlap::Harmonic.eval(0.4, 0.2), 2.0 * 0.4 * 0.2 / 0.6));
        let gp2 = Grouping::power(2.0).unwrap();
        assert_eq!(gp2.eval(1.0, 0.3), 1.0);
        assert!(close(gp2.eval(0.5, 0.5), 0.9375));
    }

    #[test]
    fn parameter_guards() {
        assert!(Overlap::power(1.0).is_err());
        assert!(Overlap::power(0.0).is_err());
        assert!(Overlap::power(-2.0).is_err());
        assert!(Grouping::power(1.0).is_err());
        assert!(Grouping::power(0.5).is_err());
    }

    #[test]
    fn eval_checked_rejects_out_of_domain() {
        let e = Overlap::Product.eval_checked(1.2, 0.5).unwrap_err();
        assert_eq!(e, ConnectiveError::OutOfDomain { value: 1.2 });
    }

    #[test]
    fn closed_form_implications() {
        let prod = OverlapResidual::closed_form(Overlap::Product).unwrap();
        assert!(close(prod.implication(0.6, 0.1), 1.0 / 6.0));
        assert_eq!(prod.implication(0.0, 0.3), 1.0);

        let harm = OverlapResidual::closed_form(Overlap::Harmonic).unwrap();
        assert!(close(harm.implication(0.4, 0.2), 2.0 / 15.0));
        assert_eq!(harm.implication(0.0, 0.0), 1.0);
        assert_eq!(harm.implication(0.4, 0.9), 1.0);

        let godel = OverlapResidual::closed_form(Overlap::Minimum).unwrap();
        assert_eq!(godel.implication(0.3, 0.7), 1.0);
        assert!(close(godel.implication(0.7, 0.3), 0.3));
    }

    #[test]
    fn closed_form_coimplications() {
        let gmax = GroupingResidual::closed_form(Grouping::Maximum).unwrap();
        assert!(close(gmax.coimplication(0.3, 0.8), 0.8));
        assert_eq!(gmax.coimplication(0.9, 0.2), 0.0);

        let psum = GroupingResidual::closed_form(Grouping::ProbabilisticSum).unwrap();
        assert!(close(psum.coimplication(0.0, 0.7), 0.7));
        assert_eq!(psum.coimplication(1.0, 1.0), 0.0);
        assert!(close(psum.coimplication(0.4, 0.8), (0.8 - 0.4) / 0.6));
    }

    #[test]
    fn bisection_matches_power_closed_form() {
        let closed = OverlapResidual::closed_form(Overlap::power(2.0).unwrap()).unwrap();
        let bisect = OverlapResidual::bisection(Overlap::power(2.0).unwrap(), 1e-12);
        let v = bisect.implication(0.5, 0.04);
        assert!((v - 0.4).abs() < 1e-10);
        assert!((closed.implication(0.5, 0.04) - 0.4).abs() < 1e-12);
    }

    #[test]
    fn gn_implication_examples() {
        assert!(close(
            gn_implication(&Grouping::Maximum, Negation::Standard, 1.0, 0.4),
            0.4
        ));
        assert_eq!(
            gn_implication(&Grouping::ProbabilisticSum, Negation::Standard, 0.0, 0.0),
            1.0
        );
        let gp2 = Grouping::power(2.0).unwrap();
        assert!(close(
            gn_implication(&gp2, Negation::Standard, 0.5, 0.5),
            0.9375
        ));
    }

    #[test]
    fn duals_are_recognised_and_pointwise_exact() {
        let g = dual_grouping_of(&Overlap::Product, Negation::Standard).unwrap();
        assert_eq!(g, Grouping::ProbabilisticSum);
        let g = dual_grouping_of(&Overlap::Minimum, Negation::Standard).unwrap();
        assert_eq!(g, Grouping::Maximum);

        // O_p(2) dualises to G_p(2) on a grid
        let g = dual_grouping_of(&Overlap::power(2.0).unwrap(), Negation::Standard).unwrap();
        assert_eq!(g, Grouping::Power { p: 2.0 });
        let gp2 = Grouping::power(2.0).unwrap();
        for i in 0..=100 {
            for j in 0..=100 {
                let (x, y) = (i as f64 / 100.0, j as f64 / 100.0);
                let o2 = Overlap::Power { p: 2.0 };
                let dual = 1.0 - o2.eval(1.0 - x, 1.0 - y);
                assert!((gp2.eval(x, y) - dual).abs() < 1e-12);
            }
        }

        let err = dual_grouping_of(&Overlap::Product, Negation::SquareComplement).unwrap_err();
        assert_eq!(err, ConnectiveError::NonInvolutiveNegation);
    }

    #[test]
    fn product_passes_all_axioms() {
        let rep = certify_overlap(&Overlap::Product, 21, 200, 7);
        assert!(rep.core_axioms_hold());
        assert!(rep.exchange.holds);
        assert!(rep.has_identity);
    }

    #[test]
    fn power_overlap_fails_exchange_with_witness() {
        let rep = certify_overlap(&Overlap::power(2.0).unwrap(), 21, 200, 7);
        assert!(rep.core_axioms_hold());
        assert!(!rep.exchange.holds);
        assert!(!rep.has_identity);
        assert!(rep.exchange.witness.is_some());
        // the known violating triple
        let o = Overlap::power(2.0).unwrap();
        let lhs = o.eval(0.5, o.eval(0.9, 0.8));
        let rhs = o.eval(0.9, o.eval(0.5, 0.8));
        assert!((lhs - 0.06718464).abs() < 1e-12);
        assert!((rhs - 0.020736).abs() < 1e-12);
    }

    #[test]
    fn harmonic_overlap_fails_exchange() {
        let rep = certify_overlap(&Overlap::Harmonic, 21, 200, 7);
        assert!(rep.core_axioms_hold());
        assert!(!rep.exchange.holds);
        assert!(!rep.has_identity);
    }

    #[test]
    fn groupings_certify_as_expected() {
        for g in [Grouping::Maximum, Grouping::ProbabilisticSum] {
            let rep = certify_grouping(&g, 21, 200, 7);
            assert!(rep.core_axioms_hold());
            assert!(rep.exchange.holds);
            assert!(rep.has_identity);
        }
        let rep = certify_grouping(&Grouping::power(2.0).unwrap(), 21, 200, 7);
        assert!(rep.core_axioms_hold());
        assert!(!rep.exchange.holds);
        assert!(!rep.has_identity);
    }

    #[test]
    fn negation_certificates() {
        let rep = certify_negation(Negation::Standard, 21, 100, 7);
        assert!(rep.strictly_decreasing.holds && rep.boundary.holds && rep.involutive.holds);
        let rep = certify_negation(Negation::SquareComplement, 21, 100, 7);
        assert!(rep.strictly_decreasing.holds && rep.boundary.holds);
        assert!(!rep.involutive.holds);
    }

    #[test]
    fn tabulated_connective_interpolates_and_bisects() {
        // tabulate the product on an 11x11 grid; exact at nodes, bilinear
        // in between, residual via bisection
        let rows: Vec<Vec<f64>> = (0..=10)
            .map(|i| (0..=10).map(|j| (i as f64 / 10.0) * (j as f64 / 10.0)).collect())
            .collect();
        let t = BilinearTable::new(&rows).unwrap();
        let o = Overlap::Table(t);
        assert!(close(o.eval(0.3, 0.7), 0.21)); // product is bilinear per cell
        assert!(!o.has_closed_residual());
        let pair = OverlapResidual::auto(o);
        assert!(matches!(pair.mode, ResidualMode::Bisection { .. }));
        assert!((pair.implication(0.6, 0.1) - 1.0 / 6.0).abs() < 1e-10);

        assert!(BilinearTable::new(&[vec![0.0]]).is_err());
        assert!(BilinearTable::new(&[vec![0.0, 2.0], vec![0.0, 1.0]]).is_err());
    }

    #[test]
    fn dual_pair_certificate() {
        assert!(certify_dual_pair(
            &Overlap::Product,
            &Grouping::ProbabilisticSum,
            Negation::Standard,
            1e-9
        )
        .is_ok());
        assert!(certify_dual_pair(
            &Overlap::Product,
            &Grouping::Maximum,
            Negation::Standard,
            1e-9
        )
        .is_err());
    }
}
