//! The law suite: the algebraic identities the approximation operators
//! satisfy, registered as named, premise-guarded, randomized property
//! checks.
//!
//! A law is only evaluated on instances satisfying all of its premises
//! (reflexivity, O-transitivity, exchange principle, identity elements,
//! duality, β ranges); premise-violating instances are counted separately
//! and never as failures. Instance generators construct premises rather
//! than reject (see [`gen`]). Trials derive their random streams from
//! `(seed, law id, trial index)`, so a run is deterministic regardless of
//! execution order.

pub mod gen;

mod catalogue;

use alloc::format;
use alloc::vec;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use rand_chacha::ChaCha8Rng;

use crate::connectives::{
    certify_dual_pair, dual_grouping_of, dual_overlap_of, has_identity_one, has_identity_zero,
    satisfies_exchange_grouping, satisfies_exchange_overlap, Grouping, GroupingResidual, Negation,
    Overlap, OverlapResidual,
};
use crate::fuzzy::FuzzySet;
use crate::sample;

/// Default comparison tolerance for law checks.
pub const LAW_TOL: f64 = 1e-9;

/// How many serialized counterexamples a report keeps per law.
const MAX_COUNTEREXAMPLES: usize = 3;

// ---------------------------------------------------------------------------
// Configuration and report types
// ---------------------------------------------------------------------------

/// Shared configuration for a law run. `overlap`/`grouping`/`beta`
/// override the per-law generator defaults; laws whose premises the
/// override cannot satisfy report `Inconclusive`.
#[derive(Debug, Clone)]
pub struct LawConfig {
    pub trials: u32,
    pub seed: u64,
    pub max_universe: usize,
    pub tolerance: f64,
    pub overlap: Option<Overlap>,
    pub grouping: Option<Grouping>,
    pub negation: Negation,
    pub beta: Option<f64>,
}

impl Default for LawConfig {
    fn default() -> Self {
        LawConfig {
            trials: 200,
            seed: 42,
            max_universe: 8,
            tolerance: LAW_TOL,
            overlap: None,
            grouping: None,
            negation: Negation::Standard,
            beta: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LawStatus {
    Pass,
    Fail,
    /// No premise-satisfying instance was generated; not a pass.
    Inconclusive,
}

/// Per-law aggregate over all trials.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct LawOutcome {
    pub id: String,
    pub anchor: String,
    pub trials: u32,
    pub premise_satisfied: u32,
    pub passes: u32,
    pub failures: u32,
    pub max_violation: f64,
    pub status: LawStatus,
    pub counterexamples: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LawError {
    UnknownLaw {
        id: String,
        suggestion: Option<String>,
    },
    InvalidTrials,
    InvalidMaxUniverse {
        got: usize,
    },
    InvalidBeta {
        got: f64,
    },
}

impl fmt::Display for LawError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LawError::UnknownLaw { id, suggestion } => {
                write!(f, "unknown law id {id:?}")?;
                if let Some(s) = suggestion {
                    write!(f, " (did you mean {s:?}?)")?;
                }
                Ok(())
            }
            LawError::InvalidTrials => write!(f, "trials must be at least 1"),
            LawError::InvalidMaxUniverse { got } => {
                write!(f, "max universe {got} outside 2..=64")
            }
            LawError::InvalidBeta { got } => write!(f, "beta override {got} outside [0,1]"),
        }
    }
}

// ---------------------------------------------------------------------------
// Trial plumbing
// ---------------------------------------------------------------------------

/// Accumulates the comparisons of one premise-satisfying trial.
pub(crate) struct Checks {
    tol: f64,
    info: String,
    worst: f64,
    breach: Option<String>,
}

impl Checks {
    pub(crate) fn new(tol: f64, info: String) -> Self {
        Checks {
            tol,
            info,
            worst: 0.0,
            breach: None,
        }
    }

    fn note(&mut self, violation: f64, detail: impl Fn() -> String) {
        if violation > self.worst {
            self.worst = violation;
        }
        if violation > self.tol && self.breach.is_none() {
            self.breach = Some(format!("{}; {}", self.info, detail()));
        }
    }

    pub(crate) fn le(&mut self, lhs: f64, rhs: f64, label: &str) {
        self.note(lhs - rhs, || format!("{label}: {lhs:.17} <= {rhs:.17} fails"));
    }

    pub(crate) fn eq(&mut self, lhs: f64, rhs: f64, label: &str) {
        self.note((lhs - rhs).abs(), || {
            format!("{label}: {lhs:.17} != {rhs:.17}")
        });
    }

    pub(crate) fn set_le(&mut self, a: &FuzzySet, b: &FuzzySet, label: &str) {
        self.note(a.containment_violation(b), || {
            format!("{label}: {:?} not below {:?}", a.values(), b.values())
        });
    }

    pub(crate) fn set_eq(&mut self, a: &FuzzySet, b: &FuzzySet, label: &str) {
        self.note(a.max_abs_diff(b), || {
            format!("{label}: {:?} != {:?}", a.values(), b.values())
        });
    }

    pub(crate) fn require(&mut self, ok: bool, label: &str) {
        self.note(if ok { 0.0 } else { 1.0 }, || format!("{label} violated"));
    }

    pub(crate) fn agree(&mut self, a: bool, b: bool, label: &str) {
        self.note(if a == b { 0.0 } else { 1.0 }, || {
            format!("{label}: {a} vs {b}")
        });
    }
}

pub(crate) enum TrialResult {
    PremiseUnmet,
    Checked(Checks),
}

/// Capabilities of an override connective, certified once per run.
#[derive(Clone, Copy)]
struct Caps {
    exchange: bool,
    identity: bool,
}

/// Per-run resolved context shared by all trials.
pub(crate) struct Ctx<'a> {
    cfg: &'a LawConfig,
    o_caps: Option<Caps>,
    g_caps: Option<Caps>,
    override_dual: Option<bool>,
}

impl<'a> Ctx<'a> {
    fn new(cfg: &'a LawConfig) -> Self {
        let o_caps = cfg.overlap.as_ref().map(|o| Caps {
            exchange: satisfies_exchange_overlap(o),
            identity: has_identity_one(o),
        });
        let g_caps = cfg.grouping.as_ref().map(|g| Caps {
            exchange: satisfies_exchange_grouping(g),
            identity: has_identity_zero(g),
        });
        let override_dual = match (&cfg.overlap, &cfg.grouping) {
            (Some(o), Some(g)) => Some(certify_dual_pair(o, g, cfg.negation, 1e-9).is_ok()),
            _ => None,
        };
        Ctx {
            cfg,
            o_caps,
            g_caps,
            override_dual,
        }
    }

    pub(crate) fn tolerance(&self) -> f64 {
        self.cfg.tolerance
    }

    /// True when no connective/β override is active; fixture trials that
    /// hard-code their own instances only run in this mode.
    pub(crate) fn cfg_defaults(&self) -> bool {
        self.cfg.overlap.is_none() && self.cfg.grouping.is_none() && self.cfg.beta.is_none()
    }

    pub(crate) fn max_universe(&self) -> usize {
        self.cfg.max_universe
    }

    pub(crate) fn negation(&self) -> Negation {
        self.cfg.negation
    }

    pub(crate) fn involutive_negation(&self) -> Option<Negation> {
        self.cfg.negation.is_involutive().then_some(self.cfg.negation)
    }

    pub(crate) fn beta(&self, rng: &mut ChaCha8Rng) -> f64 {
        self.cfg.beta.unwrap_or_else(|| gen::beta(rng))
    }

    pub(crate) fn beta_above_half(&self, rng: &mut ChaCha8Rng) -> Option<f64> {
        match self.cfg.beta {
            Some(b) if b > 0.5 => Some(b),
            Some(_) => None,
            None => Some(gen::beta_above_half(rng)),
        }
    }

    /// Any built-in overlap (or the override).
    pub(crate) fn any_overlap(&self, rng: &mut ChaCha8Rng) -> Overlap {
        if let Some(o) = &self.cfg.overlap {
            return o.clone();
        }
        match sample::index(rng, 4) {
            0 => Overlap::Product,
            1 => Overlap::Minimum,
            2 => Overlap::Power { p: 2.0 },
            _ => Overlap::Harmonic,
        }
    }

    /// An overlap satisfying the exchange principle (hence with identity 1).
    pub(crate) fn assoc_overlap(&self, rng: &mut ChaCha8Rng) -> Option<Overlap> {
        match (&self.cfg.overlap, self.o_caps) {
            (Some(o), Some(c)) => c.exchange.then(|| o.clone()),
            _ => Some(if sample::index(rng, 2) == 0 {
                Overlap::Product
            } else {
                Overlap::Minimum
            }),
        }
    }

    /// An overlap with identity element 1.
    pub(crate) fn identity_overlap(&self, rng: &mut ChaCha8Rng) -> Option<Overlap> {
        match (&self.cfg.overlap, self.o_caps) {
            (Some(o), Some(c)) => c.identity.then(|| o.clone()),
            _ => Some(if sample::index(rng, 2) == 0 {
                Overlap::Product
            } else {
                Overlap::Minimum
            }),
        }
    }

    /// Any built-in grouping (or the override).
    pub(crate) fn any_grouping(&self, rng: &mut ChaCha8Rng) -> Grouping {
        if let Some(g) = &self.cfg.grouping {
            return g.clone();
        }
        match sample::index(rng, 4) {
            0 => Grouping::ProbabilisticSum,
            1 => Grouping::Maximum,
            2 => Grouping::Power { p: 2.0 },
            _ => Grouping::Dual {
                overlap: alloc::boxed::Box::new(Overlap::Harmonic),
                negation: Negation::Standard,
            },
        }
    }

    pub(crate) fn assoc_grouping(&self, rng: &mut ChaCha8Rng) -> Option<Grouping> {
        match (&self.cfg.grouping, self.g_caps) {
            (Some(g), Some(c)) => c.exchange.then(|| g.clone()),
            _ => Some(if sample::index(rng, 2) == 0 {
                Grouping::ProbabilisticSum
            } else {
                Grouping::Maximum
            }),
        }
    }

    pub(crate) fn identity_grouping(&self, rng: &mut ChaCha8Rng) -> Option<Grouping> {
        match (&self.cfg.grouping, self.g_caps) {
            (Some(g), Some(c)) => c.identity.then(|| g.clone()),
            _ => Some(if sample::index(rng, 2) == 0 {
                Grouping::ProbabilisticSum
            } else {
                Grouping::Maximum
            }),
        }
    }

    /// An N-dual `(O, G)` pair.
    pub(crate) fn dual_pair(&self, rng: &mut ChaCha8Rng) -> Option<(Overlap, Grouping)> {
        let neg = self.involutive_negation()?;
        match (&self.cfg.overlap, &self.cfg.grouping) {
            (Some(o), Some(g)) => self
                .override_dual
                .unwrap_or(false)
                .then(|| (o.clone(), g.clone())),
            (Some(o), None) => Some((o.clone(), dual_grouping_of(o, neg).ok()?)),
            (None, Some(g)) => Some((dual_overlap_of(g, neg).ok()?, g.clone())),
            (None, None) => Some(match sample::index(rng, 4) {
                0 => (Overlap::Product, Grouping::ProbabilisticSum),
                1 => (Overlap::Minimum, Grouping::Maximum),
                2 => (Overlap::Power { p: 2.0 }, Grouping::Power { p: 2.0 }),
                _ => (
                    Overlap::Harmonic,
                    dual_grouping_of(&Overlap::Harmonic, neg).expect("standard negation"),
                ),
            }),
        }
    }

    /// An N-dual pair that also satisfies the exchange principle.
    pub(crate) fn assoc_dual_pair(&self, rng: &mut ChaCha8Rng) -> Option<(Overlap, Grouping)> {
        match (&self.cfg.overlap, &self.cfg.grouping) {
            (None, None) => {
                let _ = self.involutive_negation()?;
                Some(if sample::index(rng, 2) == 0 {
                    (Overlap::Product, Grouping::ProbabilisticSum)
                } else {
                    (Overlap::Minimum, Grouping::Maximum)
                })
            }
            _ => {
                let (o, g) = self.dual_pair(rng)?;
                (satisfies_exchange_overlap(&o) && satisfies_exchange_grouping(&g))
                    .then_some((o, g))
            }
        }
    }
}

pub(crate) fn opair(o: Overlap) -> OverlapResidual {
    OverlapResidual::auto(o)
}

pub(crate) fn gpair(g: Grouping) -> GroupingResidual {
    GroupingResidual::auto(g)
}

// ---------------------------------------------------------------------------
// Registry and runner
// ---------------------------------------------------------------------------

pub(crate) struct LawDef {
    pub id: &'static str,
    pub anchor: &'static str,
    /// Fixed-fixture laws are deterministic; they run a single trial.
    pub fixed: bool,
    pub runner: fn(&Ctx<'_>, &mut ChaCha8Rng, u32) -> TrialResult,
}

/// All registered law ids, in catalogue order.
pub fn law_ids() -> Vec<&'static str> {
    catalogue::CATALOGUE.iter().map(|l| l.id).collect()
}

/// The citation-style anchor attached to a law id, if registered.
pub fn law_anchor(id: &str) -> Option<&'static str> {
    catalogue::CATALOGUE
        .iter()
        .find(|l| l.id == id)
        .map(|l| l.anchor)
}

fn edit_distance(a: &str, b: &str) -> usize {
    let (a, b): (Vec<char>, Vec<char>) = (a.chars().collect(), b.chars().collect());
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0usize; b.len() + 1];
    for i in 1..=a.len() {
        cur[0] = i;
        for j in 1..=b.len() {
            let sub = usize::from(a[i - 1] != b[j - 1]);
            cur[j] = (prev[j] + 1).min(cur[j - 1] + 1).min(prev[j - 1] + sub);
        }
        core::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

fn nearest_law(id: &str) -> Option<String> {
    catalogue::CATALOGUE
        .iter()
        .map(|l| (edit_distance(id, l.id), l.id))
        .min_by_key(|(d, _)| *d)
        .map(|(_, id)| id.to_string())
}

fn validate(cfg: &LawConfig) -> Result<(), LawError> {
    if cfg.trials == 0 {
        return Err(LawError::InvalidTrials);
    }
    if !(2..=64).contains(&cfg.max_universe) {
        return Err(LawError::InvalidMaxUniverse {
            got: cfg.max_universe,
        });
    }
    if let Some(b) = cfg.beta {
        if b.is_nan() || !(0.0..=1.0).contains(&b) {
            return Err(LawError::InvalidBeta { got: b });
        }
    }
    Ok(())
}

/// Runs the named laws (see [`law_ids`]) under `cfg` and aggregates one
/// [`LawOutcome`] per law, in the order given.
pub fn run_laws(ids: &[&str], cfg: &LawConfig) -> Result<Vec<LawOutcome>, LawError> {
    validate(cfg)?;
    let mut defs = Vec::with_capacity(ids.len());
    for &id in ids {
        let def = catalogue::CATALOGUE
            .iter()
            .find(|l| l.id == id)
            .ok_or_else(|| LawError::UnknownLaw {
                id: id.to_string(),
                suggestion: nearest_law(id),
            })?;
        defs.push(def);
    }

    let ctx = Ctx::new(cfg);
    let mut out = Vec::with_capacity(defs.len());
    for def in defs {
        let trials = if def.fixed { 1 } else { cfg.trials };
        let mut outcome = LawOutcome {
            id: def.id.to_string(),
            anchor: def.anchor.to_string(),
            trials,
            premise_satisfied: 0,
            passes: 0,
            failures: 0,
            max_violation: 0.0,
            status: LawStatus::Inconclusive,
            counterexamples: Vec::new(),
        };
        for trial in 0..trials {
            let mut rng = sample::stream(cfg.seed, def.id, u64::from(trial));
            match (def.runner)(&ctx, &mut rng, trial) {
                TrialResult::PremiseUnmet => {}
                TrialResult::Checked(c) => {
                    outcome.premise_satisfied += 1;
                    if c.worst > outcome.max_violation {
                        outcome.max_violation = c.worst;
                    }
                    if c.worst <= cfg.tolerance {
                        outcome.passes += 1;
                    } else {
                        outcome.failures += 1;
                        if outcome.counterexamples.len() < MAX_COUNTEREXAMPLES {
                            if let Some(b) = c.breach {
                                outcome.counterexamples.push(b);
                            }
                        }
                    }
                }
            }
        }
        outcome.status = if outcome.failures > 0 {
            LawStatus::Fail
        } else if outcome.premise_satisfied == 0 {
            LawStatus::Inconclusive
        } else {
            LawStatus::Pass
        };
        out.push(outcome);
    }
    Ok(out)
}
