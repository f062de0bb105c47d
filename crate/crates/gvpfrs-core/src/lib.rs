//! Granular variable precision fuzzy rough sets over overlap and grouping
//! functions.
//!
//! The crate is organised in four layers:
//!
//! * [`connectives`] — overlap functions, grouping functions, fuzzy
//!   negations, their residual implication/co-implication operators, and
//!   sampled axiom certification.
//! * [`fuzzy`] — finite-universe fuzzy sets and relations, relation
//!   property checks, fuzzy granules, and transitive closure.
//! * [`engine`] — the variable precision lower/upper approximation
//!   operators, both in the efficient order-statistic form and as a
//!   brute-force enumeration oracle, plus the crisp degenerations.
//! * [`laws`] — a registry of the algebraic laws the operators satisfy,
//!   runnable as randomized, premise-guarded property checks.
//!
//! The core is `no_std` (with `alloc`); all IO, file formats and the CLI
//! live in the companion `gvpfrs-cli` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod connectives;
pub mod engine;
pub mod fuzzy;
pub mod laws;

pub(crate) mod sample;
