//! Selection-vs-enumeration benchmark.
//!
//! The selection method runs at every requested size; the brute-force
//! enumeration only up to `--include-oracle-up-to`, refusing bounds above
//! 20 (subset enumeration is past binomial blow-up there). Where both
//! ran, their results are compared and the per-point discrepancy is
//! reported (and required to stay below 1e-9).

use std::time::Instant;

use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;
use serde_json::{json, Value};

use gvpfrs_core::connectives::{Grouping, GroupingResidual, Negation, Overlap, OverlapResidual};
use gvpfrs_core::engine::{approximate, bruteforce_lower, bruteforce_upper};
use gvpfrs_core::laws::gen;

use crate::CliError;

/// Enumerating subsets of a 20-element universe is the documented wall.
const ORACLE_WALL: usize = 20;

fn bench_rng(seed: u64, n: usize) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&(n as u64).to_le_bytes());
    key[16..21].copy_from_slice(b"bench");
    ChaCha8Rng::from_seed(key)
}

pub fn run(
    sizes: &str,
    beta: f64,
    reps: u32,
    seed: u64,
    include_oracle_up_to: usize,
) -> Result<(), CliError> {
    if include_oracle_up_to > ORACLE_WALL {
        return Err(CliError::premise(format!(
            "--include-oracle-up-to {include_oracle_up_to} exceeds the enumeration wall of {ORACLE_WALL} \
             (every subset of more than {ORACLE_WALL} elements would be enumerated per anchor)"
        )));
    }
    if reps == 0 {
        return Err(CliError::validation("--reps must be at least 1"));
    }
    if beta.is_nan() || !(0.0..=1.0).contains(&beta) {
        return Err(CliError::validation(format!("--beta {beta} outside [0,1]")));
    }
    let mut parsed_sizes = Vec::new();
    for tok in sizes.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let n: usize = tok
            .parse()
            .map_err(|_| CliError::validation(format!("--sizes entry {tok:?} is not an integer")))?;
        if n < 2 {
            return Err(CliError::validation(format!(
                "--sizes entry {n} must be at least 2"
            )));
        }
        parsed_sizes.push(n);
    }
    if parsed_sizes.is_empty() {
        return Err(CliError::validation("--sizes must name at least one size"));
    }

    let opair = OverlapResidual::auto(Overlap::Product);
    let gpair = GroupingResidual::auto(Grouping::ProbabilisticSum);
    let neg = Negation::Standard;

    let mut records = Vec::new();
    for &n in &parsed_sizes {
        let mut rng = bench_rng(seed, n);
        let r = gen::relation(&mut rng, n);
        let a = gen::fuzzy_set(&mut rng, n);

        let t0 = Instant::now();
        let mut result = None;
        for _ in 0..reps {
            result = Some(
                approximate(&r, &opair, &gpair, neg, &a, beta)
                    .map_err(|e| CliError::validation(e.to_string()))?,
            );
        }
        let selection_secs = t0.elapsed().as_secs_f64();
        let result = result.expect("reps >= 1");
        records.push(json!({
            "n": n,
            "method": "selection",
            "beta": beta,
            "reps": reps,
            "wall_seconds_total": selection_secs,
            "wall_seconds_per_rep": selection_secs / f64::from(reps),
        }));

        if n <= include_oracle_up_to {
            let t1 = Instant::now();
            let blo = bruteforce_lower(&r, &opair, &a, beta, include_oracle_up_to)
                .map_err(|e| CliError::premise(e.to_string()))?;
            let bup = bruteforce_upper(&r, &gpair, neg, &a, beta, include_oracle_up_to)
                .map_err(|e| CliError::premise(e.to_string()))?;
            let oracle_secs = t1.elapsed().as_secs_f64();
            let discrepancy = result
                .lower
                .max_abs_diff(&blo)
                .max(result.upper.max_abs_diff(&bup));
            if discrepancy > 1e-9 {
                return Err(CliError::validation(format!(
                    "selection and brute force disagree at n = {n}: max discrepancy {discrepancy:e}"
                )));
            }
            records.push(json!({
                "n": n,
                "method": "bruteforce",
                "beta": beta,
                "reps": 1,
                "wall_seconds_total": oracle_secs,
                "wall_seconds_per_rep": oracle_secs,
                "max_discrepancy": discrepancy,
            }));
        }
    }

    println!(
        "{}",
        serde_json::to_string_pretty(&Value::Array(records)).expect("serializable records")
    );
    Ok(())
}
