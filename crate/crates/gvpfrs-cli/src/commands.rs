//! The approximate, check-relation and laws subcommands.

use std::path::Path;

use serde_json::{json, Map, Value};

use gvpfrs_core::connectives::Negation;
use gvpfrs_core::engine::{
    approximate, bruteforce_lower, bruteforce_upper, ApproxSide, EngineError,
};
use gvpfrs_core::fuzzy::{check_relation as check_relation_core, FuzzySet, Universe};
use gvpfrs_core::laws::{law_ids, run_laws, LawConfig, LawError, LawStatus};

use crate::problem::{
    parse_problem, resolve_direct_overlap, ConnectiveSpec, Problem,
};
use crate::{CliError, Side};

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::validation(format!("{}: {e}", path.display())))
}

fn engine_error(e: EngineError) -> CliError {
    match e {
        EngineError::UniverseExceedsCap { .. }
        | EngineError::NotDual { .. }
        | EngineError::NonInvolutiveNegation => CliError::premise(e.to_string()),
        other => CliError::validation(other.to_string()),
    }
}

fn values_json(s: &FuzzySet) -> Value {
    Value::Array(s.values().iter().map(|&v| json!(v)).collect())
}

fn witnesses_json(universe: &Universe, witnesses: &[Vec<usize>]) -> Value {
    let mut map = Map::new();
    for (x, members) in witnesses.iter().enumerate() {
        map.insert(
            universe.label(x).to_string(),
            Value::Array(
                members
                    .iter()
                    .map(|&y| Value::String(universe.label(y).to_string()))
                    .collect(),
            ),
        );
    }
    Value::Object(map)
}

fn emit(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable output"));
}

pub fn approximate_problem(
    problem: &Problem,
    side: Side,
    oracle: bool,
) -> Result<Value, CliError> {
    let a = problem.the_set()?;
    let mut out = Map::new();

    let mut lower: Option<ApproxSide> = None;
    let mut upper: Option<ApproxSide> = None;
    if side != Side::Upper {
        let opair = problem.overlap_pair()?;
        lower = Some(
            gvpfrs_core::engine::lower_approx(&problem.relation, opair, a, problem.beta)
                .map_err(engine_error)?,
        );
    }
    if side != Side::Lower {
        let gpair = problem.grouping_pair()?;
        upper = Some(
            gvpfrs_core::engine::upper_approx(
                &problem.relation,
                gpair,
                problem.negation,
                a,
                problem.beta,
            )
            .map_err(engine_error)?,
        );
    }

    if let Some(lo) = &lower {
        out.insert("lower".into(), values_json(&lo.values));
    }
    if let Some(up) = &upper {
        out.insert("upper".into(), values_json(&up.values));
    }
    if let Some(lo) = &lower {
        out.insert("g".into(), values_json(&lo.levels));
    }
    if let Some(up) = &upper {
        out.insert("h".into(), values_json(&up.levels));
    }
    match (&lower, &upper) {
        (Some(lo), Some(up)) => {
            out.insert(
                "witnesses".into(),
                witnesses_json(&problem.universe, &lo.witnesses),
            );
            out.insert(
                "witnesses_upper".into(),
                witnesses_json(&problem.universe, &up.witnesses),
            );
        }
        (Some(lo), None) => {
            out.insert(
                "witnesses".into(),
                witnesses_json(&problem.universe, &lo.witnesses),
            );
        }
        (None, Some(up)) => {
            out.insert(
                "witnesses".into(),
                witnesses_json(&problem.universe, &up.witnesses),
            );
        }
        (None, None) => {}
    }
    out.insert("method".into(), json!("selection"));

    if oracle {
        let mut worst = 0.0f64;
        if let Some(lo) = &lower {
            let b = bruteforce_lower(
                &problem.relation,
                problem.overlap_pair()?,
                a,
                problem.beta,
                problem.oracle_cap,
            )
            .map_err(engine_error)?;
            worst = worst.max(lo.values.max_abs_diff(&b));
        }
        if let Some(up) = &upper {
            let b = bruteforce_upper(
                &problem.relation,
                problem.grouping_pair()?,
                problem.negation,
                a,
                problem.beta,
                problem.oracle_cap,
            )
            .map_err(engine_error)?;
            worst = worst.max(up.values.max_abs_diff(&b));
        }
        out.insert("max_discrepancy".into(), json!(worst));
    }

    Ok(Value::Object(out))
}

pub fn approximate(
    input: &Path,
    side: Side,
    oracle: bool,
    tolerance: Option<f64>,
) -> Result<(), CliError> {
    let mut problem = parse_problem(&read_file(input)?)?;
    if let Some(t) = tolerance {
        if !(t > 0.0) || t > 0.5 {
            return Err(CliError::validation(format!(
                "--tolerance {t} must lie in (0, 0.5]"
            )));
        }
        problem.tolerance = t;
        retune(&mut problem);
    }
    let out = approximate_problem(&problem, side, oracle)?;
    emit(&out);
    Ok(())
}

/// Re-applies the bisection tolerance to residuals lacking closed forms.
fn retune(problem: &mut Problem) {
    use gvpfrs_core::connectives::{GroupingResidual, OverlapResidual, ResidualMode};
    if let Some(op) = &mut problem.overlap {
        if let ResidualMode::Bisection { .. } = op.mode {
            *op = OverlapResidual::bisection(op.overlap.clone(), problem.tolerance);
        }
    }
    if let Some(gp) = &mut problem.grouping {
        if let ResidualMode::Bisection { .. } = gp.mode {
            *gp = GroupingResidual::bisection(gp.grouping.clone(), problem.tolerance);
        }
    }
}

pub fn check_relation(
    input: &Path,
    overlap_name: Option<&str>,
    p: Option<f64>,
    tolerance: f64,
) -> Result<(), CliError> {
    let problem = parse_problem(&read_file(input)?)?;
    let overlap = match overlap_name {
        Some(name) => resolve_direct_overlap(&ConnectiveSpec {
            name: name.to_string(),
            p,
            grid: None,
        })?,
        None => problem.overlap_pair()?.overlap.clone(),
    };
    let report = check_relation_core(&problem.relation, &overlap, tolerance);
    let label = |i: usize| problem.universe.label(i).to_string();
    let mut out = serde_json::to_value(&report).expect("serializable report");
    // index witnesses are easier to read as labels
    let obj = out.as_object_mut().expect("report is an object");
    obj.insert(
        "transitive_witness_labels".into(),
        match report.transitive_witness {
            Some((x, y, z)) => json!([label(x), label(y), label(z)]),
            None => Value::Null,
        },
    );
    obj.insert("overlap".into(), json!(overlap.to_string()));
    obj.insert("tolerance".into(), json!(tolerance));
    emit(&out);
    Ok(())
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct LawFileConfig {
    #[serde(default)]
    overlap: Option<ConnectiveSpec>,
    #[serde(default)]
    grouping: Option<ConnectiveSpec>,
    #[serde(default)]
    negation: Option<ConnectiveSpec>,
    #[serde(default)]
    beta: Option<f64>,
}

pub fn laws(
    law_list: &str,
    trials: u32,
    seed: u64,
    max_universe: usize,
    config: Option<&Path>,
) -> Result<(), CliError> {
    let mut cfg = LawConfig {
        trials,
        seed,
        max_universe,
        ..LawConfig::default()
    };
    if let Some(path) = config {
        let file: LawFileConfig = serde_json::from_str(&read_file(path)?)
            .map_err(|e| CliError::validation(format!("law config: {e}")))?;
        if let Some(spec) = &file.negation {
            cfg.negation = match spec.name.as_str() {
                "standard" => Negation::Standard,
                other => {
                    return Err(CliError::validation(format!(
                        "unknown negation name {other:?}; recognized: \"standard\""
                    )))
                }
            };
        }
        if let Some(spec) = &file.overlap {
            cfg.overlap = Some(resolve_direct_overlap(spec)?);
        }
        if let Some(spec) = &file.grouping {
            cfg.grouping = Some(crate::problem::resolve_grouping_spec(spec)?);
        }
        cfg.beta = file.beta;
    }

    let all = law_ids();
    let selected: Vec<&str> = if law_list.trim() == "all" {
        all.clone()
    } else {
        law_list.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
    };
    let outcomes = run_laws(&selected, &cfg).map_err(|e| match e {
        LawError::UnknownLaw { .. } => CliError::validation(e.to_string()),
        other => CliError::validation(other.to_string()),
    })?;

    let failures: usize = outcomes
        .iter()
        .filter(|o| o.status == LawStatus::Fail)
        .count();
    emit(&serde_json::to_value(&outcomes).expect("serializable outcomes"));
    if failures > 0 {
        return Err(CliError::LawFailures(failures));
    }
    Ok(())
}
