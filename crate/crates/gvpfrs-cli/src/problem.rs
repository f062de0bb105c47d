//! Problem-file schema, validation and resolution into core types.
//!
//! ```json
//! {
//!   "universe": ["x1", "x2", "x3"],
//!   "relation": [[1.0, 0.6, 1.0], [0.6, 1.0, 0.6], [1.0, 0.6, 1.0]],
//!   "set": [0.8, 0.1, 0.6],
//!   "beta": 0.5,
//!   "connectives": {
//!     "overlap": {"name": "product"},
//!     "grouping": {"name": "probabilistic_sum"},
//!     "negation": {"name": "standard"}
//!   },
//!   "options": {"tolerance": 1e-12, "oracle_cap": 16}
//! }
//! ```
//!
//! Multiple sets may be given under `"sets"` instead of `"set"`.
//! Recognized connective names: `minimum`, `product`, `O_p` (with `p`),
//! `O_DB`, `dual_of_grouping`, `tabulated` (with `grid`) for overlaps;
//! `maximum`, `probabilistic_sum`, `G_p` (with `p`), `dual_of_overlap`,
//! `tabulated` for groupings; `standard` for negations.

use std::collections::BTreeMap;

use serde::Deserialize;

use gvpfrs_core::connectives::{
    BilinearTable, GroupingResidual, Negation, Overlap, OverlapResidual, ResidualMode,
};
use gvpfrs_core::fuzzy::{FuzzyRelation, FuzzySet, Universe};

use crate::CliError;

pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const DEFAULT_ORACLE_CAP: usize = 16;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub universe: Vec<String>,
    pub relation: Vec<Vec<f64>>,
    #[serde(default)]
    pub set: Option<Vec<f64>>,
    #[serde(default)]
    pub sets: Option<BTreeMap<String, Vec<f64>>>,
    pub beta: f64,
    #[serde(default)]
    pub connectives: Option<ConnectivesSpec>,
    #[serde(default)]
    pub options: Option<OptionsSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConnectivesSpec {
    #[serde(default)]
    pub overlap: Option<ConnectiveSpec>,
    #[serde(default)]
    pub grouping: Option<ConnectiveSpec>,
    #[serde(default)]
    pub negation: Option<ConnectiveSpec>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConnectiveSpec {
    pub name: String,
    #[serde(default)]
    pub p: Option<f64>,
    #[serde(default)]
    pub grid: Option<Vec<Vec<f64>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsSpec {
    #[serde(default)]
    pub tolerance: Option<f64>,
    #[serde(default)]
    pub oracle_cap: Option<usize>,
}

/// A fully validated and resolved problem instance.
pub struct Problem {
    pub universe: Universe,
    pub relation: FuzzyRelation,
    pub sets: Vec<(String, FuzzySet)>,
    pub beta: f64,
    pub overlap: Option<OverlapResidual>,
    pub grouping: Option<GroupingResidual>,
    pub negation: Negation,
    pub tolerance: f64,
    pub oracle_cap: usize,
}

impl Problem {
    pub fn overlap_pair(&self) -> Result<&OverlapResidual, CliError> {
        self.overlap
            .as_ref()
            .ok_or_else(|| CliError::validation("missing key connectives.overlap"))
    }

    pub fn grouping_pair(&self) -> Result<&GroupingResidual, CliError> {
        self.grouping
            .as_ref()
            .ok_or_else(|| CliError::validation("missing key connectives.grouping"))
    }

    /// The single set a one-set command operates on.
    pub fn the_set(&self) -> Result<&FuzzySet, CliError> {
        match self.sets.as_slice() {
            [(_, s)] => Ok(s),
            [] => Err(CliError::validation("missing key \"set\" (or \"sets\")")),
            _ => Err(CliError::validation(
                "several sets given; this command needs a single \"set\"",
            )),
        }
    }
}

pub fn parse_problem(text: &str) -> Result<Problem, CliError> {
    let file: ProblemFile = serde_json::from_str(text)
        .map_err(|e| CliError::validation(format!("problem file: {e}")))?;
    resolve_problem(file)
}

fn check_unit(place: impl Fn() -> String, v: f64) -> Result<(), CliError> {
    if v.is_nan() || !(0.0..=1.0).contains(&v) {
        return Err(CliError::validation(format!(
            "{} = {v} outside [0,1]",
            place()
        )));
    }
    Ok(())
}

fn resolve_problem(file: ProblemFile) -> Result<Problem, CliError> {
    let universe =
        Universe::new(file.universe).map_err(|e| CliError::validation(format!("universe: {e}")))?;
    let n = universe.len();

    if file.relation.len() != n {
        return Err(CliError::validation(format!(
            "relation has {} rows but the universe has {} elements",
            file.relation.len(),
            n
        )));
    }
    for (i, row) in file.relation.iter().enumerate() {
        if row.len() != n {
            return Err(CliError::validation(format!(
                "relation[{i}] has length {} but the universe has {} elements",
                row.len(),
                n
            )));
        }
        for (j, &v) in row.iter().enumerate() {
            check_unit(|| format!("relation[{i}][{j}]"), v)?;
        }
    }
    let relation = FuzzyRelation::new(&file.relation)
        .map_err(|e| CliError::validation(format!("relation: {e}")))?;

    let mut sets = Vec::new();
    match (file.set, file.sets) {
        (Some(_), Some(_)) => {
            return Err(CliError::validation("give either \"set\" or \"sets\", not both"))
        }
        (Some(values), None) => {
            validate_set("set", &values, n)?;
            sets.push((
                "set".to_string(),
                FuzzySet::new(values).expect("validated above"),
            ));
        }
        (None, Some(map)) => {
            for (name, values) in map {
                validate_set(&format!("sets.{name}"), &values, n)?;
                sets.push((
                    name,
                    FuzzySet::new(values).expect("validated above"),
                ));
            }
        }
        (None, None) => {}
    }

    check_unit(|| "beta".to_string(), file.beta)?;

    let conn = file.connectives;
    let negation = match conn.as_ref().and_then(|c| c.negation.as_ref()) {
        None => Negation::Standard,
        Some(spec) => resolve_negation(spec)?,
    };
    let (tolerance, oracle_cap) = match file.options {
        Some(o) => {
            if let Some(t) = o.tolerance {
                if !(t > 0.0) || t > 0.5 {
                    return Err(CliError::validation(format!(
                        "options.tolerance = {t} must lie in (0, 0.5]"
                    )));
                }
            }
            (
                o.tolerance.unwrap_or(DEFAULT_TOLERANCE),
                o.oracle_cap.unwrap_or(DEFAULT_ORACLE_CAP),
            )
        }
        None => (DEFAULT_TOLERANCE, DEFAULT_ORACLE_CAP),
    };

    let overlap_spec = conn.as_ref().and_then(|c| c.overlap.clone());
    let grouping_spec = conn.as_ref().and_then(|c| c.grouping.clone());
    let (overlap, grouping) =
        resolve_connective_pair(overlap_spec.as_ref(), grouping_spec.as_ref(), negation)?;

    Ok(Problem {
        universe,
        relation,
        sets,
        beta: file.beta,
        overlap: overlap.map(|o| residual_for(o, tolerance)),
        grouping: grouping.map(|g| coresidual_for(g, tolerance)),
        negation,
        tolerance,
        oracle_cap,
    })
}

fn validate_set(place: &str, values: &[f64], n: usize) -> Result<(), CliError> {
    if values.len() != n {
        return Err(CliError::validation(format!(
            "{place} has length {} but the universe has {n} elements",
            values.len()
        )));
    }
    for (i, &v) in values.iter().enumerate() {
        check_unit(|| format!("{place}[{i}]"), v)?;
    }
    Ok(())
}

fn residual_for(o: Overlap, tolerance: f64) -> OverlapResidual {
    if o.has_closed_residual() {
        OverlapResidual {
            overlap: o,
            mode: ResidualMode::ClosedForm,
        }
    } else {
        OverlapResidual::bisection(o, tolerance)
    }
}

fn coresidual_for(g: gvpfrs_core::connectives::Grouping, tolerance: f64) -> GroupingResidual {
    if g.has_closed_coresidual() {
        GroupingResidual {
            grouping: g,
            mode: ResidualMode::ClosedForm,
        }
    } else {
        GroupingResidual::bisection(g, tolerance)
    }
}

fn resolve_negation(spec: &ConnectiveSpec) -> Result<Negation, CliError> {
    match spec.name.as_str() {
        "standard" => Ok(Negation::Standard),
        other => Err(CliError::validation(format!(
            "unknown negation name {other:?}; recognized: \"standard\""
        ))),
    }
}

fn table_from(spec: &ConnectiveSpec) -> Result<BilinearTable, CliError> {
    let grid = spec
        .grid
        .as_ref()
        .ok_or_else(|| CliError::validation("tabulated connective needs a \"grid\""))?;
    BilinearTable::new(grid).map_err(|e| CliError::validation(format!("grid: {e}")))
}

/// Resolves an overlap spec that is not `dual_of_grouping`.
pub fn resolve_direct_overlap(spec: &ConnectiveSpec) -> Result<Overlap, CliError> {
    match spec.name.as_str() {
        "minimum" => Ok(Overlap::Minimum),
        "product" => Ok(Overlap::Product),
        "O_p" => {
            let p = spec
                .p
                .ok_or_else(|| CliError::validation("overlap \"O_p\" needs parameter \"p\""))?;
            Overlap::power(p).map_err(|e| CliError::validation(format!("O_p: {e}")))
        }
        "O_DB" => Ok(Overlap::Harmonic),
        "tabulated" => Ok(Overlap::Table(table_from(spec)?)),
        other => Err(CliError::validation(format!(
            "unknown overlap name {other:?}; recognized: \"minimum\", \"product\", \"O_p\", \"O_DB\", \"dual_of_grouping\", \"tabulated\""
        ))),
    }
}

/// Resolves a grouping spec that is not `dual_of_overlap`.
pub fn resolve_grouping_spec(
    spec: &ConnectiveSpec,
) -> Result<gvpfrs_core::connectives::Grouping, CliError> {
    use gvpfrs_core::connectives::Grouping;
    match spec.name.as_str() {
        "maximum" => Ok(Grouping::Maximum),
        "probabilistic_sum" => Ok(Grouping::ProbabilisticSum),
        "G_p" => {
            let p = spec
                .p
                .ok_or_else(|| CliError::validation("grouping \"G_p\" needs parameter \"p\""))?;
            Grouping::power(p).map_err(|e| CliError::validation(format!("G_p: {e}")))
        }
        "tabulated" => Ok(Grouping::Table(table_from(spec)?)),
        other => Err(CliError::validation(format!(
            "unknown grouping name {other:?}; recognized: \"maximum\", \"probabilistic_sum\", \"G_p\", \"dual_of_overlap\", \"tabulated\""
        ))),
    }
}

type ResolvedPair = (
    Option<Overlap>,
    Option<gvpfrs_core::connectives::Grouping>,
);

fn resolve_connective_pair(
    overlap: Option<&ConnectiveSpec>,
    grouping: Option<&ConnectiveSpec>,
    negation: Negation,
) -> Result<ResolvedPair, CliError> {
    use gvpfrs_core::connectives::{dual_grouping_of, dual_overlap_of};
    let o_is_dual = overlap.map(|s| s.name == "dual_of_grouping").unwrap_or(false);
    let g_is_dual = grouping.map(|s| s.name == "dual_of_overlap").unwrap_or(false);
    if o_is_dual && g_is_dual {
        return Err(CliError::validation(
            "overlap and grouping cannot both be defined as duals of each other",
        ));
    }
    let mut o = match overlap {
        Some(s) if !o_is_dual => Some(resolve_direct_overlap(s)?),
        _ => None,
    };
    let mut g = match grouping {
        Some(s) if !g_is_dual => Some(resolve_grouping_spec(s)?),
        _ => None,
    };
    if o_is_dual {
        let base = g.clone().ok_or_else(|| {
            CliError::validation("overlap \"dual_of_grouping\" needs a grouping to dualise")
        })?;
        o = Some(
            dual_overlap_of(&base, negation)
                .map_err(|e| CliError::premise(format!("dual_of_grouping: {e}")))?,
        );
    }
    if g_is_dual {
        let base = o.clone().ok_or_else(|| {
            CliError::validation("grouping \"dual_of_overlap\" needs an overlap to dualise")
        })?;
        g = Some(
            dual_grouping_of(&base, negation)
                .map_err(|e| CliError::premise(format!("dual_of_overlap: {e}")))?,
        );
    }
    Ok((o, g))
}
