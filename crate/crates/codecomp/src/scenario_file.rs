//! User-supplied scenario files: a JSON document declaring a space, named
//! element families, one candidate decomposition and a list of checks to
//! run, plus the report type the CLI prints.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::action::{
    acts_effectively, is_distal, ActionError, ActionFamily, Element, NamedFamily, Point, Space,
    Verdict,
};
use crate::circle::{parse_rational, CirclePoint, DihedralElement, Rat};
use crate::decomposition::{
    check_effective_commutation, check_generates, check_multi, check_pseudo_multi,
    check_strong_pseudo, classify, DecompositionCandidate, DynamicalProperty,
};
use crate::perm::{BPoint, NatPermutation};
use crate::Budgets;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("scenario file is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("field {field}: {reason}")]
    Schema { field: String, reason: String },
    #[error(transparent)]
    Action(#[from] ActionError),
}

fn schema(field: &str, reason: impl Into<String>) -> FileError {
    FileError::Schema {
        field: field.into(),
        reason: reason.into(),
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields, tag = "kind", rename_all = "snake_case")]
pub enum SpaceDecl {
    B,
    Circle { grid_denominator: u64 },
    Finite { points: Vec<String> },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields, tag = "kind", rename_all = "snake_case")]
pub enum FamilyDecl {
    Enumerated {
        elements: Vec<String>,
    },
    Generated {
        generators: Vec<String>,
        #[serde(default)]
        budget: Option<usize>,
    },
    Named {
        id: String,
        #[serde(default)]
        n: Option<u64>,
        #[serde(default)]
        m: Option<u64>,
        #[serde(default)]
        angle: Option<String>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields, tag = "name", rename_all = "snake_case")]
pub enum PropertyDecl {
    Distal,
    NonPointTransitive { epsilon: String },
    NonMinimal { epsilon: String },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CandidateDecl {
    pub base: String,
    pub parts: Vec<String>,
    #[serde(default)]
    pub target_property: Option<PropertyDecl>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BudgetsDecl {
    #[serde(default)]
    pub closure: Option<usize>,
    #[serde(default)]
    pub orbit: Option<usize>,
    #[serde(default)]
    pub pairs: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub space: SpaceDecl,
    pub families: BTreeMap<String, FamilyDecl>,
    pub candidate: CandidateDecl,
    #[serde(default)]
    pub budgets: Option<BudgetsDecl>,
    pub checks: Vec<String>,
}

impl ScenarioFile {
    pub fn parse(text: &str) -> Result<Self, FileError> {
        Ok(serde_json::from_str(text)?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckRecord {
    pub name: String,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RunReport {
    pub checks: Vec<CheckRecord>,
    pub overall: String,
}

impl RunReport {
    fn from_checks(checks: Vec<CheckRecord>) -> RunReport {
        let overall = if checks.iter().any(|c| c.verdict == "undecided") {
            "undecided"
        } else {
            "decided"
        };
        RunReport {
            checks,
            overall: overall.into(),
        }
    }

    /// Exit code from the verdict multiset only: 0 decided, 2 any Undecided.
    pub fn exit_code(&self) -> i32 {
        if self.overall == "undecided" {
            2
        } else {
            0
        }
    }
}

fn build_space(decl: &SpaceDecl) -> Result<Space, FileError> {
    match decl {
        SpaceDecl::B => Ok(Space::BSpace),
        SpaceDecl::Circle { grid_denominator } => {
            if *grid_denominator == 0 {
                return Err(schema("space.grid_denominator", "must be positive"));
            }
            Ok(Space::CircleRational {
                grid_denominator: *grid_denominator,
            })
        }
        SpaceDecl::Finite { points } => {
            if points.is_empty() {
                return Err(schema("space.points", "must be nonempty"));
            }
            Ok(Space::Finite {
                points: points.clone(),
            })
        }
    }
}

fn parse_finite_map(s: &str, points: usize) -> Result<Element, FileError> {
    let trimmed = s.trim();
    let inner = trimmed
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| schema("element", format!("expected an image vector [..], got {s:?}")))?;
    let images: Vec<usize> = inner
        .split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| schema("element", format!("bad image index {tok:?}")))
        })
        .collect::<Result<_, _>>()?;
    if images.len() != points || images.iter().any(|&i| i >= points) {
        return Err(schema(
            "element",
            format!("image vector {s:?} does not fit a {points}-point space"),
        ));
    }
    Ok(Element::Map(crate::action::FiniteMap(images)))
}

fn parse_element(s: &str, space: &Space) -> Result<Element, FileError> {
    match space {
        Space::BSpace => NatPermutation::parse(s)
            .map(Element::Perm)
            .map_err(|e| schema("element", e.to_string())),
        Space::CircleRational { .. } => DihedralElement::parse(s)
            .map(Element::Dihedral)
            .map_err(|e| schema("element", e.to_string())),
        Space::Finite { points } => parse_finite_map(s, points.len()),
    }
}

fn build_named(decl: &FamilyDecl) -> Result<NamedFamily, FileError> {
    let FamilyDecl::Named { id, n, m, angle } = decl else {
        unreachable!("caller checks the variant");
    };
    let need_n = || n.ok_or_else(|| schema("family.n", format!("{id} needs \"n\"")));
    let need_m = || m.ok_or_else(|| schema("family.m", format!("{id} needs \"m\"")));
    match id.as_str() {
        "t_n" => Ok(NamedFamily::PermTn(need_n()?)),
        "t" => Ok(NamedFamily::PermT),
        "g" => Ok(NamedFamily::PermG),
        "sigma" => Ok(NamedFamily::Sigma),
        "sigma_star" => Ok(NamedFamily::SigmaStar),
        "dihedral_t" => Ok(NamedFamily::DihedralT(need_m()?)),
        "cyclic_rotation" => {
            let text = angle
                .as_ref()
                .ok_or_else(|| schema("family.angle", "cyclic_rotation needs \"angle\""))?;
            let q: Rat =
                parse_rational(text).map_err(|e| schema("family.angle", e.to_string()))?;
            Ok(NamedFamily::CyclicRotation(q))
        }
        other => Err(schema("family.id", format!("unknown named family {other:?}"))),
    }
}

fn build_family(
    decl: &FamilyDecl,
    space: &Space,
    budgets: Budgets,
) -> Result<ActionFamily, FileError> {
    match decl {
        FamilyDecl::Enumerated { elements } => {
            let els: Vec<Element> = elements
                .iter()
                .map(|s| parse_element(s, space))
                .collect::<Result<_, _>>()?;
            Ok(ActionFamily::enumerated(els))
        }
        FamilyDecl::Generated { generators, budget } => {
            let els: Vec<Element> = generators
                .iter()
                .map(|s| parse_element(s, space))
                .collect::<Result<_, _>>()?;
            Ok(ActionFamily::Generated {
                generators: els,
                budget: budget.unwrap_or(budgets.closure),
            })
        }
        FamilyDecl::Named { .. } => Ok(ActionFamily::Named(build_named(decl)?)),
    }
}

fn build_property(decl: &PropertyDecl) -> Result<DynamicalProperty, FileError> {
    let eps = |text: &str| -> Result<Rat, FileError> {
        let q = parse_rational(text).map_err(|e| schema("target_property.epsilon", e.to_string()))?;
        if q <= Rat::new(0, 1) {
            return Err(schema("target_property.epsilon", "must be positive"));
        }
        Ok(q)
    };
    Ok(match decl {
        PropertyDecl::Distal => DynamicalProperty::Distal,
        PropertyDecl::NonPointTransitive { epsilon } => DynamicalProperty::NonPointTransitive {
            epsilon: eps(epsilon)?,
        },
        PropertyDecl::NonMinimal { epsilon } => DynamicalProperty::NonMinimal {
            epsilon: eps(epsilon)?,
        },
    })
}

/// Parses the CLI `--space` argument: `b`, `circle` (24-point sample grid),
/// `circle:N` (N-point grid), or `finite:p1,p2,...`.
pub fn parse_space_arg(s: &str) -> Result<Space, FileError> {
    if s == "b" {
        return Ok(Space::BSpace);
    }
    if s == "circle" {
        return Ok(Space::CircleRational {
            grid_denominator: 24,
        });
    }
    if let Some(rest) = s.strip_prefix("circle:") {
        let grid_denominator: u64 = rest
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| schema("--space", format!("bad grid denominator {rest:?}")))?;
        return Ok(Space::CircleRational { grid_denominator });
    }
    if let Some(rest) = s.strip_prefix("finite:") {
        let points: Vec<String> = rest
            .split(',')
            .map(|p| p.trim().to_string())
            .filter(|p| !p.is_empty())
            .collect();
        if points.is_empty() {
            return Err(schema("--space", "finite: needs at least one point name"));
        }
        return Ok(Space::Finite { points });
    }
    Err(schema(
        "--space",
        format!("expected b, circle, circle:N or finite:p1,p2,..., got {s:?}"),
    ))
}

/// Parses the CLI `--family` argument. `gen:` and `enum:` prefixes take a
/// semicolon-separated element list in the space's element notation; anything
/// else is a named family id, with its parameter after a colon: `t_n:3`, `t`,
/// `g`, `sigma`, `sigma_star`, `dihedral_t:4`, `cyclic_rotation:1/3`.
pub fn parse_family_arg(
    s: &str,
    space: &Space,
    closure_budget: usize,
) -> Result<ActionFamily, FileError> {
    let parse_list = |rest: &str| -> Result<Vec<Element>, FileError> {
        rest.split(';')
            .map(|tok| tok.trim())
            .filter(|tok| !tok.is_empty())
            .map(|tok| parse_element(tok, space))
            .collect()
    };
    if let Some(rest) = s.strip_prefix("gen:") {
        return Ok(ActionFamily::Generated {
            generators: parse_list(rest)?,
            budget: closure_budget,
        });
    }
    if let Some(rest) = s.strip_prefix("enum:") {
        return Ok(ActionFamily::enumerated(parse_list(rest)?));
    }
    let (id, param) = match s.split_once(':') {
        Some((id, param)) => (id, Some(param)),
        None => (s, None),
    };
    let named = match (id, param) {
        ("t", None) => NamedFamily::PermT,
        ("g", None) => NamedFamily::PermG,
        ("sigma", None) => NamedFamily::Sigma,
        ("sigma_star", None) => NamedFamily::SigmaStar,
        ("t_n", Some(p)) => NamedFamily::PermTn(
            p.parse()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| schema("--family", format!("t_n needs a positive n, got {p:?}")))?,
        ),
        ("dihedral_t", Some(p)) => NamedFamily::DihedralT(
            p.parse().ok().filter(|&m| m > 0).ok_or_else(|| {
                schema("--family", format!("dihedral_t needs a positive m, got {p:?}"))
            })?,
        ),
        ("cyclic_rotation", Some(p)) => NamedFamily::CyclicRotation(
            parse_rational(p).map_err(|e| schema("--family", e.to_string()))?,
        ),
        _ => {
            return Err(schema(
                "--family",
                format!("unknown family {s:?}; expected a named family id, gen:.. or enum:.."),
            ))
        }
    };
    Ok(ActionFamily::Named(named))
}

/// Parses the CLI `--point` argument in the space's point notation: `0` or
/// `1/k` on the convergent-sequence space, a rational number of turns on the
/// circle, a declared point name on finite spaces.
pub fn parse_point_arg(s: &str, space: &Space) -> Result<Point, FileError> {
    let s = s.trim();
    match space {
        Space::BSpace => {
            if s == "0" {
                return Ok(Point::B(BPoint::Zero));
            }
            let k = if let Some(rest) = s.strip_prefix("1/") {
                rest.parse::<u64>().ok().filter(|&k| k > 0)
            } else if s == "1" {
                Some(1)
            } else {
                None
            };
            k.map(|k| Point::B(BPoint::Recip(k)))
                .ok_or_else(|| schema("--point", format!("expected 0 or 1/k, got {s:?}")))
        }
        Space::CircleRational { .. } => {
            let q = parse_rational(s).map_err(|e| schema("--point", e.to_string()))?;
            Ok(Point::Circle(CirclePoint::new(q)))
        }
        Space::Finite { points } => points
            .iter()
            .position(|p| p == s)
            .map(Point::Finite)
            .ok_or_else(|| schema("--point", format!("{s:?} is not a declared point name"))),
    }
}

/// Builds the candidate and runs the requested checks in declaration order.
pub fn run_checks(file: &ScenarioFile, default_budgets: Budgets) -> Result<RunReport, FileError> {
    let space = build_space(&file.space)?;
    let budgets = match &file.budgets {
        Some(b) => {
            if b.closure == Some(0) || b.orbit == Some(0) || b.pairs == Some(0) {
                return Err(schema("budgets", "budgets must be positive"));
            }
            Budgets {
                closure: b.closure.unwrap_or(default_budgets.closure),
                orbit: b.orbit.unwrap_or(default_budgets.orbit),
                pairs: b.pairs.unwrap_or(default_budgets.pairs),
            }
        }
        None => default_budgets,
    };
    let mut families: BTreeMap<&str, ActionFamily> = BTreeMap::new();
    for (name, decl) in &file.families {
        families.insert(name, build_family(decl, &space, budgets)?);
    }
    let lookup = |name: &str| -> Result<ActionFamily, FileError> {
        families
            .get(name)
            .cloned()
            .ok_or_else(|| schema("candidate", format!("family {name:?} is not declared")))
    };
    let candidate = DecompositionCandidate {
        space: space.clone(),
        base: lookup(&file.candidate.base)?,
        parts: file
            .candidate
            .parts
            .iter()
            .map(|p| lookup(p))
            .collect::<Result<_, _>>()?,
        budgets,
    };
    let property = file
        .candidate
        .target_property
        .as_ref()
        .map(build_property)
        .transpose()?;

    let mut records = Vec::new();
    let mut record = |name: String, verdict: &Verdict, elapsed_ms: u128| {
        records.push(CheckRecord {
            name,
            verdict: verdict.status().into(),
            witness: match verdict {
                Verdict::Fails(w) => Some(w.to_string()),
                Verdict::Undecided(r) => Some(r.clone()),
                Verdict::Holds => None,
            },
            elapsed_ms,
        });
    };
    for check in &file.checks {
        let start = Instant::now();
        match check.as_str() {
            "multi" => {
                let v = check_multi(&candidate)?;
                record("multi".into(), &v, start.elapsed().as_millis());
            }
            "pseudo_multi" => {
                let v = check_pseudo_multi(&candidate)?;
                record("pseudo_multi".into(), &v, start.elapsed().as_millis());
            }
            "strong_pseudo" => {
                let v = check_strong_pseudo(&candidate)?;
                record("strong_pseudo".into(), &v, start.elapsed().as_millis());
            }
            "generates" => {
                let v = check_generates(&candidate)?;
                record("generates".into(), &v, start.elapsed().as_millis());
            }
            "effective_commutation" => {
                let v = check_effective_commutation(&candidate)?;
                record(
                    "effective_commutation".into(),
                    &v,
                    start.elapsed().as_millis(),
                );
            }
            "effective" => {
                let v = acts_effectively(&space, &candidate.base, budgets)?;
                record("effective".into(), &v, start.elapsed().as_millis());
            }
            "distal" => {
                let v = is_distal(&space, &candidate.base, budgets)?;
                record("distal".into(), &v, start.elapsed().as_millis());
            }
            "classify" => {
                let report = classify(&candidate, property.as_ref())?;
                let ms = start.elapsed().as_millis();
                record("classify.multi".into(), &report.multi, ms);
                record("classify.pseudo_multi".into(), &report.pseudo_multi, 0);
                record("classify.strong_pseudo".into(), &report.strong_pseudo, 0);
                record("classify.generates".into(), &report.generates, 0);
                for (part, prop, v) in &report.property_per_part {
                    record(format!("classify.{prop}[{part}]"), v, 0);
                }
            }
            other => {
                return Err(schema(
                    "checks",
                    format!(
                        "unknown check {other:?}; expected multi, pseudo_multi, strong_pseudo, \
                         generates, effective_commutation, effective, distal or classify"
                    ),
                ))
            }
        }
    }
    Ok(RunReport::from_checks(records))
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRUNCATION_FILE: &str = r#"{
        "space": {"kind": "b"},
        "families": {
            "t2": {"kind": "named", "id": "t_n", "n": 2},
            "t3": {"kind": "named", "id": "t_n", "n": 3},
            "all": {"kind": "named", "id": "t"}
        },
        "candidate": {"base": "all", "parts": ["t2", "t3"]},
        "checks": ["multi", "pseudo_multi"]
    }"#;

    #[test]
    fn parse_and_run_truncation_file() {
        let file = ScenarioFile::parse(TRUNCATION_FILE).unwrap();
        let report = run_checks(&file, Budgets::default()).unwrap();
        assert_eq!(report.checks.len(), 2);
        assert_eq!(report.checks[0].verdict, "fails");
        assert!(report.checks[0].witness.as_deref().unwrap().contains("(1 2)"));
        assert_eq!(report.checks[1].verdict, "holds");
        assert_eq!(report.overall, "decided");
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn tiny_budget_forces_undecided() {
        let text = r#"{
            "space": {"kind": "b"},
            "families": {
                "gens": {"kind": "generated", "generators": ["(1 2)", "(1 2 3 4 5)"]},
                "t5": {"kind": "named", "id": "t_n", "n": 5}
            },
            "candidate": {"base": "gens", "parts": ["t5"]},
            "budgets": {"closure": 10},
            "checks": ["generates"]
        }"#;
        let file = ScenarioFile::parse(text).unwrap();
        let report = run_checks(&file, Budgets::default()).unwrap();
        assert_eq!(report.checks[0].verdict, "undecided");
        assert_eq!(report.exit_code(), 2);
    }

    #[test]
    fn circle_file_with_classify() {
        let text = r#"{
            "space": {"kind": "circle", "grid_denominator": 12},
            "families": {
                "r2": {"kind": "named", "id": "cyclic_rotation", "angle": "1/2"},
                "r3": {"kind": "named", "id": "cyclic_rotation", "angle": "1/3"},
                "sigma": {"kind": "named", "id": "sigma"}
            },
            "candidate": {
                "base": "sigma",
                "parts": ["r2", "r3"],
                "target_property": {"name": "non_minimal", "epsilon": "1/10"}
            },
            "checks": ["classify"]
        }"#;
        let file = ScenarioFile::parse(text).unwrap();
        let report = run_checks(&file, Budgets::default()).unwrap();
        let by_name = |n: &str| {
            report
                .checks
                .iter()
                .find(|c| c.name == n)
                .unwrap_or_else(|| panic!("missing record {n}"))
        };
        assert_eq!(by_name("classify.multi").verdict, "holds");
        assert!(report
            .checks
            .iter()
            .filter(|c| c.name.starts_with("classify.non_minimal"))
            .all(|c| c.verdict == "holds"));
    }

    #[test]
    fn schema_errors_name_the_field() {
        let missing = r#"{
            "space": {"kind": "b"},
            "families": {"t2": {"kind": "named", "id": "t_n", "n": 2}},
            "candidate": {"base": "undeclared", "parts": ["t2"]},
            "checks": ["multi"]
        }"#;
        let err = run_checks(&ScenarioFile::parse(missing).unwrap(), Budgets::default())
            .unwrap_err();
        assert!(err.to_string().contains("undeclared"));
        assert!(ScenarioFile::parse("{\"space\": {\"kind\": \"b\"}}").is_err());
        assert!(ScenarioFile::parse("not json").is_err());
    }

    #[test]
    fn report_round_trips_through_json() {
        let file = ScenarioFile::parse(TRUNCATION_FILE).unwrap();
        let report = run_checks(&file, Budgets::default()).unwrap();
        let text = serde_json::to_string_pretty(&report).unwrap();
        let back: RunReport = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&back).unwrap(), text);
    }

    #[test]
    fn finite_space_maps_parse() {
        let text = r#"{
            "space": {"kind": "finite", "points": ["a", "b", "c"]},
            "families": {
                "cyc": {"kind": "enumerated", "elements": ["[0 1 2]", "[1 2 0]", "[2 0 1]"]},
                "idf": {"kind": "enumerated", "elements": ["[0 1 2]"]}
            },
            "candidate": {"base": "cyc", "parts": ["idf", "cyc"]},
            "checks": ["multi", "distal", "effective"]
        }"#;
        let file = ScenarioFile::parse(text).unwrap();
        let report = run_checks(&file, Budgets::default()).unwrap();
        assert!(report.checks.iter().all(|c| c.verdict == "holds"));
    }
}
