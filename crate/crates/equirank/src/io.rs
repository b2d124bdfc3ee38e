//! File formats and report serialization.
//!
//! Groups are stored as `{"order": n, "mul": [[...], ...]}`, actions as
//! `{"group": <object or builder string>, "points": m, "act": [[...], ...]}`,
//! maps as bare JSON arrays of point ids. Builder strings are the same
//! grammar the CLI accepts: `cyclic:n`, `symmetric:k`, `file:path` for
//! groups; `shift:q`, `coset:g1,g2,...`, `regular`, `union:a+b`, `file:path`
//! for actions.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::action::{ActionError, Classification, GAction};
use crate::equivariant::GMap;
use crate::group::{FiniteGroup, GroupError};
use crate::oracle::{InvariantSuiteReport, LowerBoundReport};
use crate::rank::{RankReport, TypedGenerator};

/// Input-handling errors, split by how the CLI reports them: `Parse` covers
/// grammar and JSON syntax, `Validation` covers violated structural laws.
#[derive(Error, Debug)]
pub enum LoadError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error: {0}")]
    Validation(String),
}

impl From<GroupError> for LoadError {
    fn from(e: GroupError) -> Self {
        LoadError::Validation(e.to_string())
    }
}

impl From<ActionError> for LoadError {
    fn from(e: ActionError) -> Self {
        LoadError::Validation(e.to_string())
    }
}

/// On-disk group representation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupFile {
    pub order: usize,
    pub mul: Vec<Vec<usize>>,
}

impl GroupFile {
    pub fn from_group(group: &FiniteGroup) -> GroupFile {
        GroupFile {
            order: group.order(),
            mul: group.mul_table().to_vec(),
        }
    }

    pub fn build(self) -> Result<FiniteGroup, LoadError> {
        if self.mul.len() != self.order {
            return Err(LoadError::Validation(format!(
                "declared order {} does not match table with {} rows",
                self.order,
                self.mul.len()
            )));
        }
        Ok(FiniteGroup::from_mul_table(self.mul)?)
    }
}

/// A group reference inside an action file: builder string or inline table.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupField {
    Builder(String),
    Table(GroupFile),
}

/// On-disk action representation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ActionFile {
    pub group: GroupField,
    pub points: usize,
    pub act: Vec<Vec<usize>>,
}

impl ActionFile {
    /// Serializes an action, naming the group by its builder spec when the
    /// caller still knows it.
    pub fn from_action(action: &GAction, group_spec: Option<&str>) -> ActionFile {
        let group = match group_spec {
            Some(s) => GroupField::Builder(s.to_string()),
            None => GroupField::Table(GroupFile::from_group(action.group())),
        };
        ActionFile {
            group,
            points: action.point_count(),
            act: action.table().to_vec(),
        }
    }

    pub fn build(self) -> Result<GAction, LoadError> {
        let group = match self.group {
            GroupField::Builder(spec) => parse_group_spec(&spec)?,
            GroupField::Table(t) => t.build()?,
        };
        let action = GAction::new(group, self.act)?;
        if action.point_count() != self.points {
            return Err(LoadError::Validation(format!(
                "declared point count {} does not match table width {}",
                self.points,
                action.point_count()
            )));
        }
        Ok(action)
    }
}

/// Builds a group from a spec string: `cyclic:n`, `symmetric:k`, `file:path`.
pub fn parse_group_spec(spec: &str) -> Result<FiniteGroup, LoadError> {
    if let Some(n) = spec.strip_prefix("cyclic:") {
        let n: usize = n
            .parse()
            .map_err(|_| LoadError::Parse(format!("bad cyclic order {n:?}")))?;
        return Ok(FiniteGroup::cyclic(n)?);
    }
    if let Some(k) = spec.strip_prefix("symmetric:") {
        let k: usize = k
            .parse()
            .map_err(|_| LoadError::Parse(format!("bad symmetric degree {k:?}")))?;
        return Ok(FiniteGroup::symmetric(k)?);
    }
    if let Some(path) = spec.strip_prefix("file:") {
        let text = fs::read_to_string(path)
            .map_err(|e| LoadError::Parse(format!("cannot read {path}: {e}")))?;
        let file: GroupFile = serde_json::from_str(&text)
            .map_err(|e| LoadError::Parse(format!("bad group JSON in {path}: {e}")))?;
        return file.build();
    }
    Err(LoadError::Parse(format!(
        "unknown group spec {spec:?}; expected cyclic:n, symmetric:k or file:path"
    )))
}

/// Builds an action from a spec string over a given group: `shift:q`,
/// `coset:g1,g2,...`, `regular`, `union:a+b`, `file:path`.
pub fn parse_action_spec(spec: &str, group: &FiniteGroup) -> Result<GAction, LoadError> {
    if let Some(q) = spec.strip_prefix("shift:") {
        let q: usize = q
            .parse()
            .map_err(|_| LoadError::Parse(format!("bad alphabet size {q:?}")))?;
        return Ok(GAction::shift(group.clone(), q)?);
    }
    if let Some(gens) = spec.strip_prefix("coset:") {
        let ids: Vec<usize> = if gens.is_empty() {
            Vec::new()
        } else {
            gens.split(',')
                .map(|s| {
                    s.trim()
                        .parse()
                        .map_err(|_| LoadError::Parse(format!("bad element id {s:?}")))
                })
                .collect::<Result<_, _>>()?
        };
        let h = group.subgroup_closure(&ids)?;
        return Ok(GAction::coset(group.clone(), &h)?);
    }
    if spec == "regular" {
        return Ok(GAction::regular(group.clone())?);
    }
    if let Some(rest) = spec.strip_prefix("union:") {
        let parts: Vec<&str> = rest.split('+').collect();
        if parts.len() < 2 {
            return Err(LoadError::Parse(format!(
                "union spec needs at least two operands, got {spec:?}"
            )));
        }
        let mut acc = parse_action_spec(parts[0], group)?;
        for part in &parts[1..] {
            let next = parse_action_spec(part, group)?;
            acc = acc.disjoint_union(&next)?;
        }
        return Ok(acc);
    }
    if let Some(path) = spec.strip_prefix("file:") {
        let action = load_action_file(path)?;
        if action.group() != group {
            return Err(LoadError::Validation(format!(
                "action file {path} is over a different group"
            )));
        }
        return Ok(action);
    }
    Err(LoadError::Parse(format!(
        "unknown action spec {spec:?}; expected shift:q, coset:ids, regular, union:a+b or file:path"
    )))
}

pub fn load_action_file(path: impl AsRef<Path>) -> Result<GAction, LoadError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)
        .map_err(|e| LoadError::Parse(format!("cannot read {}: {e}", path.display())))?;
    let file: ActionFile = serde_json::from_str(&text)
        .map_err(|e| LoadError::Parse(format!("bad action JSON in {}: {e}", path.display())))?;
    file.build()
}

/// Loads a map file: a bare JSON array of point ids.
pub fn load_map_file(path: impl AsRef<Path>) -> Result<GMap, LoadError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)
        .map_err(|e| LoadError::Parse(format!("cannot read {}: {e}", path.display())))?;
    let image: Vec<usize> = serde_json::from_str(&text)
        .map_err(|e| LoadError::Parse(format!("bad map JSON in {}: {e}", path.display())))?;
    GMap::from_image(image).map_err(|e| LoadError::Validation(e.to_string()))
}

// --- report shapes ---------------------------------------------------------

#[derive(Debug, Serialize)]
pub struct ClassReport {
    pub stabilizer: Vec<usize>,
    pub stabilizer_order: usize,
    pub normalizer: Vec<usize>,
    pub alpha: usize,
    pub block: Vec<usize>,
    pub orbits: Vec<Vec<usize>>,
    pub orbit_reps: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct AnalyzeReport {
    pub group_order: usize,
    pub points: usize,
    pub classes: Vec<ClassReport>,
    pub alpha: Vec<usize>,
}

pub fn analyze_report(action: &GAction, classification: &Classification) -> AnalyzeReport {
    AnalyzeReport {
        group_order: action.group().order(),
        points: action.point_count(),
        classes: classification
            .classes()
            .iter()
            .map(|c| ClassReport {
                stabilizer: c.rep.elements().to_vec(),
                stabilizer_order: c.rep.len(),
                normalizer: c.normalizer.elements().to_vec(),
                alpha: c.alpha,
                block: c.block.clone(),
                orbits: c.orbits.clone(),
                orbit_reps: c.orbit_reps.clone(),
            })
            .collect(),
        alpha: classification.alpha_vector(),
    }
}

#[derive(Debug, Serialize)]
pub struct RankClassReport {
    pub stabilizer_order: usize,
    pub alpha: usize,
    pub u_size: usize,
    pub u_classes: Vec<Vec<usize>>,
}

#[derive(Debug, Serialize)]
pub struct RankJsonReport {
    pub classes: Vec<RankClassReport>,
    pub kappa: usize,
    pub relative_rank: usize,
    pub aut_order: String,
    pub end_order: String,
}

pub fn rank_json_report(report: &RankReport) -> RankJsonReport {
    RankJsonReport {
        classes: report
            .classes
            .iter()
            .map(|c| RankClassReport {
                stabilizer_order: c.stabilizer_order,
                alpha: c.alpha,
                u_size: c.u_size(),
                u_classes: c
                    .u_classes
                    .iter()
                    .map(|cl| cl.canonical().elements().to_vec())
                    .collect(),
            })
            .collect(),
        kappa: report.kappa,
        relative_rank: report.relative_rank,
        aut_order: report.aut_order.to_string(),
        end_order: report.end_order.to_string(),
    }
}

#[derive(Debug, Serialize)]
pub struct GeneratorReport {
    pub image: Vec<usize>,
    pub class_index: usize,
    pub target_class: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct GensReport {
    pub set: String,
    pub count: usize,
    pub maps: Vec<GeneratorReport>,
}

pub fn gens_report(set_name: &str, gens: &[TypedGenerator]) -> GensReport {
    GensReport {
        set: set_name.to_string(),
        count: gens.len(),
        maps: gens
            .iter()
            .map(|t| GeneratorReport {
                image: t.map.image().to_vec(),
                class_index: t.ty.class_index,
                target_class: t.ty.target_class.canonical().elements().to_vec(),
            })
            .collect(),
    }
}

#[derive(Debug, Serialize)]
pub struct CheckJson {
    pub name: String,
    pub pass: bool,
    pub count: u64,
    pub detail: String,
    pub elapsed_ms: u64,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckJson>,
    pub all_pass: bool,
}

pub fn verify_report(
    suite: &InvariantSuiteReport,
    extra: Vec<CheckJson>,
) -> VerifyReport {
    let mut checks: Vec<CheckJson> = suite
        .checks
        .iter()
        .map(|c| CheckJson {
            name: c.name.clone(),
            pass: c.pass,
            count: c.count,
            detail: c.detail.clone(),
            elapsed_ms: c.elapsed_ms as u64,
        })
        .collect();
    checks.extend(extra);
    let all_pass = checks.iter().all(|c| c.pass);
    VerifyReport { checks, all_pass }
}

pub fn lower_bound_check(report: &LowerBoundReport, elapsed_ms: u64) -> CheckJson {
    let detail = report
        .coverage
        .iter()
        .map(|(ty, witness)| match witness {
            Some(i) => format!("{ty}<-#{i}"),
            None => format!("{ty}<-MISSING"),
        })
        .collect::<Vec<_>>()
        .join(" ");
    CheckJson {
        name: "lower_bound_types_covered".into(),
        pass: report.consistent,
        count: report.coverage.len() as u64,
        detail,
        elapsed_ms,
    }
}

pub fn to_json_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}
