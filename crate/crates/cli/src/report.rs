//! JSON report documents. Field order is fixed by the struct definitions and
//! every list is emitted in a deterministic order.

use gradedie::algebra::{ElementSet, Shape};
use gradedie::grading::GradingGroup;
use gradedie::predicates::{Point, Verdict};
use gradedie::theorems::{ClaimReport, ClaimSummary, Frame, Instance, SuiteReport, WitnessPart};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointOut {
    pub index: usize,
    /// Coordinates, for tuple carriers.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element: Option<String>,
    /// Residues of the degree; `null` for zero or non-homogeneous elements.
    pub degree: Option<Vec<usize>>,
}

impl PointOut {
    pub fn new(p: Point, shape: Option<&Shape>, group: &GradingGroup) -> Self {
        PointOut {
            index: p.index,
            element: shape
                .filter(|s| matches!(s, Shape::Tuple(_)) && p.index < s.size())
                .map(|s| s.decode(p.index).to_string()),
            degree: p.degree.map(|g| group.residues(g)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessOut {
    /// The violated condition.
    pub condition: String,
    pub frame: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scalar: Option<PointOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vector: Option<PointOut>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub extra: Vec<PointOut>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sets: Vec<Vec<usize>>,
}

fn set_list(s: &ElementSet) -> Vec<usize> {
    s.iter().collect()
}

fn part_out(inst: &Instance, part: &WitnessPart) -> WitnessOut {
    let group = inst.setting.group();
    let module_shape = inst.module().module().shape();
    let pair_shape = inst
        .extras
        .second_module
        .as_ref()
        .map(|m2| Shape::Tuple(vec![module_shape.clone(), m2.module().shape().clone()]));
    let (scalar_shape, vector_shape) = match part.frame {
        Frame::Base => (Some(inst.ring().ring().shape()), Some(module_shape)),
        Frame::ProductLeft | Frame::ProductRight => (Some(inst.ring().ring().shape()), pair_shape.as_ref()),
        Frame::Quotient => (Some(inst.ring().ring().shape()), None),
        Frame::Localized => (None, None),
    };
    WitnessOut {
        condition: part.finding.to_string(),
        frame: part.frame.name(),
        scalar: part.scalar.map(|p| PointOut::new(p, scalar_shape, group)),
        vector: part.vector.map(|p| PointOut::new(p, vector_shape, group)),
        extra: part.extra.iter().map(|&p| PointOut::new(p, None, group)).collect(),
        sets: part.sets.iter().map(set_list).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimWitnessOut {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub direction: Option<String>,
    pub parts: Vec<WitnessOut>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimEntry {
    pub claim: String,
    pub instance_id: String,
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<&'static str>,
    /// `filtered`, `held` or `falsified`.
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ClaimWitnessOut>,
}

impl ClaimEntry {
    pub fn new(inst: &Instance, r: &ClaimReport) -> Self {
        let verdict = match r.conclusion_holds {
            None => "filtered",
            Some(true) => "held",
            Some(false) => "falsified",
        };
        ClaimEntry {
            claim: r.claim.to_string(),
            instance_id: r.instance_id.clone(),
            label: r.label.clone(),
            variant: r.variant.map(|v| v.name()),
            verdict,
            witness: r.witness.as_ref().map(|w| ClaimWitnessOut {
                direction: w.direction.clone(),
                parts: w.parts.iter().map(|p| part_out(inst, p)).collect(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SummaryOut {
    pub claim: String,
    pub required: bool,
    pub evaluated: usize,
    pub filtered: usize,
    pub held: usize,
    pub falsified: usize,
}

impl From<&ClaimSummary> for SummaryOut {
    fn from(s: &ClaimSummary) -> Self {
        SummaryOut {
            claim: s.claim.to_string(),
            required: s.required,
            evaluated: s.evaluated,
            filtered: s.filtered,
            held: s.held,
            falsified: s.falsified,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Timing {
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteFile {
    pub command: &'static str,
    /// No required claim was falsified.
    pub passed: bool,
    pub instances: usize,
    pub variants: Vec<&'static str>,
    pub summary: Vec<SummaryOut>,
    pub reports: Vec<ClaimEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl SuiteFile {
    pub fn new(report: &SuiteReport, variants: Vec<&'static str>, timing: Option<Timing>) -> Self {
        let by_id: std::collections::HashMap<&str, &Instance> =
            report.corpus.iter().map(|i| (i.id.as_str(), i)).collect();
        SuiteFile {
            command: "suite",
            passed: report.passed(),
            instances: report.instances,
            variants,
            summary: report.summary.iter().map(SummaryOut::from).collect(),
            reports: report
                .reports
                .iter()
                .map(|r| ClaimEntry::new(by_id[r.instance_id.as_str()], r))
                .collect(),
            timing,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictEntry {
    pub predicate: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<Vec<usize>>,
    /// `null` when the predicate does not apply.
    pub value: Option<bool>,
    pub vacuous: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessOut>,
    /// Whether the witness reproduces against the raw definition.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerdictEntry {
    pub fn from_verdict(predicate: String, v: &Verdict, witness: Option<WitnessOut>) -> Self {
        VerdictEntry {
            predicate,
            target: None,
            ideal: None,
            degree: None,
            value: Some(v.value),
            vacuous: v.vacuous,
            witness,
            verified: None,
            note: None,
        }
    }

    pub fn not_applicable(predicate: String, note: String) -> Self {
        VerdictEntry {
            predicate,
            target: None,
            ideal: None,
            degree: None,
            value: None,
            vacuous: false,
            witness: None,
            verified: None,
            note: Some(note),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifyFile {
    pub command: &'static str,
    pub label: String,
    pub entries: Vec<VerdictEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumeratedSet {
    pub elements: Vec<usize>,
    /// Smallest generating list, greedily by index.
    pub generators: Vec<usize>,
    pub tags: Vec<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerateFile {
    pub command: &'static str,
    pub label: String,
    pub kind: &'static str,
    pub count: usize,
    pub sets: Vec<EnumeratedSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidateFile {
    pub command: &'static str,
    pub label: String,
    pub valid: bool,
    pub ring_size: usize,
    pub module_size: usize,
    pub group: Vec<usize>,
    pub ideals: Vec<String>,
    pub submodules: Vec<String>,
    pub mult_sets: Vec<String>,
    pub degrees: Vec<String>,
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String, serde_json::Error> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}
