//! Typed reports with deterministic text and JSON renderings.
//!
//! JSON keys are snake_case, values are integers, booleans, or arrays of
//! integers; key order is fixed by struct declaration order, so identical
//! requests produce byte-identical output.

use latri_core::{classifier, Canonical64, Map64, Point64, Triangle64};
use serde::{Deserialize, Serialize};

pub type Pair = [i64; 2];
pub type Tri = [Pair; 3];

pub fn pair(p: Point64) -> Pair {
    [p.x, p.y]
}

pub fn tri(t: &Triangle64) -> Tri {
    let [a, b, c] = t.vertices();
    [pair(a), pair(b), pair(c)]
}

fn fmt_pair(p: &Pair) -> String {
    format!("({}, {})", p[0], p[1])
}

fn fmt_pairs(ps: &[Pair]) -> String {
    if ps.is_empty() {
        "none".to_string()
    } else {
        ps.iter().map(fmt_pair).collect::<Vec<_>>().join(" ")
    }
}

fn fmt_ints(vs: &[i64]) -> String {
    if vs.is_empty() {
        "none".to_string()
    } else {
        vs.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct MapEntries {
    pub m11: i64,
    pub m12: i64,
    pub m21: i64,
    pub m22: i64,
    pub tx: i64,
    pub ty: i64,
}

impl From<&Map64> for MapEntries {
    fn from(map: &Map64) -> Self {
        let [[m11, m12], [m21, m22]] = map.matrix();
        let (tx, ty) = map.translation_part();
        Self {
            m11,
            m12,
            m21,
            m22,
            tx,
            ty,
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct CanonicalEntries {
    pub d: i64,
    pub a: i64,
    pub b: i64,
}

impl From<&Canonical64> for CanonicalEntries {
    fn from(c: &Canonical64) -> Self {
        Self {
            d: c.d(),
            a: c.a(),
            b: c.b(),
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct AnalyzeReport {
    pub command: String,
    pub triangle: Tri,
    pub twice_area: i64,
    pub boundary: i64,
    pub interior_pick: i64,
    pub interior_scan: i64,
    pub interior_points: Vec<Pair>,
    pub collinear: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct NormalizeReport {
    pub command: String,
    pub triangle: Tri,
    pub canonical: CanonicalEntries,
    pub witness: MapEntries,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct ClassifyReport {
    pub command: String,
    pub k: i64,
    pub method: String,
    pub is_2_collinear: bool,
    pub candidate_as: Vec<i64>,
    pub witness: Option<Tri>,
    pub witness_interior: Option<Vec<Pair>>,
}

impl ClassifyReport {
    pub fn from_result(r: &classifier::ClassificationResult<i64>) -> Self {
        let method = match r.method {
            classifier::Method::BruteForce => "bruteforce",
            classifier::Method::Theorem => "theorem",
            classifier::Method::Both => "both",
        };
        Self {
            command: "classify".to_string(),
            k: r.k,
            method: method.to_string(),
            is_2_collinear: r.is_2_collinear,
            candidate_as: r.candidate_as.clone(),
            witness: r.witness.as_ref().map(tri),
            witness_interior: r
                .witness_interior
                .as_ref()
                .map(|ps| ps.iter().copied().map(pair).collect()),
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct WitnessReport {
    pub command: String,
    pub k: i64,
    pub is_2_collinear: bool,
    pub witness: Option<Tri>,
    pub witness_interior: Option<Vec<Pair>>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct TotientReport {
    pub command: String,
    pub k: i64,
    pub m: i64,
    pub value: i64,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct DsetReport {
    pub command: String,
    pub n: i64,
    pub size: i64,
    pub members: Vec<i64>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct SurveyEntry {
    pub k: i64,
    pub is_2_collinear: bool,
    pub witness_a: Option<i64>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct SurveyReport {
    pub command: String,
    pub k_min: i64,
    pub k_max: i64,
    pub results: Vec<SurveyEntry>,
    pub two_collinear: Vec<i64>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct PickCheckReport {
    pub command: String,
    pub samples: u64,
    pub seed: u64,
    pub coord_min: i64,
    pub coord_max: i64,
    pub mismatches: u64,
    pub agree: bool,
}

#[derive(PartialEq, Debug, Clone)]
pub enum Report {
    Analyze(AnalyzeReport),
    Normalize(NormalizeReport),
    Classify(ClassifyReport),
    Witness(WitnessReport),
    Totient(TotientReport),
    Dset(DsetReport),
    Survey(SurveyReport),
    PickCheck(PickCheckReport),
}

impl Report {
    pub fn to_json(&self) -> String {
        let json = match self {
            Report::Analyze(r) => serde_json::to_string_pretty(r),
            Report::Normalize(r) => serde_json::to_string_pretty(r),
            Report::Classify(r) => serde_json::to_string_pretty(r),
            Report::Witness(r) => serde_json::to_string_pretty(r),
            Report::Totient(r) => serde_json::to_string_pretty(r),
            Report::Dset(r) => serde_json::to_string_pretty(r),
            Report::Survey(r) => serde_json::to_string_pretty(r),
            Report::PickCheck(r) => serde_json::to_string_pretty(r),
        };
        json.expect("reports contain only serializable integers")
    }

    pub fn to_text(&self) -> String {
        match self {
            Report::Analyze(r) => [
                format!("triangle: {}", fmt_pairs(&r.triangle)),
                format!("twice_area: {}", r.twice_area),
                format!("boundary: {}", r.boundary),
                format!("interior_pick: {}", r.interior_pick),
                format!("interior_scan: {}", r.interior_scan),
                format!("interior_points: {}", fmt_pairs(&r.interior_points)),
                format!("collinear: {}", r.collinear),
            ]
            .join("\n"),
            Report::Normalize(r) => [
                format!("triangle: {}", fmt_pairs(&r.triangle)),
                format!(
                    "canonical: d={} a={} b={}",
                    r.canonical.d, r.canonical.a, r.canonical.b
                ),
                format!(
                    "witness_matrix: [[{}, {}], [{}, {}]]",
                    r.witness.m11, r.witness.m12, r.witness.m21, r.witness.m22
                ),
                format!("witness_translation: ({}, {})", r.witness.tx, r.witness.ty),
            ]
            .join("\n"),
            Report::Classify(r) => {
                let mut lines = vec![
                    format!("k: {}", r.k),
                    format!("method: {}", r.method),
                    format!("is_2_collinear: {}", r.is_2_collinear),
                    format!("candidate_as: {}", fmt_ints(&r.candidate_as)),
                ];
                if let Some(w) = &r.witness {
                    lines.push(format!("witness: {}", fmt_pairs(w)));
                }
                if let Some(ps) = &r.witness_interior {
                    lines.push(format!("witness_interior: {}", fmt_pairs(ps)));
                }
                lines.join("\n")
            }
            Report::Witness(r) => {
                let mut lines = vec![
                    format!("k: {}", r.k),
                    format!("is_2_collinear: {}", r.is_2_collinear),
                ];
                match (&r.witness, &r.witness_interior) {
                    (Some(w), Some(ps)) => {
                        lines.push(format!("witness: {}", fmt_pairs(w)));
                        lines.push(format!("witness_interior: {}", fmt_pairs(ps)));
                    }
                    _ => lines.push(format!(
                        "no witness: every B=3, I={} triangle has collinear interior points",
                        r.k
                    )),
                }
                lines.join("\n")
            }
            Report::Totient(r) => format!("phi({}, {}) = {}", r.k, r.m, r.value),
            Report::Dset(r) => [
                format!("n: {}", r.n),
                format!("size: {}", r.size),
                format!("members: {}", fmt_ints(&r.members)),
            ]
            .join("\n"),
            Report::Survey(r) => {
                let mut lines: Vec<String> = r
                    .results
                    .iter()
                    .map(|e| match e.witness_a {
                        Some(a) => format!("k={} not 2-collinear (witness a={})", e.k, a),
                        None => format!("k={} 2-collinear", e.k),
                    })
                    .collect();
                lines.push(format!("two_collinear: {}", fmt_ints(&r.two_collinear)));
                lines.join("\n")
            }
            Report::PickCheck(r) => [
                format!("samples: {}", r.samples),
                format!("seed: {}", r.seed),
                format!("coord_range: [{}, {}]", r.coord_min, r.coord_max),
                format!("mismatches: {}", r.mismatches),
                format!("agree: {}", r.agree),
            ]
            .join("\n"),
        }
    }
}
