//! Wire-format records emitted by the subcommands. Complex numbers are
//! [re, im] pairs; matrices are {rows, cols, entries} with row-major flat
//! entries.

use belldiag::classify::{Evidence, Verdict, VerdictKind};
use belldiag::matrix::Ket;
use belldiag::{ComplexMatrix64, SeparableEnsemble64};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ParamsJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_d: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambdas: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<[f64; 2]>,
}

impl MatrixJson {
    pub fn from_matrix(m: &ComplexMatrix64) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.entries().iter().map(|c| [c.re, c.im]).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BuildRecord {
    pub family: String,
    pub d: usize,
    pub params: ParamsJson,
    pub matrix: MatrixJson,
    pub trace: [f64; 2],
    pub min_eigenvalue: f64,
    pub symmetry_residuals: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessSummaryJson {
    pub d: usize,
    pub k: usize,
    pub pi: Vec<usize>,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NecessaryFailureJson {
    pub k: usize,
    pub subset: Vec<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct EvidenceJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub analytic_ppt_satisfied: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violated_pairs: Option<Vec<[usize; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_pt_eigenvalue: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub analytic_sep_satisfied: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violated_indices: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessSummaryJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition_terms: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition_error: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub necessary_failure: Option<NecessaryFailureJson>,
}

impl EvidenceJson {
    pub fn from_evidence(items: &[Evidence<f64>]) -> Self {
        let mut out = Self::default();
        for item in items {
            match item {
                Evidence::AnalyticPpt { satisfied, violated_pairs } => {
                    out.analytic_ppt_satisfied = Some(*satisfied);
                    if !violated_pairs.is_empty() {
                        out.violated_pairs =
                            Some(violated_pairs.iter().map(|&(i, j)| [i, j]).collect());
                    }
                }
                Evidence::NumericPptEig { min_eigenvalue } => {
                    out.min_pt_eigenvalue = Some(*min_eigenvalue);
                }
                Evidence::AnalyticSep { satisfied, violated_indices } => {
                    out.analytic_sep_satisfied = Some(*satisfied);
                    if !violated_indices.is_empty() {
                        out.violated_indices = Some(violated_indices.clone());
                    }
                }
                Evidence::WitnessViolation { spec, value } => {
                    out.witness = Some(WitnessSummaryJson {
                        d: spec.d(),
                        k: spec.k(),
                        pi: spec.pi().to_vec(),
                        value: *value,
                    });
                }
                Evidence::Decomposition { term_count, max_error } => {
                    out.decomposition_terms = Some(*term_count);
                    out.decomposition_error = Some(*max_error);
                }
                Evidence::NecessaryCondFail { k, subset } => {
                    out.necessary_failure =
                        Some(NecessaryFailureJson { k: *k, subset: subset.clone() });
                }
            }
        }
        out
    }
}

pub fn verdict_name(kind: VerdictKind) -> &'static str {
    match kind {
        VerdictKind::Separable => "Separable",
        VerdictKind::PptEntangled => "PptEntangled",
        VerdictKind::NptEntangled => "NptEntangled",
        VerdictKind::Undecided => "Undecided",
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifyRecord {
    pub family: String,
    pub d: usize,
    pub params: ParamsJson,
    pub verdict: String,
    pub evidence: EvidenceJson,
}

impl ClassifyRecord {
    pub fn new(family: &str, d: usize, params: ParamsJson, verdict: &Verdict<f64>) -> Self {
        Self {
            family: family.to_string(),
            d,
            params,
            verdict: verdict_name(verdict.kind).to_string(),
            evidence: EvidenceJson::from_evidence(&verdict.evidence),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub param: f64,
    pub verdict: String,
    pub min_pt_eig: f64,
    pub best_witness_value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub d: usize,
    pub k: usize,
    pub pi: Vec<usize>,
    pub family: String,
    pub params: ParamsJson,
    pub trace_value: f64,
    pub detected: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub w: f64,
    #[serde(rename = "ketA")]
    pub ket_a: Vec<[f64; 2]>,
    #[serde(rename = "ketB")]
    pub ket_b: Vec<[f64; 2]>,
}

fn ket_json(ket: &Ket<f64>) -> Vec<[f64; 2]> {
    ket.amplitudes().iter().map(|a| [a.re, a.im]).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecomposeRecord {
    pub family: String,
    pub d: usize,
    pub params: ParamsJson,
    pub term_count: usize,
    pub reconstruction_error: f64,
    pub terms: Vec<TermJson>,
}

impl DecomposeRecord {
    pub fn new(
        family: &str,
        d: usize,
        params: ParamsJson,
        ensemble: &SeparableEnsemble64,
        reconstruction_error: f64,
    ) -> Self {
        Self {
            family: family.to_string(),
            d,
            params,
            term_count: ensemble.term_count(),
            reconstruction_error,
            terms: ensemble
                .terms()
                .iter()
                .map(|t| TermJson { w: t.weight, ket_a: ket_json(&t.ket_a), ket_b: ket_json(&t.ket_b) })
                .collect(),
        }
    }
}
