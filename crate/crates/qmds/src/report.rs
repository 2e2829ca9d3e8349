//! Serializable report types. Field elements are written as `"0"` or `"g^k"`.

use std::collections::BTreeMap;

use qmds_core::quantum::{Family, QuantumParams, TableRow};
use qmds_core::verify::MdsMethod;
use qmds_core::{CodeMatrix, Elem, Field};
use serde::Serialize;

pub fn elem_str(x: Elem) -> String {
    x.to_string()
}

pub fn elems(xs: &[Elem]) -> Vec<String> {
    xs.iter().map(|&x| elem_str(x)).collect()
}

pub fn matrix(m: &CodeMatrix<'_>) -> Vec<Vec<String>> {
    m.row_iter().map(elems).collect()
}

pub fn family_name(f: Family) -> &'static str {
    match f {
        Family::A => "A",
        Family::B => "B",
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct RequestEcho {
    pub family: &'static str,
    pub p: u64,
    pub e: u32,
    pub s: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<u64>,
    pub k: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reps: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub unsafe_extended: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct FieldInfo {
    pub p: u64,
    pub e: u32,
    pub q: u64,
    /// Coefficients of the modulus from the constant term up, monic.
    pub modulus: Vec<u32>,
}

impl FieldInfo {
    pub fn of(field: &Field) -> Self {
        FieldInfo {
            p: field.p(),
            e: field.e(),
            q: field.q(),
            modulus: field.modulus().to_vec(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CodeSummary {
    pub n: u64,
    pub k: u64,
    pub claimed_distance: u64,
    /// Twist `t` of the trace scalars (family A).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub twist: Option<String>,
}

#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum MdsMethodName {
    Exhaustive,
    ColumnMinors,
    SkippedBudget,
}

impl From<MdsMethod> for MdsMethodName {
    fn from(m: MdsMethod) -> Self {
        match m {
            MdsMethod::Exhaustive => MdsMethodName::Exhaustive,
            MdsMethod::ColumnMinors => MdsMethodName::ColumnMinors,
            MdsMethod::SkippedBudget => MdsMethodName::SkippedBudget,
        }
    }
}

/// Distance when the exhaustive oracle ran, otherwise the minor verdict.
#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum MdsResult {
    Distance(usize),
    AllMinorsNonsingular(bool),
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CheckResults {
    pub full_rank: bool,
    pub criterion_grid_zero: bool,
    pub rows_orthogonal: bool,
    pub scalars_in_subfield: bool,
    pub mds_method: MdsMethodName,
    pub mds_result: Option<MdsResult>,
    pub mds_distance: Option<usize>,
    pub mds_column_minors: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemma3: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lagrange_oracle: Option<bool>,
}

#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
pub struct QuantumJson {
    pub n: u64,
    pub k: u64,
    pub d: u64,
    pub q: u64,
    pub mds: bool,
}

impl From<QuantumParams> for QuantumJson {
    fn from(p: QuantumParams) -> Self {
        QuantumJson {
            n: p.n,
            k: p.k,
            d: p.d,
            q: p.q,
            mds: p.mds,
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct MatrixDump {
    pub alpha: Vec<String>,
    pub v: Vec<String>,
    pub generator: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub request: RequestEcho,
    pub field: FieldInfo,
    pub code: CodeSummary,
    pub checks: CheckResults,
    /// False for extended family-B removals, which are verified but not covered by the theory.
    pub certified: bool,
    /// Present only when every structural check passed.
    pub quantum: Option<QuantumJson>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<BTreeMap<&'static str, f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<MatrixDump>,
}

/// Why a table row is or is not marked verified.
#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Verified,
    /// Structural checks passed but both MDS oracles were over budget.
    MdsSkippedBudget,
    Failed,
    NotRequested,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct TableRecord {
    pub family: &'static str,
    pub q: u64,
    pub s: u64,
    pub m: Option<u64>,
    pub lambda: Option<u64>,
    pub n: u64,
    pub k_classical: u64,
    pub quantum: [u64; 3],
    pub mds: bool,
    pub verified: bool,
    pub status: RowStatus,
    pub d_exceeds_half_q: bool,
}

impl TableRecord {
    pub fn new(row: &TableRow, status: RowStatus) -> Self {
        TableRecord {
            family: family_name(row.family),
            q: row.q,
            s: row.s,
            m: row.m,
            lambda: row.lambda,
            n: row.n,
            k_classical: row.k_classical,
            quantum: [row.quantum.n, row.quantum.k, row.quantum.d],
            mds: row.quantum.mds,
            verified: status == RowStatus::Verified,
            status,
            d_exceeds_half_q: row.d_exceeds_half_q,
        }
    }
}

/// Flat form of [`TableRecord`] for CSV.
#[derive(Debug, Serialize)]
pub struct CsvRecord<'a> {
    family: &'a str,
    q: u64,
    s: u64,
    m: Option<u64>,
    lambda: Option<u64>,
    n: u64,
    k_classical: u64,
    quantum_n: u64,
    quantum_k: u64,
    quantum_d: u64,
    mds: bool,
    verified: bool,
    status: RowStatus,
    d_exceeds_half_q: bool,
}

impl<'a> From<&'a TableRecord> for CsvRecord<'a> {
    fn from(r: &'a TableRecord) -> Self {
        CsvRecord {
            family: r.family,
            q: r.q,
            s: r.s,
            m: r.m,
            lambda: r.lambda,
            n: r.n,
            k_classical: r.k_classical,
            quantum_n: r.quantum[0],
            quantum_k: r.quantum[1],
            quantum_d: r.quantum[2],
            mds: r.mds,
            verified: r.verified,
            status: r.status,
            d_exceeds_half_q: r.d_exceeds_half_q,
        }
    }
}
