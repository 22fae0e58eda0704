//! Reference values for the worked examples, embedded from `golden/*.json`.
//!
//! The CLI's `paper-tables` command and the test suites read the same files.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::partition::Partition;

pub const PGL2_ORDERED: &str = include_str!("../golden/pgl2_ordered.json");
pub const PGL2_UNORDERED: &str = include_str!("../golden/pgl2_unordered.json");
pub const PLUS_MINUS: &str = include_str!("../golden/plus_minus.json");
pub const FIXED_DIMS: &str = include_str!("../golden/fixed_dims.json");
pub const GL2_ORBITS: &str = include_str!("../golden/gl2_orbits.json");

#[derive(Debug, Clone, Deserialize)]
pub struct PolyTable {
    pub title: String,
    pub variety: String,
    pub rows: Vec<PolyRow>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct PolyRow {
    pub n: usize,
    pub value: String,
}

#[derive(Debug, Clone, Deserialize)]
pub struct PlusMinusFormulas {
    pub title: String,
    pub formulas: Vec<PlusMinusFormula>,
}

/// `coefficients[λ][i]` multiplies `e(X/S_μ)` for the `i`-th `μ ⊢ n` in
/// canonical order.
#[derive(Debug, Clone, Deserialize)]
pub struct PlusMinusFormula {
    pub n: usize,
    coefficients: BTreeMap<String, Vec<i64>>,
}

impl PlusMinusFormula {
    pub fn coefficients(&self) -> BTreeMap<Partition, Vec<i64>> {
        self.coefficients
            .iter()
            .map(|(k, v)| (parse_key(k), v.clone()))
            .collect()
    }
}

#[derive(Debug, Clone, Deserialize)]
pub struct FixedDimTables {
    pub title: String,
    pub matrices: Vec<FixedDimGolden>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct FixedDimGolden {
    pub n: usize,
    pub dims: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct OrbitExamples {
    pub title: String,
    pub quotient: String,
    pub group: String,
    pub cases: Vec<OrbitCase>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct OrbitCase {
    pub n: usize,
    pub disputed: bool,
    #[serde(default)]
    pub note: Option<String>,
    coefficients: BTreeMap<String, String>,
    pub dim_pairing: String,
    pub quotient_by_sn: String,
    /// Present for disputed cases: the value recomputed from consistent
    /// inputs.
    #[serde(default)]
    pub derived_quotient_by_sn: Option<String>,
}

impl OrbitCase {
    pub fn coefficients(&self) -> BTreeMap<Partition, String> {
        self.coefficients
            .iter()
            .map(|(k, v)| (parse_key(k), v.clone()))
            .collect()
    }
}

fn parse_key(key: &str) -> Partition {
    key.parse()
        .unwrap_or_else(|e| panic!("bad partition key {key:?} in golden data: {e}"))
}

fn load<T: for<'de> Deserialize<'de>>(name: &str, text: &str) -> T {
    serde_json::from_str(text).unwrap_or_else(|e| panic!("golden file {name} is malformed: {e}"))
}

pub fn pgl2_ordered() -> PolyTable {
    load("pgl2_ordered.json", PGL2_ORDERED)
}

pub fn pgl2_unordered() -> PolyTable {
    load("pgl2_unordered.json", PGL2_UNORDERED)
}

pub fn plus_minus() -> PlusMinusFormulas {
    load("plus_minus.json", PLUS_MINUS)
}

pub fn fixed_dim_tables() -> FixedDimTables {
    load("fixed_dims.json", FIXED_DIMS)
}

pub fn gl2_orbits() -> OrbitExamples {
    load("gl2_orbits.json", GL2_ORBITS)
}
