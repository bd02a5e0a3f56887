//! Serialized forms of command output. Everything written can be read back
//! into these types.

use serde::{Deserialize, Serialize};

use super::{CliError, Family};
use crate::diagnostics::Summary;
use crate::measures::{BaseMeasure, DegeneracyCause, Process};

/// One CSV line of `sample` output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PathRow {
    pub path_id: usize,
    pub x: f64,
    #[serde(rename = "F")]
    pub f: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleConfig {
    pub process: Process,
    pub base: BaseMeasure,
    pub paths: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegeneratePath {
    pub path_id: usize,
    pub index: usize,
    pub cause: DegeneracyCause,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleOutput {
    pub config: SampleConfig,
    pub grid: Vec<f64>,
    pub paths: Vec<Vec<f64>>,
    pub degenerate_paths: usize,
    pub degeneracy: Vec<DegeneratePath>,
}

impl SampleOutput {
    pub fn rows(&self) -> impl Iterator<Item = PathRow> + '_ {
        self.paths.iter().enumerate().flat_map(move |(path_id, values)| {
            self.grid.iter().zip(values).map(move |(&x, &f)| PathRow { path_id, x, f })
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareConfig {
    pub family: Family,
    pub n: usize,
    pub m: Option<usize>,
    pub stick_n: usize,
    pub paths: usize,
    pub base: BaseMeasure,
    pub grid: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareCell {
    pub alpha: Option<f64>,
    pub theta: f64,
    pub new: Summary,
    pub stick: Summary,
    pub degenerate_paths: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareReport {
    pub config: CompareConfig,
    pub cells: Vec<CompareCell>,
    pub seed: u64,
}

/// One CSV line of `compare` output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareRow {
    pub alpha: Option<f64>,
    pub theta: f64,
    pub method: String,
    pub max_mean_error: Option<f64>,
    pub max_sd_error: Option<f64>,
    pub paths: usize,
    pub degenerate_paths: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LemmaRow {
    pub i: usize,
    pub alpha: f64,
    pub theta: f64,
    pub prob: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prob_mc: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub se: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrderRow {
    pub i: usize,
    pub prob: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrderReport {
    pub process: Process,
    pub reps: usize,
    pub seed: u64,
    pub degenerate_paths: usize,
    pub rows: Vec<OrderRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MomentsRow {
    #[serde(rename = "hA")]
    pub h_a: f64,
    pub mean: f64,
    pub variance: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<f64>,
}

/// Pretty JSON with a trailing newline.
pub fn json<T: Serialize>(value: &T) -> Result<Vec<u8>, CliError> {
    let mut out = serde_json::to_vec_pretty(value)?;
    out.push(b'\n');
    Ok(out)
}

/// CSV with a header derived from the first row; every row must have the
/// same optional fields present.
pub fn csv<T: Serialize>(rows: impl IntoIterator<Item = T>, empty_header: &[&str]) -> Result<Vec<u8>, CliError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    let mut any = false;
    for r in rows {
        w.serialize(r)?;
        any = true;
    }
    if !any {
        w.write_record(empty_header)?;
    }
    w.into_inner().map_err(|e| CliError::Io(e.into_error()))
}
