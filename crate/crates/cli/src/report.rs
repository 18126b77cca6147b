//! On-disk instance files and the JSON reports the commands emit.

use serde::{Deserialize, Serialize};
use uvote::model::Block;
use uvote::solvers::Algorithm;

/// Instance file: `{"probs": [...]}` with an optional `"name"`.
#[derive(Debug, Serialize, Deserialize)]
pub struct InstanceFile {
    pub probs: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

/// Report of `solve`: the chosen ordering (0-based original indices), its
/// probabilities in flip order, and the expected cost.
#[derive(Debug, Serialize)]
pub struct SolveReportFile {
    pub algorithm: Algorithm,
    pub ordering: Vec<usize>,
    pub probs: Vec<f64>,
    /// Absent only for `greedy` on a single coin, where the cost model does
    /// not apply.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cost: Option<f64>,
    pub candidates: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nongreedy_position: Option<usize>,
    pub time_ms: f64,
}

/// Report of `cost`: the evaluated ordering with its block decomposition and
/// crossover point.
#[derive(Debug, Serialize)]
pub struct CostReportFile {
    pub algorithm: &'static str,
    pub ordering: Vec<usize>,
    pub probs: Vec<f64>,
    pub cost: f64,
    pub blocks: Vec<Block>,
    pub crossover_point: usize,
    pub time_ms: f64,
}

/// Report of `adaptive`: the best first coin and the flip order of the heads
/// branch (first coin, then the rest ascending).
#[derive(Debug, Serialize)]
pub struct AdaptiveReportFile {
    pub algorithm: &'static str,
    pub first: usize,
    pub cost: f64,
    pub ordering: Vec<usize>,
    pub probs: Vec<f64>,
    pub time_ms: f64,
}

/// Report of `gap`.
#[derive(Debug, Serialize)]
pub struct GapReportFile {
    pub algorithm: &'static str,
    pub nonadaptive_cost: f64,
    pub adaptive_cost: f64,
    pub ratio: f64,
    pub ordering: Vec<usize>,
    pub probs: Vec<f64>,
    pub adaptive_first: usize,
    pub time_ms: f64,
}

/// Report of `simulate`.
#[derive(Debug, Serialize)]
pub struct SimulateReportFile {
    pub algorithm: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ordering: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first: Option<usize>,
    pub mean_flips: f64,
    pub std_error: f64,
    pub trials: u64,
    pub seed: u64,
    pub time_ms: f64,
}
