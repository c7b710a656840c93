//! Input schemas and their conversion into library types.

use std::fs;
use std::io::{self, Read};

use msd_core::{BoundaryState, CostProblem, DiscreteMeasure, Horizon, Order};
use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::CliError;

/// `{"n": int, "h": number, "d": int, "x": [[number; d]; n], "y": [[number; d]; n]}`
#[derive(Debug, Deserialize)]
pub struct ProblemJson {
    pub n: i64,
    pub h: f64,
    pub d: i64,
    pub x: Vec<Vec<f64>>,
    pub y: Vec<Vec<f64>>,
}

#[derive(Debug, Deserialize)]
pub struct TrajectoryJson {
    #[serde(flatten)]
    pub problem: ProblemJson,
    pub samples: SampleSpec,
}

/// Derivative order plus either a uniform grid size or explicit times.
#[derive(Debug, Deserialize)]
pub struct SampleSpec {
    pub k: i64,
    pub count: Option<u64>,
    pub times: Option<Vec<f64>>,
}

#[derive(Debug, Deserialize)]
pub struct TransportJson {
    pub n: i64,
    pub h: f64,
    pub d: i64,
    pub mu: Vec<Vec<Vec<f64>>>,
    pub nu: Vec<Vec<Vec<f64>>>,
}

pub fn read_source(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Schema(format!("reading standard input: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Schema(format!("reading {path}: {e}")))
    }
}

pub fn parse<T: DeserializeOwned>(text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Schema(format!("invalid input: {e}")))
}

pub fn order(n: i64) -> Result<Order, CliError> {
    let n_usize =
        usize::try_from(n).map_err(|_| CliError::Domain(format!("n: order {n} out of range")))?;
    Order::new(n_usize).map_err(|e| CliError::Domain(format!("n: {e}")))
}

pub fn horizon(h: f64) -> Result<Horizon, CliError> {
    Horizon::new(h).map_err(|e| CliError::Domain(format!("h: {e}")))
}

pub fn dimension(d: i64) -> Result<usize, CliError> {
    match usize::try_from(d) {
        Ok(d) if d >= 1 => Ok(d),
        _ => Err(CliError::Domain(format!(
            "d: dimension must be at least 1, got {d}"
        ))),
    }
}

pub fn state(
    field: &str,
    rows: &[Vec<f64>],
    n: usize,
    d: usize,
) -> Result<BoundaryState, CliError> {
    if rows.len() != n {
        return Err(CliError::Schema(format!(
            "{field}: expected {n} derivative rows, got {}",
            rows.len()
        )));
    }
    if let Some((k, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != d) {
        return Err(CliError::Schema(format!(
            "{field}[{k}]: expected {d} components, got {}",
            row.len()
        )));
    }
    BoundaryState::from_rows(rows).map_err(|e| CliError::Schema(format!("{field}: {e}")))
}

pub fn problem(p: &ProblemJson) -> Result<CostProblem, CliError> {
    let order = order(p.n)?;
    let horizon = horizon(p.h)?;
    let d = dimension(p.d)?;
    let start = state("x", &p.x, order.get(), d)?;
    let end = state("y", &p.y, order.get(), d)?;
    CostProblem::new(order, horizon, start, end).map_err(|e| CliError::Domain(e.to_string()))
}

pub fn measures(
    t: &TransportJson,
) -> Result<(DiscreteMeasure, DiscreteMeasure, Horizon), CliError> {
    let order = order(t.n)?;
    let horizon = horizon(t.h)?;
    let d = dimension(t.d)?;
    let build = |field: &str, atoms: &[Vec<Vec<f64>>]| -> Result<DiscreteMeasure, CliError> {
        let points = atoms
            .iter()
            .enumerate()
            .map(|(i, rows)| state(&format!("{field}[{i}]"), rows, order.get(), d))
            .collect::<Result<Vec<_>, _>>()?;
        DiscreteMeasure::new(points).map_err(|e| CliError::Domain(format!("{field}: {e}")))
    };
    Ok((build("mu", &t.mu)?, build("nu", &t.nu)?, horizon))
}
