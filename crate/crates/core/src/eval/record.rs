use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{weighted_max, weighted_sum, CostVector, Path, WeightVector};

/// Outcome of one solver call.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub instance: String,
    pub trial: usize,
    pub solver: String,
    pub seed: u64,
    pub weights: Vec<f64>,
    pub path: Option<Vec<usize>>,
    pub cost: Option<Vec<f64>>,
    pub wm: Option<f64>,
    pub ws: Option<f64>,
    /// Percentage WM error against the exact solver, when it ran.
    pub error_pct: Option<f64>,
    pub runtime_s: f64,
    /// `ok`, `no-path` or an error message.
    pub status: String,
}

impl SolutionRecord {
    pub fn from_result(
        instance: &str,
        trial: usize,
        solver: &str,
        seed: u64,
        w: &WeightVector,
        result: &Result<Path>,
        runtime_s: f64,
    ) -> Self {
        let mut rec = Self {
            instance: instance.to_string(),
            trial,
            solver: solver.to_string(),
            seed,
            weights: w.as_slice().to_vec(),
            path: None,
            cost: None,
            wm: None,
            ws: None,
            error_pct: None,
            runtime_s,
            status: "ok".into(),
        };
        match result {
            Ok(p) => {
                let c = p.cost().as_slice();
                rec.wm = Some(weighted_max(c, w.as_slice()));
                rec.ws = Some(weighted_sum(c, w.as_slice()));
                rec.path = Some(p.vertices().to_vec());
                rec.cost = Some(c.to_vec());
            }
            Err(crate::Error::NoPath { .. }) => rec.status = "no-path".into(),
            Err(e) => rec.status = e.to_string(),
        }
        rec
    }

    pub fn is_ok(&self) -> bool {
        self.cost.is_some()
    }

    pub fn cost_vector(&self) -> Option<CostVector> {
        self.cost.as_ref().and_then(|c| CostVector::new(c.clone()).ok())
    }
}

fn join(v: &[f64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";")
}

/// Flat CSV view of a record; vectors are `;`-separated.
#[derive(Debug, Serialize)]
pub struct CsvRow<'a> {
    pub instance: &'a str,
    pub trial: usize,
    pub solver: &'a str,
    pub seed: u64,
    pub weights: String,
    pub cost: String,
    pub wm: Option<f64>,
    pub ws: Option<f64>,
    pub error_pct: Option<f64>,
    pub runtime_s: f64,
    pub path_len: Option<usize>,
    pub status: &'a str,
}

impl<'a> From<&'a SolutionRecord> for CsvRow<'a> {
    fn from(r: &'a SolutionRecord) -> Self {
        Self {
            instance: &r.instance,
            trial: r.trial,
            solver: &r.solver,
            seed: r.seed,
            weights: join(&r.weights),
            cost: r.cost.as_deref().map(join).unwrap_or_default(),
            wm: r.wm,
            ws: r.ws,
            error_pct: r.error_pct,
            runtime_s: r.runtime_s,
            path_len: r.path.as_ref().map(Vec::len),
            status: &r.status,
        }
    }
}

/// Writes records as CSV, one row per record.
pub fn write_records_csv<W: std::io::Write>(records: &[SolutionRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(CsvRow::from(r))?;
    }
    w.flush()?;
    Ok(())
}
