use std::collections::HashMap;
use std::path::Path as FsPath;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::balance::balanced_weights;
use super::metrics::{coverage, mean, normalize_objectives, percent_error, quantile, unique_solutions, DEFAULT_COVERAGE_SAMPLES};
use super::record::{write_records_csv, SolutionRecord};
use super::solver::SolverKind;
use crate::env::{build_prm, load_grid, GridEnvironment, PrmConfig, RiskObjective, CLUTTERED_MAP, CLUTTERED_RISK_MAP, MAZE_MAP};
use crate::error::{Error, Result};
use crate::graph::{euclid, CostVector, MoGraph, WeightVector};
use crate::instances::random_simplex_weight;
use crate::lns::LnsParams;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightMode {
    /// One balanced weight per instance.
    #[default]
    Balanced,
    /// `weights_per_trial` uniform random weights per instance.
    Random,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct BenchmarkConfig {
    /// Fixture names (`maze`, `cluttered`, `cluttered-risk`) or map file paths.
    pub maps: Vec<String>,
    pub prm_nodes: Vec<usize>,
    pub k_nn: usize,
    pub risk: RiskObjective,
    pub solvers: Vec<SolverKind>,
    pub trials: usize,
    pub seed: u64,
    pub weights: WeightMode,
    pub weights_per_trial: usize,
    /// Solver used to compute balanced weights.
    pub balance_solver: SolverKind,
    /// Minimum start–goal distance as a fraction of the roadmap diagonal.
    pub min_separation: f64,
    /// Overrides applied to the per-instance LNS defaults.
    pub lns: Option<serde_json::Value>,
    pub coverage_samples: usize,
    /// Record wall-clock times. With `false` the report is fully
    /// reproducible byte for byte.
    pub timing: bool,
    /// Worker threads; 0 picks the rayon default.
    pub jobs: usize,
}

impl Default for BenchmarkConfig {
    fn default() -> Self {
        Self {
            maps: vec!["maze".into()],
            prm_nodes: vec![300],
            k_nn: 10,
            risk: RiskObjective::Auto,
            solvers: vec![SolverKind::Ws, SolverKind::Wm, SolverKind::WmLns],
            trials: 10,
            seed: 0,
            weights: WeightMode::Balanced,
            weights_per_trial: 1,
            balance_solver: SolverKind::Wm,
            min_separation: 0.5,
            lns: None,
            coverage_samples: DEFAULT_COVERAGE_SAMPLES,
            timing: true,
            jobs: 0,
        }
    }
}

impl BenchmarkConfig {
    pub fn from_json_str(text: &str) -> Result<Self> {
        let c: Self = serde_json::from_str(text).map_err(|e| Error::Config(format!("bad benchmark config: {e}")))?;
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |m: &str| Err(Error::Config(m.to_string()));
        if self.solvers.is_empty() {
            return fail("benchmark needs at least one solver");
        }
        if self.maps.is_empty() || self.prm_nodes.is_empty() {
            return fail("benchmark needs at least one map and one PRM size");
        }
        if self.trials == 0 || self.weights_per_trial == 0 {
            return fail("trials and weights_per_trial must be positive");
        }
        if !(0.0..=1.0).contains(&self.min_separation) {
            return fail("min_separation must lie in [0, 1]");
        }
        if let Some(o) = &self.lns {
            LnsParams::default().with_overrides(o)?;
        }
        for &n in &self.prm_nodes {
            PrmConfig { node_count: n, k_nn: self.k_nn, ..PrmConfig::default() }.validate()?;
        }
        Ok(())
    }
}

/// Loads a map by fixture name or file path.
pub fn load_map(name: &str) -> Result<GridEnvironment> {
    match name {
        "maze" => load_grid(MAZE_MAP),
        "cluttered" => load_grid(CLUTTERED_MAP),
        "cluttered-risk" => load_grid(CLUTTERED_RISK_MAP),
        path => GridEnvironment::read(path),
    }
}

/// Random start and goal at least `min_separation` × the roadmap diagonal
/// apart; the farthest pair seen is used if no sampled pair qualifies.
pub fn pick_endpoints<R: Rng + ?Sized>(graph: &MoGraph, min_separation: f64, rng: &mut R) -> (usize, usize) {
    let n = graph.n_vertices();
    let Some(pos) = graph.positions() else {
        let s = rng.random_range(0..n);
        return (s, rng.random_range(0..n));
    };
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for p in pos {
        for i in 0..2 {
            lo[i] = lo[i].min(p[i]);
            hi[i] = hi[i].max(p[i]);
        }
    }
    let need = min_separation * euclid(lo, hi);
    let mut best = (0, 0, -1.0);
    for _ in 0..1000 {
        let (s, g) = (rng.random_range(0..n), rng.random_range(0..n));
        let d = euclid(pos[s], pos[g]);
        if s != g && d >= need {
            return (s, g);
        }
        if d > best.2 {
            best = (s, g, d);
        }
    }
    (best.0, best.1)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SolverSummary {
    pub solver: String,
    pub runs: usize,
    pub failures: usize,
    pub mean_error_pct: Option<f64>,
    pub median_error_pct: Option<f64>,
    pub p90_error_pct: Option<f64>,
    pub max_error_pct: Option<f64>,
    pub mean_runtime_s: Option<f64>,
    /// Mean of per-run runtime over the WS runtime on the same weight.
    pub mean_runtime_ratio: Option<f64>,
    /// Mean per-instance coverage (random weight mode only).
    pub coverage: Option<f64>,
    /// Mean per-instance unique Pareto solutions (random weight mode only).
    pub unique_solutions: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchmarkReport {
    pub config: BenchmarkConfig,
    pub summaries: Vec<SolverSummary>,
    pub records: Vec<SolutionRecord>,
}

impl BenchmarkReport {
    pub fn summary(&self, solver: SolverKind) -> Option<&SolverSummary> {
        let name = solver.to_string();
        self.summaries.iter().find(|s| s.solver == name)
    }

    pub fn to_json_string(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn write_csv<W: std::io::Write>(&self, out: W) -> Result<()> {
        write_records_csv(&self.records, out)
    }

    /// Writes `<path>` (JSON) and the CSV next to it with a `.csv` extension.
    pub fn write_files(&self, path: impl AsRef<FsPath>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.to_json_string()?)?;
        self.write_csv(std::fs::File::create(path.with_extension("csv"))?)
    }
}

struct Job {
    map: usize,
    nodes: usize,
    trial: usize,
    seed: u64,
}

fn run_job(config: &BenchmarkConfig, env: &GridEnvironment, map_name: &str, job: &Job) -> Vec<SolutionRecord> {
    let instance = format!("{map_name}/n{}/t{}", job.nodes, job.trial);
    let failed = |msg: String| {
        config
            .solvers
            .iter()
            .map(|s| SolutionRecord {
                instance: instance.clone(),
                trial: job.trial,
                solver: s.to_string(),
                seed: job.seed,
                weights: Vec::new(),
                path: None,
                cost: None,
                wm: None,
                ws: None,
                error_pct: None,
                runtime_s: 0.0,
                status: msg.clone(),
            })
            .collect::<Vec<_>>()
    };
    let prm = PrmConfig { node_count: job.nodes, k_nn: config.k_nn, seed: job.seed, risk: config.risk, ..PrmConfig::default() };
    let graph = match build_prm(env, &prm) {
        Ok(g) => g,
        Err(e) => return failed(e.to_string()),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(job.seed.wrapping_add(1));
    let (s, g) = pick_endpoints(&graph, config.min_separation, &mut rng);
    let n = graph.n_objectives();
    let weights: Vec<WeightVector> = match config.weights {
        WeightMode::Balanced => match balanced_weights(&graph, s, g, config.balance_solver) {
            Ok(w) => vec![w],
            Err(e) => return failed(e.to_string()),
        },
        WeightMode::Random => (0..config.weights_per_trial).map(|_| random_simplex_weight(&mut rng, n)).collect(),
    };
    let mut lns = LnsParams::for_objectives(n);
    if let Some(o) = &config.lns {
        lns = lns.with_overrides(o).expect("validated");
    }

    let mut out = Vec::new();
    for (wi, w) in weights.iter().enumerate() {
        let lns_seed = job.seed.wrapping_add(wi as u64);
        let mut batch: Vec<SolutionRecord> = config
            .solvers
            .iter()
            .map(|solver| {
                let (res, secs) = solver.solve_timed(&graph, s, g, w, &lns, lns_seed);
                let secs = if config.timing { secs } else { 0.0 };
                SolutionRecord::from_result(&instance, job.trial, &solver.to_string(), lns_seed, w, &res, secs)
            })
            .collect();
        let exact_name = SolverKind::Wm.to_string();
        if let Some(opt) = batch.iter().find(|r| r.solver == exact_name).and_then(|r| r.wm) {
            for r in &mut batch {
                r.error_pct = r.wm.and_then(|v| percent_error(v, opt).ok());
            }
        }
        out.extend(batch);
    }
    out
}

/// Builds every (map, PRM size, trial) instance, runs all solvers on it and
/// aggregates per-solver statistics. Instances run in parallel; results are
/// assembled in job order, so the report does not depend on scheduling.
pub fn run_benchmark(config: &BenchmarkConfig) -> Result<BenchmarkReport> {
    config.validate()?;
    let envs: Vec<GridEnvironment> = config.maps.iter().map(|m| load_map(m)).collect::<Result<_>>()?;
    let mut seeder = ChaCha8Rng::seed_from_u64(config.seed);
    let mut jobs = Vec::new();
    for map in 0..envs.len() {
        for &nodes in &config.prm_nodes {
            for trial in 0..config.trials {
                jobs.push(Job { map, nodes, trial, seed: seeder.random() });
            }
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::Config(format!("cannot start worker pool: {e}")))?;
    let per_job: Vec<Vec<SolutionRecord>> = pool.install(|| {
        jobs.par_iter()
            .map(|j| run_job(config, &envs[j.map], &config.maps[j.map], j))
            .collect()
    });
    let summaries = summarize(config, &per_job);
    Ok(BenchmarkReport {
        config: config.clone(),
        summaries,
        records: per_job.into_iter().flatten().collect(),
    })
}

fn summarize(config: &BenchmarkConfig, per_job: &[Vec<SolutionRecord>]) -> Vec<SolverSummary> {
    let ws_name = SolverKind::Ws.to_string();
    let mut coverage_by: HashMap<String, Vec<f64>> = HashMap::new();
    let mut unique_by: HashMap<String, Vec<f64>> = HashMap::new();
    if config.weights == WeightMode::Random {
        for recs in per_job {
            let ok: Vec<&SolutionRecord> = recs.iter().filter(|r| r.is_ok()).collect();
            let all: Vec<CostVector> = ok.iter().filter_map(|r| r.cost_vector()).collect();
            let normalized = normalize_objectives(&all);
            for solver in &config.solvers {
                let name = solver.to_string();
                let idx: Vec<usize> = (0..ok.len()).filter(|&i| ok[i].solver == name).collect();
                let part: Vec<Vec<f64>> = idx.iter().map(|&i| normalized[i].clone()).collect();
                let costs: Vec<CostVector> = idx.iter().map(|&i| all[i].clone()).collect();
                coverage_by.entry(name.clone()).or_default().push(coverage(&part, config.coverage_samples, config.seed));
                unique_by.entry(name).or_default().push(unique_solutions(&costs) as f64);
            }
        }
    }
    config
        .solvers
        .iter()
        .map(|solver| {
            let name = solver.to_string();
            let recs: Vec<&SolutionRecord> = per_job.iter().flatten().filter(|r| r.solver == name).collect();
            let errors: Vec<f64> = recs.iter().filter_map(|r| r.error_pct).collect();
            let times: Vec<f64> = recs.iter().filter(|r| r.is_ok()).map(|r| r.runtime_s).collect();
            let mut ratios = Vec::new();
            if config.timing {
                for recs in per_job {
                    for r in recs.iter().filter(|r| r.solver == name && r.is_ok()) {
                        let base = recs
                            .iter()
                            .find(|b| b.solver == ws_name && b.seed == r.seed && b.weights == r.weights && b.is_ok());
                        if let Some(b) = base.filter(|b| b.runtime_s > 0.0) {
                            ratios.push(r.runtime_s / b.runtime_s);
                        }
                    }
                }
            }
            SolverSummary {
                solver: name.clone(),
                runs: recs.len(),
                failures: recs.iter().filter(|r| !r.is_ok()).count(),
                mean_error_pct: mean(&errors),
                median_error_pct: quantile(&errors, 0.5),
                p90_error_pct: quantile(&errors, 0.9),
                max_error_pct: errors.iter().copied().reduce(f64::max),
                mean_runtime_s: if config.timing { mean(&times) } else { None },
                mean_runtime_ratio: mean(&ratios),
                coverage: coverage_by.get(&name).and_then(|v| mean(v)),
                unique_solutions: unique_by.get(&name).and_then(|v| mean(v)),
            }
        })
        .collect()
}
