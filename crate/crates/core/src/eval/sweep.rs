use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::metrics::{coverage, normalize_objectives, unique_solutions};
use super::record::SolutionRecord;
use super::solver::SolverKind;
use crate::graph::{CostVector, MoGraph, WeightVector};
use crate::instances::random_simplex_weight;
use crate::lns::LnsParams;

/// Uniform random weights on the simplex, reproducible from `seed`.
pub fn sweep_weights(n_objectives: usize, trials: usize, seed: u64) -> Vec<WeightVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials).map(|_| random_simplex_weight(&mut rng, n_objectives)).collect()
}

/// Runs `solver` once per weight. Failed trials are kept as records.
pub fn run_sweep(
    graph: &MoGraph,
    start: usize,
    goal: usize,
    solver: SolverKind,
    weights: &[WeightVector],
    lns: &LnsParams,
    seed: u64,
) -> Vec<SolutionRecord> {
    let name = solver.to_string();
    weights
        .iter()
        .enumerate()
        .map(|(t, w)| {
            let trial_seed = seed.wrapping_add(t as u64);
            let (res, secs) = solver.solve_timed(graph, start, goal, w, lns, trial_seed);
            SolutionRecord::from_result("sweep", t, &name, trial_seed, w, &res, secs)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepSummary {
    pub solver: String,
    pub trials: usize,
    pub failures: usize,
    pub coverage: f64,
    pub unique_solutions: usize,
}

/// Coverage and unique-solution counts for several sweeps of the same
/// instance, normalized jointly so the coverages are comparable.
pub fn summarize_sweeps(sweeps: &[&[SolutionRecord]], samples: usize, seed: u64) -> Vec<SweepSummary> {
    let costs: Vec<Vec<CostVector>> = sweeps
        .iter()
        .map(|recs| recs.iter().filter_map(SolutionRecord::cost_vector).collect())
        .collect();
    let all: Vec<CostVector> = costs.iter().flatten().cloned().collect();
    let normalized = normalize_objectives(&all);
    let mut offset = 0;
    sweeps
        .iter()
        .zip(&costs)
        .map(|(recs, c)| {
            let part = &normalized[offset..offset + c.len()];
            offset += c.len();
            SweepSummary {
                solver: recs.first().map(|r| r.solver.clone()).unwrap_or_default(),
                trials: recs.len(),
                failures: recs.len() - c.len(),
                coverage: coverage(part, samples, seed),
                unique_solutions: unique_solutions(c),
            }
        })
        .collect()
}
