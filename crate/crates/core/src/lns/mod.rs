//! Weighted-maximum large neighbourhood search.
//!
//! Starting from a greedy beam-search path, each iteration removes a
//! contiguous interior segment picked by one of five destroy heuristics,
//! reconnects the breakpoints with a weighted-sum A* under a fresh repair
//! weight and decides with a simulated-annealing test whether to keep the
//! result. Heuristic choice adapts to the rewards each heuristic earns.
//!
//! ```
//! use wmlns::graph::WeightVector;
//! use wmlns::instances::three_corridor_gadget;
//! use wmlns::lns::{solve, LnsParams};
//!
//! let (graph, s, g) = three_corridor_gadget();
//! let w = WeightVector::uniform(2);
//! let path = solve(&graph, s, g, &w, &LnsParams::default().with_seed(7)).unwrap();
//! assert_eq!(path.cost().as_slice(), &[6.0, 6.0]);
//! ```

mod adaptive;
mod anneal;
mod destroy;
mod params;
mod repair;
mod simplex;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use adaptive::{roulette, AdaptiveSelector};
pub use anneal::{accept_delta, initial_temperature, relative_change, Annealer, Decision};
pub use destroy::{destroy, k_bounds, sample_k, select_window, window_scores, DestroyHeuristic, PartialSolution};
pub use params::LnsParams;
pub use repair::{gps_poll_set, gps_repair, repair, sample_repair_weight, GpsMesh};
use repair::{gps_repair_in, Workspace};
pub use simplex::project_simplex;

use crate::error::{Error, Result};
use crate::graph::{weighted_max, MoGraph, Path, WeightVector, WmKey};
use crate::solvers::wm_beam;

/// One row of the search trace.
#[derive(Clone, Debug, Serialize)]
pub struct IterationRecord {
    pub iteration: usize,
    pub heuristic: DestroyHeuristic,
    pub removed: usize,
    pub decision: Decision,
    pub reward: f64,
    pub current_wm: f64,
    pub best_wm: f64,
    pub temperature: f64,
    pub reheated: bool,
}

#[derive(Clone, Debug)]
pub struct LnsRun {
    pub best: Path,
    pub initial: Path,
    pub iterations: usize,
    pub trace: Vec<IterationRecord>,
    pub heuristic_scores: [f64; 5],
}

/// Greedy starting solution: WM beam search with beam width `beam`.
pub fn initial_solution(graph: &MoGraph, start: usize, goal: usize, w: &WeightVector, beam: usize) -> Result<Path> {
    wm_beam(graph, start, goal, w, beam)
}

/// Runs WM-LNS and returns the best path found.
pub fn solve(graph: &MoGraph, start: usize, goal: usize, w: &WeightVector, params: &LnsParams) -> Result<Path> {
    solve_with_trace(graph, start, goal, w, params).map(|r| r.best)
}

pub fn solve_with_trace(
    graph: &MoGraph,
    start: usize,
    goal: usize,
    w: &WeightVector,
    params: &LnsParams,
) -> Result<LnsRun> {
    params.validate()?;
    let n = graph.n_objectives();
    if w.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: w.len() });
    }
    let initial = initial_solution(graph, start, goal, w, params.initial_beam_width)?;
    let mut run = LnsRun {
        best: initial.clone(),
        initial: initial.clone(),
        iterations: 0,
        trace: Vec::new(),
        heuristic_scores: [1.0; 5],
    };
    if start == goal {
        return Ok(run);
    }

    let ws = w.as_slice();
    let key = |p: &Path| WmKey::of(p.cost().as_slice(), ws);
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut selector = AdaptiveSelector::new(params.alns_window, params.reaction_factor);
    let mut annealer = Annealer::new(initial_temperature(params.start_temp_deterioration)?, params.cooling_rate);
    let reheat_after = params.reheat_after();
    let mut workspace = Workspace::new(graph);

    let mut current = initial;
    let mut current_key = key(&current);
    let mut best_key = current_key;
    let mut non_improving = 0;
    let mut since_reheat = 0;

    for iteration in 0..params.max_iterations {
        if non_improving >= params.non_improving_limit {
            break;
        }
        let heuristic = selector.select(&mut rng);
        let k = sample_k(current.len(), params, &mut rng);
        let partial = if k == 0 {
            PartialSolution::endpoints(&current)
        } else {
            destroy(graph, &current, heuristic, k, w, &mut rng)?
        };
        let repaired = if n <= 2 {
            let w_repair = sample_repair_weight(n, params.log_weight_exponent_min, &mut rng);
            workspace.repair(graph, &partial, &w_repair)
        } else {
            gps_repair_in(&mut workspace, graph, &partial, w, params, &mut rng).map(|(p, _)| p)
        };

        let mut reward = 0.0;
        let mut new_best = false;
        let decision = match repaired {
            Err(Error::RepairFailed) => Decision::RepairFailed,
            Err(e) => return Err(e),
            Ok(candidate) => {
                debug_assert!(candidate.validate(graph).is_ok());
                let cand_key = key(&candidate);
                let delta = relative_change(cand_key.wm, current_key.wm);
                let mut decision = accept_delta(delta, annealer.temperature(), &mut rng);
                // Equal WM but a smaller cost sum is still an improvement.
                if decision == Decision::Skip && cand_key < current_key {
                    decision = Decision::Accept;
                }
                if decision == Decision::Accept {
                    reward = if cand_key < best_key {
                        new_best = true;
                        best_key = cand_key;
                        run.best = candidate.clone();
                        params.reward_global_best
                    } else if cand_key < current_key {
                        params.reward_improvement
                    } else {
                        params.reward_accepted
                    };
                    current = candidate;
                    current_key = cand_key;
                }
                decision
            }
        };
        selector.record(heuristic, reward);

        if new_best {
            non_improving = 0;
            since_reheat = 0;
        } else {
            non_improving += 1;
            since_reheat += 1;
        }
        annealer.cool();
        let reheated = since_reheat >= reheat_after;
        if reheated {
            annealer.reheat();
            since_reheat = 0;
        }
        run.iterations = iteration + 1;
        run.trace.push(IterationRecord {
            iteration,
            heuristic,
            removed: k,
            decision,
            reward,
            current_wm: weighted_max(current.cost().as_slice(), ws),
            best_wm: best_key.wm,
            temperature: annealer.temperature(),
            reheated,
        });
    }
    run.heuristic_scores = *selector.scores();
    Ok(run)
}
