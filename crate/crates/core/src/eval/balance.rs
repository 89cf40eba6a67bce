use super::metrics::weighted_spread;
use super::solver::SolverKind;
use crate::error::Result;
use crate::graph::{weighted_max, MoGraph, WeightVector};
use crate::lns::LnsParams;

pub const BALANCE_ROUNDS: usize = 5;
/// Floor on an objective value, relative to the largest one, when inverting.
const BALANCE_FLOOR: f64 = 1e-3;

/// Weights under which the WM-optimal path has roughly equal weighted
/// objectives.
///
/// Starting from uniform weights, each round solves with `solver` and sets
/// `w_i ∝ 1 / F_i` for the returned path. The weight whose own solution has
/// the smallest relative spread `(max_i w_i F_i − min_i w_i F_i) / max_i w_i F_i`
/// is returned. Dividing by the maximum makes the comparison independent of
/// how large the weighted objectives are, which otherwise favours weights
/// that load an objective the path barely incurs.
pub fn balanced_weights(graph: &MoGraph, start: usize, goal: usize, solver: SolverKind) -> Result<WeightVector> {
    let n = graph.n_objectives();
    let params = LnsParams::for_objectives(n);
    let mut w = WeightVector::uniform(n);
    let mut best: Option<(f64, WeightVector)> = None;
    for _ in 0..BALANCE_ROUNDS {
        let path = solver.solve(graph, start, goal, &w, &params, 0)?;
        let f = path.cost().as_slice();
        let top_weighted = weighted_max(f, w.as_slice());
        let spread = if top_weighted > 0.0 { weighted_spread(f, w.as_slice()) / top_weighted } else { 0.0 };
        if best.as_ref().is_none_or(|(s, _)| spread < *s) {
            best = Some((spread, w.clone()));
        }
        let top = f.iter().copied().fold(0.0, f64::max);
        if top <= 0.0 {
            break;
        }
        let floor = BALANCE_FLOOR * top;
        let next = WeightVector::normalized(f.iter().map(|v| 1.0 / v.max(floor)).collect())?;
        if next == w {
            break;
        }
        w = next;
    }
    Ok(best.expect("at least one round").1)
}
