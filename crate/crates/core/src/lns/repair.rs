//! Segment repair by weighted-sum A* and the repair-weight strategies.

use rand::Rng;

use super::destroy::PartialSolution;
use super::params::LnsParams;
use super::simplex::project_simplex;
use crate::error::{Error, Result};
use crate::graph::{MoGraph, Path, WeightVector, WmKey};
use crate::solvers::{ws_search_with, WsScratch};

/// Reconnects the breakpoints of `partial` with a weighted-sum A* under
/// `w_repair` and splices the segment in.
///
/// Interior vertices of the prefix and suffix are closed to the search, so
/// the spliced path is simple.
pub fn repair(graph: &MoGraph, partial: &PartialSolution, w_repair: &WeightVector) -> Result<Path> {
    Workspace::new(graph).repair(graph, partial, w_repair)
}

/// Buffers shared by the repairs of one LNS run.
pub(crate) struct Workspace {
    blocked: Vec<bool>,
    scratch: WsScratch,
}

impl Workspace {
    pub(crate) fn new(graph: &MoGraph) -> Self {
        Self { blocked: vec![false; graph.n_vertices()], scratch: WsScratch::default() }
    }

    pub(crate) fn repair(&mut self, graph: &MoGraph, partial: &PartialSolution, w_repair: &WeightVector) -> Result<Path> {
        repair_with_mask(graph, partial, w_repair, &mut self.blocked, &mut self.scratch)
    }
}

fn repair_with_mask(
    graph: &MoGraph,
    partial: &PartialSolution,
    w_repair: &WeightVector,
    blocked: &mut [bool],
    scratch: &mut WsScratch,
) -> Result<Path> {
    let (from, to) = partial.breakpoints();
    blocked.fill(false);
    for &v in &partial.prefix[..partial.prefix.len() - 1] {
        blocked[v] = true;
    }
    for &v in &partial.suffix[1..] {
        blocked[v] = true;
    }
    let (segment, seg_cost) =
        ws_search_with(graph, from, to, w_repair.as_slice(), Some(blocked), scratch).ok_or(Error::RepairFailed)?;

    let mut vertices = Vec::with_capacity(partial.prefix.len() + segment.len() + partial.suffix.len());
    vertices.extend_from_slice(&partial.prefix[..partial.prefix.len() - 1]);
    vertices.extend_from_slice(&segment);
    vertices.extend_from_slice(&partial.suffix[1..]);
    let mut cost = partial.prefix_cost.clone();
    cost += seg_cost.as_slice();
    cost += partial.suffix_cost.as_slice();
    Ok(Path::from_parts(vertices, cost))
}

/// Log-uniform repair weight: `v_i = 10^u_i` with `u_i ~ U[min_exp, 0]`,
/// normalized onto the simplex.
pub fn sample_repair_weight<R: Rng + ?Sized>(n: usize, min_exponent: f64, rng: &mut R) -> WeightVector {
    let raw: Vec<f64> = (0..n)
        .map(|_| 10f64.powf(rng.random_range(min_exponent..=0.0)))
        .collect();
    WeightVector::normalized(raw).expect("powers of ten are positive")
}

/// Step-size bounds of the pattern-search mesh.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GpsMesh {
    pub step_min: f64,
    pub step_max: f64,
}

impl GpsMesh {
    pub fn initial(params: &LnsParams) -> Self {
        Self {
            step_min: params.gps_step_min,
            step_max: params.gps_step_max,
        }
    }

    pub fn expand(&mut self, factor: f64) {
        self.step_min *= factor;
        self.step_max *= factor;
    }

    pub fn shrink(&mut self, factor: f64) {
        self.step_min *= factor;
        self.step_max *= factor;
    }

    fn sample_step<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        if self.step_max > self.step_min {
            rng.random_range(self.step_min..self.step_max)
        } else {
            self.step_min
        }
    }
}

/// Poll set around `current`: the incumbent followed by one candidate per
/// signed coordinate direction `±e_i`, each with its own random step and
/// projected back onto the simplex.
pub fn gps_poll_set<R: Rng + ?Sized>(current: &WeightVector, mesh: &GpsMesh, rng: &mut R) -> Vec<WeightVector> {
    let n = current.len();
    let mut out = Vec::with_capacity(2 * n + 1);
    out.push(current.clone());
    let mut buf = current.as_slice().to_vec();
    for i in 0..n {
        for sign in [1.0, -1.0] {
            let delta = mesh.sample_step(rng);
            buf.copy_from_slice(current.as_slice());
            buf[i] += sign * delta;
            out.push(project_simplex(&buf));
        }
    }
    out
}

/// Pattern search over repair weights, scoring each candidate by the WM cost
/// of the spliced path under `w_eval`. Returns the best path and the weight
/// that produced it.
pub fn gps_repair<R: Rng + ?Sized>(
    graph: &MoGraph,
    partial: &PartialSolution,
    w_eval: &WeightVector,
    params: &LnsParams,
    rng: &mut R,
) -> Result<(Path, WeightVector)> {
    gps_repair_in(&mut Workspace::new(graph), graph, partial, w_eval, params, rng)
}

pub(crate) fn gps_repair_in<R: Rng + ?Sized>(
    ws: &mut Workspace,
    graph: &MoGraph,
    partial: &PartialSolution,
    w_eval: &WeightVector,
    params: &LnsParams,
    rng: &mut R,
) -> Result<(Path, WeightVector)> {
    let n = graph.n_objectives();
    let mut mesh = GpsMesh::initial(params);
    let mut current_w = sample_repair_weight(n, params.log_weight_exponent_min, rng);
    let mut best: Option<(Path, WmKey)> = ws.repair(graph, partial, &current_w)
        .ok()
        .map(|p| {
            let key = WmKey::of(p.cost().as_slice(), w_eval.as_slice());
            (p, key)
        });

    for _ in 0..params.gps_iterations {
        let polls = gps_poll_set(&current_w, &mesh, rng);
        let mut improved = None;
        for cand in polls.into_iter().skip(1) {
            let Ok(p) = ws.repair(graph, partial, &cand) else {
                continue;
            };
            let key = WmKey::of(p.cost().as_slice(), w_eval.as_slice());
            let beats = match (&improved, &best) {
                (Some((_, _, k)), _) => key < *k,
                (None, Some((_, k))) => key < *k,
                (None, None) => true,
            };
            if beats {
                improved = Some((cand, p, key));
            }
        }
        match improved {
            Some((w, p, key)) => {
                current_w = w;
                best = Some((p, key));
                mesh.expand(params.gps_mesh_increase);
            }
            None => mesh.shrink(params.gps_mesh_decrease),
        }
    }
    best.map(|(p, _)| (p, current_w)).ok_or(Error::RepairFailed)
}
