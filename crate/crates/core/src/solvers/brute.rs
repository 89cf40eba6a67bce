//! Exhaustive simple-path enumeration, used as a test oracle on small graphs.

use super::astar::check_endpoints;
use crate::error::{Error, Result};
use crate::graph::{approx_eq_slice, dominates_slice, CostVector, MoGraph, Path, WeightVector, WmKey};

/// Largest graph the exhaustive routines accept.
pub const BRUTE_FORCE_VERTEX_LIMIT: usize = 14;

fn guard(graph: &MoGraph) -> Result<()> {
    if graph.n_vertices() > BRUTE_FORCE_VERTEX_LIMIT {
        return Err(Error::GraphTooLarge {
            vertices: graph.n_vertices(),
            limit: BRUTE_FORCE_VERTEX_LIMIT,
        });
    }
    Ok(())
}

/// Every simple path from `start` to `goal`.
pub fn brute_force_paths(graph: &MoGraph, start: usize, goal: usize) -> Result<Vec<Path>> {
    guard(graph)?;
    check_endpoints(graph, start, goal)?;
    let mut out = Vec::new();
    let mut on_path = vec![false; graph.n_vertices()];
    let mut stack = vec![start];
    let mut cost = vec![0.0; graph.n_objectives()];
    on_path[start] = true;
    dfs(graph, goal, &mut stack, &mut on_path, &mut cost, &mut out);
    Ok(out)
}

fn dfs(
    graph: &MoGraph,
    goal: usize,
    stack: &mut Vec<usize>,
    on_path: &mut [bool],
    cost: &mut [f64],
    out: &mut Vec<Path>,
) {
    let u = *stack.last().unwrap();
    if u == goal {
        out.push(Path::from_parts(stack.clone(), CostVector::from_raw(cost.to_vec())));
        return;
    }
    for &(v, e) in graph.neighbors(u) {
        if on_path[v] {
            continue;
        }
        let c = graph.edge_cost(e);
        for (a, b) in cost.iter_mut().zip(c) {
            *a += b;
        }
        on_path[v] = true;
        stack.push(v);
        dfs(graph, goal, stack, on_path, cost, out);
        stack.pop();
        on_path[v] = false;
        for (a, b) in cost.iter_mut().zip(c) {
            *a -= b;
        }
    }
}

/// Pareto-optimal simple paths, one representative per distinct cost vector.
pub fn brute_force_pareto(
    graph: &MoGraph,
    start: usize,
    goal: usize,
) -> Result<Vec<(Path, CostVector)>> {
    let paths = brute_force_paths(graph, start, goal)?;
    let mut front: Vec<(Path, CostVector)> = Vec::new();
    for p in &paths {
        let c = p.cost().as_slice();
        let dominated = paths
            .iter()
            .any(|q| dominates_slice(q.cost().as_slice(), c));
        let duplicate = front
            .iter()
            .any(|(_, fc)| approx_eq_slice(fc.as_slice(), c));
        if !dominated && !duplicate {
            // Recompute the sum edge by edge to shed DFS add/subtract drift.
            let fresh = Path::new(graph, p.vertices().to_vec())?;
            let cost = fresh.cost().clone();
            front.push((fresh, cost));
        }
    }
    Ok(front)
}

/// Minimum-WM simple path by enumeration, ties broken on the objective sum.
pub fn brute_force_wm(graph: &MoGraph, start: usize, goal: usize, w: &WeightVector) -> Result<Path> {
    if w.len() != graph.n_objectives() {
        return Err(Error::DimensionMismatch {
            expected: graph.n_objectives(),
            got: w.len(),
        });
    }
    let best = brute_force_paths(graph, start, goal)?
        .into_iter()
        .min_by_key(|p| WmKey::of(p.cost().as_slice(), w.as_slice()))
        .ok_or(Error::NoPath { start, goal })?;
    Path::new(graph, best.vertices().to_vec())
}
