use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::{euclid, weighted_sum, CostVector, MoGraph, Path, WeightVector};

#[derive(Clone, Copy, Debug)]
struct Open {
    f: f64,
    g: f64,
    vertex: usize,
}

impl PartialEq for Open {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Open {}

impl PartialOrd for Open {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Open {
    // Reversed for a min-heap; deeper nodes first on equal f.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .f
            .total_cmp(&self.f)
            .then_with(|| self.g.total_cmp(&other.g))
            .then_with(|| other.vertex.cmp(&self.vertex))
    }
}

/// Straight-line bound `Σ w_i c_i |p_v - p_goal|`, or zero without positions.
fn heuristic_scale(graph: &MoGraph, w: &[f64]) -> f64 {
    match graph.length_ratios() {
        Some(ratios) => weighted_sum(ratios, w),
        None => 0.0,
    }
}

/// Weighted-sum A* from `start` to `goal` on `graph`.
pub fn ws_astar(graph: &MoGraph, start: usize, goal: usize, w: &WeightVector) -> Result<Path> {
    check_endpoints(graph, start, goal)?;
    if w.len() != graph.n_objectives() {
        return Err(Error::DimensionMismatch {
            expected: graph.n_objectives(),
            got: w.len(),
        });
    }
    let (vertices, cost) = ws_search(graph, start, goal, w.as_slice(), None)
        .ok_or(Error::NoPath { start, goal })?;
    Ok(Path::from_parts(vertices, cost))
}

pub(crate) fn check_endpoints(graph: &MoGraph, start: usize, goal: usize) -> Result<()> {
    let n = graph.n_vertices();
    if start >= n || goal >= n {
        return Err(Error::InvalidPath(format!(
            "endpoints ({start}, {goal}) outside 0..{n}"
        )));
    }
    Ok(())
}

/// Reusable buffers for repeated searches on one graph. Entries are valid
/// only when their stamp equals the current generation, so starting a new
/// search does not touch every vertex.
#[derive(Debug, Default)]
pub(crate) struct WsScratch {
    generation: u32,
    stamp: Vec<u32>,
    dist: Vec<f64>,
    pred: Vec<usize>,
    closed: Vec<bool>,
    heap: BinaryHeap<Open>,
}

impl WsScratch {
    fn reset(&mut self, n: usize) {
        if self.stamp.len() != n || self.generation == u32::MAX {
            self.stamp = vec![0; n];
            self.dist = vec![f64::INFINITY; n];
            self.pred = vec![usize::MAX; n];
            self.closed = vec![false; n];
            self.generation = 0;
        }
        self.generation += 1;
        self.heap.clear();
    }

    fn touch(&mut self, v: usize) {
        if self.stamp[v] != self.generation {
            self.stamp[v] = self.generation;
            self.dist[v] = f64::INFINITY;
            self.pred[v] = usize::MAX;
            self.closed[v] = false;
        }
    }
}

/// Scalarized A* that never enters a vertex marked in `blocked`.
pub(crate) fn ws_search(
    graph: &MoGraph,
    start: usize,
    goal: usize,
    w: &[f64],
    blocked: Option<&[bool]>,
) -> Option<(Vec<usize>, CostVector)> {
    ws_search_with(graph, start, goal, w, blocked, &mut WsScratch::default())
}

pub(crate) fn ws_search_with(
    graph: &MoGraph,
    start: usize,
    goal: usize,
    w: &[f64],
    blocked: Option<&[bool]>,
    sc: &mut WsScratch,
) -> Option<(Vec<usize>, CostVector)> {
    let scale = heuristic_scale(graph, w);
    let goal_pos = graph.position(goal);
    let h = |v: usize| -> f64 {
        match (goal_pos, scale > 0.0) {
            (Some(gp), true) => scale * euclid(graph.position(v).unwrap(), gp),
            _ => 0.0,
        }
    };

    sc.reset(graph.n_vertices());
    sc.touch(start);
    sc.touch(goal);
    sc.dist[start] = 0.0;
    sc.heap.push(Open {
        f: h(start),
        g: 0.0,
        vertex: start,
    });

    while let Some(Open { g, vertex: u, .. }) = sc.heap.pop() {
        if sc.closed[u] {
            continue;
        }
        sc.closed[u] = true;
        if u == goal {
            break;
        }
        for &(v, e) in graph.neighbors(u) {
            if blocked.is_some_and(|b| b[v]) {
                continue;
            }
            sc.touch(v);
            if sc.closed[v] {
                continue;
            }
            let cand = g + weighted_sum(graph.edge_cost(e), w);
            if cand < sc.dist[v] {
                sc.dist[v] = cand;
                sc.pred[v] = u;
                sc.heap.push(Open {
                    f: cand + h(v),
                    g: cand,
                    vertex: v,
                });
            }
        }
    }
    if !sc.closed[goal] {
        return None;
    }

    let mut vertices = vec![goal];
    let mut v = goal;
    while v != start {
        v = sc.pred[v];
        vertices.push(v);
    }
    vertices.reverse();
    let mut cost = CostVector::zeros(graph.n_objectives());
    for pair in vertices.windows(2) {
        let e = graph.edge_between(pair[0], pair[1]).expect("search follows edges");
        cost += graph.edge_cost(e);
    }
    Some((vertices, cost))
}
