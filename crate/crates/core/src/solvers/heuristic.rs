use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::graph::MoGraph;

/// Per-vertex, per-objective lower bounds on the remaining cost to a goal.
///
/// Entry `(v, i)` is the exact single-objective shortest distance from `v` to
/// the goal under objective `i`, computed by a reverse Dijkstra per objective.
/// Vertices that cannot reach the goal hold `f64::INFINITY`.
#[derive(Clone, Debug)]
pub struct HeuristicTable {
    n_objectives: usize,
    values: Vec<f64>,
}

#[derive(PartialEq)]
struct Item(f64, usize);

impl Eq for Item {}

impl PartialOrd for Item {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Item {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.total_cmp(&self.0).then_with(|| other.1.cmp(&self.1))
    }
}

impl HeuristicTable {
    pub fn new(graph: &MoGraph, goal: usize) -> Self {
        let n = graph.n_objectives();
        let nv = graph.n_vertices();
        let mut values = vec![f64::INFINITY; nv * n];
        let mut dist = vec![f64::INFINITY; nv];
        for i in 0..n {
            dist.fill(f64::INFINITY);
            dist[goal] = 0.0;
            let mut heap = BinaryHeap::from([Item(0.0, goal)]);
            while let Some(Item(d, u)) = heap.pop() {
                if d > dist[u] {
                    continue;
                }
                for &(v, e) in graph.predecessors(u) {
                    let cand = d + graph.edge_cost(e)[i];
                    if cand < dist[v] {
                        dist[v] = cand;
                        heap.push(Item(cand, v));
                    }
                }
            }
            for (v, d) in dist.iter().enumerate() {
                values[v * n + i] = *d;
            }
        }
        Self {
            n_objectives: n,
            values,
        }
    }

    #[inline]
    pub fn get(&self, v: usize) -> &[f64] {
        &self.values[v * self.n_objectives..(v + 1) * self.n_objectives]
    }

    pub fn reaches_goal(&self, v: usize) -> bool {
        self.get(v).iter().all(|h| h.is_finite())
    }
}
