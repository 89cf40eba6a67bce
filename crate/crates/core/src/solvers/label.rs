//! Best-first label-setting search for the weighted-maximum problem.
//!
//! All three WM baselines share this engine and differ only in how many
//! non-dominated labels a vertex may hold.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::astar::check_endpoints;
use super::heuristic::HeuristicTable;
use crate::error::{Error, Result};
use crate::graph::{weakly_dominates_slice, dominates_slice, CostVector, MoGraph, Path, WeightVector, WmKey};

/// Per-vertex label retention policy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Retention {
    /// Keep every non-dominated label (exact search).
    Unlimited,
    /// Keep the first `b` non-dominated labels to arrive.
    Budget(usize),
    /// Keep the `b` labels with the lowest WM priority.
    Beam(usize),
}

impl Retention {
    fn cap(self) -> Option<usize> {
        match self {
            Retention::Unlimited => None,
            Retention::Budget(b) | Retention::Beam(b) => Some(b),
        }
    }
}

const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug)]
struct Label {
    vertex: u32,
    pred: u32,
    alive: bool,
    priority: WmKey,
}

#[derive(Clone, Copy)]
struct Entry {
    priority: WmKey,
    label: u32,
}

impl PartialEq for Entry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Entry {}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Entry {
    // Min-heap on priority, FIFO on ties.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .priority
            .cmp(&self.priority)
            .then_with(|| other.label.cmp(&self.label))
    }
}

/// Search statistics, exposed for benchmarking.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub labels_created: usize,
    pub labels_expanded: usize,
}

struct Arena {
    n: usize,
    labels: Vec<Label>,
    costs: Vec<f64>,
}

impl Arena {
    fn cost(&self, id: u32) -> &[f64] {
        let i = id as usize * self.n;
        &self.costs[i..i + self.n]
    }

    fn on_path(&self, mut id: u32, vertex: u32) -> bool {
        while id != NONE {
            let l = &self.labels[id as usize];
            if l.vertex == vertex {
                return true;
            }
            id = l.pred;
        }
        false
    }

    fn reconstruct(&self, mut id: u32) -> Vec<usize> {
        let mut vertices = Vec::new();
        while id != NONE {
            let l = &self.labels[id as usize];
            vertices.push(l.vertex as usize);
            id = l.pred;
        }
        vertices.reverse();
        vertices
    }
}

fn priority(g: &[f64], h: &[f64], w: &[f64], buf: &mut [f64]) -> WmKey {
    for ((b, g), h) in buf.iter_mut().zip(g).zip(h) {
        *b = g + h;
    }
    WmKey::of(buf, w)
}

/// Runs the label-setting search and returns the first goal label popped.
pub fn wm_label_search(
    graph: &MoGraph,
    start: usize,
    goal: usize,
    w: &WeightVector,
    retention: Retention,
) -> Result<(Path, SearchStats)> {
    check_endpoints(graph, start, goal)?;
    let n = graph.n_objectives();
    if w.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: w.len(),
        });
    }
    if retention.cap() == Some(0) {
        return Err(Error::Config("label budget must be at least 1".into()));
    }
    let w = w.as_slice();
    let heur = HeuristicTable::new(graph, goal);
    if !heur.reaches_goal(start) {
        return Err(Error::NoPath { start, goal });
    }

    let mut arena = Arena {
        n,
        labels: Vec::new(),
        costs: Vec::new(),
    };
    let mut per_vertex: Vec<Vec<u32>> = vec![Vec::new(); graph.n_vertices()];
    let mut heap = BinaryHeap::new();
    let mut stats = SearchStats::default();
    let mut buf = vec![0.0; n];
    let mut next = vec![0.0; n];

    let root_priority = priority(&vec![0.0; n], heur.get(start), w, &mut buf);
    arena.labels.push(Label {
        vertex: start as u32,
        pred: NONE,
        alive: true,
        priority: root_priority,
    });
    arena.costs.extend(std::iter::repeat_n(0.0, n));
    per_vertex[start].push(0);
    heap.push(Entry {
        priority: root_priority,
        label: 0,
    });
    stats.labels_created = 1;

    while let Some(Entry { label: id, .. }) = heap.pop() {
        let label = arena.labels[id as usize];
        if !label.alive {
            continue;
        }
        let u = label.vertex as usize;
        if u == goal {
            let vertices = arena.reconstruct(id);
            let cost = CostVector::from_raw(arena.cost(id).to_vec());
            return Ok((Path::from_parts(vertices, cost), stats));
        }
        stats.labels_expanded += 1;

        for &(v, e) in graph.neighbors(u) {
            if !heur.reaches_goal(v) {
                continue;
            }
            if retention != Retention::Unlimited && arena.on_path(id, v as u32) {
                continue;
            }
            for ((x, g), f) in next.iter_mut().zip(arena.cost(id)).zip(graph.edge_cost(e)) {
                *x = g + f;
            }

            let bucket = &mut per_vertex[v];
            if bucket
                .iter()
                .any(|&other| weakly_dominates_slice(arena.cost(other), &next))
            {
                continue;
            }
            bucket.retain(|&other| {
                let keep = !dominates_slice(&next, arena.cost(other));
                if !keep {
                    arena.labels[other as usize].alive = false;
                }
                keep
            });

            let p = priority(&next, heur.get(v), w, &mut buf);
            if let Some(cap) = retention.cap() {
                if bucket.len() >= cap {
                    match retention {
                        Retention::Beam(_) => {
                            let (pos, &worst) = bucket
                                .iter()
                                .enumerate()
                                .max_by(|a, b| {
                                    let pa = arena.labels[*a.1 as usize].priority;
                                    let pb = arena.labels[*b.1 as usize].priority;
                                    pa.cmp(&pb).then_with(|| a.1.cmp(b.1))
                                })
                                .expect("bucket is full, so non-empty");
                            if p < arena.labels[worst as usize].priority {
                                arena.labels[worst as usize].alive = false;
                                bucket.swap_remove(pos);
                            } else {
                                continue;
                            }
                        }
                        _ => continue,
                    }
                }
            }

            let new_id = arena.labels.len() as u32;
            arena.labels.push(Label {
                vertex: v as u32,
                pred: id,
                alive: true,
                priority: p,
            });
            arena.costs.extend_from_slice(&next);
            bucket.push(new_id);
            heap.push(Entry {
                priority: p,
                label: new_id,
            });
            stats.labels_created += 1;
        }
    }
    Err(Error::NoPath { start, goal })
}

/// Exact weighted-maximum search with a per-objective cost-to-go heuristic.
pub fn wm_exact(graph: &MoGraph, start: usize, goal: usize, w: &WeightVector) -> Result<Path> {
    wm_label_search(graph, start, goal, w, Retention::Unlimited).map(|(p, _)| p)
}

/// WM search keeping at most `budget` labels per vertex, in arrival order.
pub fn wm_poly(
    graph: &MoGraph,
    start: usize,
    goal: usize,
    w: &WeightVector,
    budget: usize,
) -> Result<Path> {
    wm_label_search(graph, start, goal, w, Retention::Budget(budget)).map(|(p, _)| p)
}

/// WM search keeping the `beam` lowest-priority labels per vertex.
pub fn wm_beam(
    graph: &MoGraph,
    start: usize,
    goal: usize,
    w: &WeightVector,
    beam: usize,
) -> Result<Path> {
    wm_label_search(graph, start, goal, w, Retention::Beam(beam)).map(|(p, _)| p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{wm_cost, GraphBuilder};
    use crate::instances::{funnel_gadget, three_corridor_gadget};

    #[test]
    fn exact_finds_unsupported_corridor() {
        let (g, s, t) = three_corridor_gadget();
        let p = wm_exact(&g, s, t, &WeightVector::uniform(2)).unwrap();
        assert_eq!(p.cost().as_slice(), &[6.0, 6.0]);
        assert_eq!(wm_cost(p.cost(), &WeightVector::uniform(2), 0.0).unwrap(), 3.0);
        p.validate(&g).unwrap();
    }

    #[test]
    fn unit_weight_matches_single_objective_shortest() {
        let (g, s, t) = three_corridor_gadget();
        for j in 0..2 {
            let p = wm_exact(&g, s, t, &WeightVector::unit(2, j)).unwrap();
            assert_eq!(p.cost()[j], 0.0);
        }
    }

    #[test]
    fn capped_variants_stay_feasible_and_bounded() {
        let (g, s, t) = funnel_gadget();
        let w = WeightVector::uniform(2);
        let opt = wm_cost(wm_exact(&g, s, t, &w).unwrap().cost(), &w, 0.0).unwrap();
        assert_eq!(opt, 3.0);
        for b in 1..4 {
            for p in [wm_poly(&g, s, t, &w, b).unwrap(), wm_beam(&g, s, t, &w, b).unwrap()] {
                p.validate(&g).unwrap();
                assert!(wm_cost(p.cost(), &w, 0.0).unwrap() >= opt);
            }
        }
        let big = wm_beam(&g, s, t, &w, usize::MAX).unwrap();
        assert_eq!(wm_cost(big.cost(), &w, 0.0).unwrap(), opt);
    }

    #[test]
    fn zero_budget_is_rejected() {
        let (g, s, t) = three_corridor_gadget();
        assert!(wm_beam(&g, s, t, &WeightVector::uniform(2), 0).is_err());
    }

    #[test]
    fn unreachable_goal() {
        let mut b = GraphBuilder::new(2).directed(true);
        for _ in 0..3 {
            b.add_vertex(None);
        }
        b.add_edge(0, 1, vec![1.0, 1.0]).unwrap();
        b.add_edge(2, 1, vec![1.0, 1.0]).unwrap();
        let g = b.build().unwrap();
        let w = WeightVector::uniform(2);
        assert!(matches!(wm_exact(&g, 0, 2, &w), Err(Error::NoPath { .. })));
        assert!(matches!(wm_beam(&g, 0, 2, &w, 2), Err(Error::NoPath { .. })));
    }
}
