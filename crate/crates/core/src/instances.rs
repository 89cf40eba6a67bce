//! Small reference instances and random instance generators.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{MoGraph, WeightVector};

/// Three vertex-disjoint corridors from `s` to `g` with total costs
/// `(0, 10)`, `(10, 0)` and `(6, 6)`. The balanced corridor is Pareto-optimal
/// but not reachable by any weighted sum.
///
/// Returns `(graph, s, g)`.
pub fn three_corridor_gadget() -> (MoGraph, usize, usize) {
    let graph = MoGraph::undirected(
        5,
        2,
        [
            (0, 2, vec![0.0, 5.0]),
            (2, 1, vec![0.0, 5.0]),
            (0, 3, vec![5.0, 0.0]),
            (3, 1, vec![5.0, 0.0]),
            (0, 4, vec![3.0, 3.0]),
            (4, 1, vec![3.0, 3.0]),
        ],
    )
    .expect("gadget is well formed");
    (graph, 0, 1)
}

/// The three corridors merge at a shared vertex before a zero-cost final
/// edge, so per-vertex label caps can discard the balanced corridor.
pub fn funnel_gadget() -> (MoGraph, usize, usize) {
    let graph = MoGraph::undirected(
        6,
        2,
        [
            (0, 2, vec![0.0, 5.0]),
            (2, 5, vec![0.0, 5.0]),
            (0, 3, vec![5.0, 0.0]),
            (3, 5, vec![5.0, 0.0]),
            (0, 4, vec![3.0, 3.0]),
            (4, 5, vec![3.0, 3.0]),
            (5, 1, vec![0.0, 0.0]),
        ],
    )
    .expect("gadget is well formed");
    (graph, 0, 1)
}

/// Random connected undirected graph: a random spanning tree plus
/// `extra_edges` additional distinct edges, with costs uniform in `(0, 10)`.
pub fn random_connected_graph<R: Rng + ?Sized>(
    rng: &mut R,
    n_vertices: usize,
    n_objectives: usize,
    extra_edges: usize,
) -> MoGraph {
    assert!(n_vertices >= 1);
    let mut order: Vec<usize> = (0..n_vertices).collect();
    order.shuffle(rng);
    let mut pairs = Vec::new();
    for i in 1..n_vertices {
        let parent = order[rng.random_range(0..i)];
        pairs.push((parent, order[i]));
    }
    let max_edges = n_vertices * (n_vertices - 1) / 2;
    let target = (pairs.len() + extra_edges).min(max_edges);
    let mut present: std::collections::HashSet<(usize, usize)> =
        pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    while pairs.len() < target {
        let a = rng.random_range(0..n_vertices);
        let b = rng.random_range(0..n_vertices);
        if a != b && present.insert((a.min(b), a.max(b))) {
            pairs.push((a, b));
        }
    }
    let edges: Vec<_> = pairs
        .into_iter()
        .map(|(a, b)| {
            let costs = (0..n_objectives)
                .map(|_| rng.random_range(0.0..10.0) + 1e-3)
                .collect();
            (a, b, costs)
        })
        .collect();
    MoGraph::undirected(n_vertices, n_objectives, edges).expect("spanning tree keeps it connected")
}

/// Uniform sample from the unit simplex.
pub fn random_simplex_weight<R: Rng + ?Sized>(rng: &mut R, n: usize) -> WeightVector {
    // Normalized exponentials are Dirichlet(1, ..., 1).
    let raw: Vec<f64> = (0..n)
        .map(|_| -(1.0 - rng.random::<f64>()).ln())
        .collect();
    WeightVector::normalized(raw).unwrap_or_else(|_| WeightVector::uniform(n))
}
