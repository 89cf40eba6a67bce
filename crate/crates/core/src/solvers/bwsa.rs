use crate::error::{Error, Result};
use crate::graph::{MoGraph, WeightVector};

/// Augments every edge `e_j` with `m` indicator objectives (a one at position
/// `n + j`) and pads `w` with `m` zeros.
///
/// In the transformed instance every simple path's cost vector is a
/// non-dominated vertex of the convex hull, so the best weighted-sum
/// approximation problem there coincides with the original WM problem.
pub fn bwsa_transform(graph: &MoGraph, w: &WeightVector) -> Result<(MoGraph, WeightVector)> {
    let n = graph.n_objectives();
    if w.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: w.len(),
        });
    }
    let m = graph.n_edges();
    let width = n + m;
    let mut costs = vec![0.0; m * width];
    for j in 0..m {
        let row = &mut costs[j * width..(j + 1) * width];
        row[..n].copy_from_slice(graph.edge_cost(j));
        row[n + j] = 1.0;
    }
    let transformed = graph.with_costs(width, costs)?;
    Ok((transformed, w.extended_with_zeros(m)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_gets_one_indicator() {
        let g = MoGraph::undirected(2, 2, [(0, 1, vec![1.5, 2.5])]).unwrap();
        let w = WeightVector::new(vec![0.3, 0.7]).unwrap();
        let (g2, w2) = bwsa_transform(&g, &w).unwrap();
        assert_eq!(g2.n_objectives(), 3);
        assert_eq!(g2.edge_cost(0), &[1.5, 2.5, 1.0]);
        assert_eq!(w2.as_slice(), &[0.3, 0.7, 0.0]);
        assert_eq!(g2.n_vertices(), 2);
        assert_eq!(g2.n_edges(), 1);
    }

    #[test]
    fn indicator_position_follows_edge_index() {
        let g = MoGraph::undirected(
            3,
            1,
            [(0, 1, vec![1.0]), (1, 2, vec![2.0]), (0, 2, vec![5.0])],
        )
        .unwrap();
        let (g2, _) = bwsa_transform(&g, &WeightVector::uniform(1)).unwrap();
        assert_eq!(g2.edge_cost(0), &[1.0, 1.0, 0.0, 0.0]);
        assert_eq!(g2.edge_cost(1), &[2.0, 0.0, 1.0, 0.0]);
        assert_eq!(g2.edge_cost(2), &[5.0, 0.0, 0.0, 1.0]);
    }
}
