use std::collections::HashSet;

use serde::Serialize;

use super::cost::{approx_eq_slice, CostVector};
use super::MoGraph;
use crate::error::{Error, Result};

/// Component-wise sum of the edge costs along `vertices`.
pub fn path_cost(graph: &MoGraph, vertices: &[usize]) -> Result<CostVector> {
    let mut total = CostVector::zeros(graph.n_objectives());
    if let Some(&v) = vertices.iter().find(|&&v| v >= graph.n_vertices()) {
        return Err(Error::InvalidPath(format!("vertex {v} is not in the graph")));
    }
    for pair in vertices.windows(2) {
        let e = graph.edge_between(pair[0], pair[1]).ok_or_else(|| {
            Error::InvalidPath(format!("vertices {} and {} are not adjacent", pair[0], pair[1]))
        })?;
        total += graph.edge_cost(e);
    }
    Ok(total)
}

/// A simple path with its cached cost vector.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Path {
    vertices: Vec<usize>,
    cost: CostVector,
}

impl Path {
    /// Validates adjacency and simplicity, then caches the cost.
    pub fn new(graph: &MoGraph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidPath("path has no vertices".into()));
        }
        let cost = path_cost(graph, &vertices)?;
        let mut seen = HashSet::with_capacity(vertices.len());
        if let Some(v) = vertices.iter().find(|v| !seen.insert(**v)) {
            return Err(Error::InvalidPath(format!("vertex {v} repeats")));
        }
        Ok(Self { vertices, cost })
    }

    /// The zero-length path `s = g`.
    pub fn trivial(graph: &MoGraph, v: usize) -> Result<Self> {
        Self::new(graph, vec![v])
    }

    pub(crate) fn from_parts(vertices: Vec<usize>, cost: CostVector) -> Self {
        Self { vertices, cost }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn cost(&self) -> &CostVector {
        &self.cost
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn goal(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    /// Re-checks every invariant against `graph`, including that the cached
    /// cost matches a fresh edge sum.
    pub fn validate(&self, graph: &MoGraph) -> Result<()> {
        let fresh = Path::new(graph, self.vertices.clone())?;
        if !approx_eq_slice(fresh.cost.as_slice(), self.cost.as_slice()) {
            return Err(Error::InvalidPath(format!(
                "cached cost {} differs from recomputed {}",
                self.cost, fresh.cost
            )));
        }
        Ok(())
    }
}
