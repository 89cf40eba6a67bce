//! Multi-objective graphs, paths and the two scalarizations.
//!
//! A [`MoGraph`] is immutable once built. Every edge carries the same number of
//! non-negative objective costs, and construction rejects disconnected graphs,
//! self loops and parallel edges.

mod cost;
mod json;
mod path;

use std::collections::{HashMap, HashSet, VecDeque};

pub use cost::{
    default_rho, dominates, pareto_filter, wm_cost, ws_cost, CostVector, WeightVector, WmKey,
    COST_REL_TOL, SIMPLEX_TOL,
};
pub(crate) use cost::{
    approx_eq_scalar, approx_eq_slice, dominates_slice, weakly_dominates_slice, weighted_max, weighted_sum,
};
pub use json::{EdgeRecord, GraphFile, VertexRecord};
pub use path::{path_cost, Path};

use crate::error::{Error, Result};

/// Directed or undirected graph with vector-valued edge costs.
#[derive(Clone, Debug)]
pub struct MoGraph {
    n_objectives: usize,
    directed: bool,
    ids: Vec<u64>,
    id_index: HashMap<u64, usize>,
    positions: Option<Vec<[f64; 2]>>,
    out_adj: Vec<Vec<(usize, usize)>>,
    // Empty for undirected graphs.
    in_adj: Vec<Vec<(usize, usize)>>,
    edges: Vec<(usize, usize)>,
    costs: Vec<f64>,
    max_edge_component: f64,
    length_ratios: Option<Vec<f64>>,
}

impl MoGraph {
    /// Undirected graph over vertices `0..n_vertices` without positions.
    pub fn undirected(
        n_vertices: usize,
        n_objectives: usize,
        edges: impl IntoIterator<Item = (usize, usize, Vec<f64>)>,
    ) -> Result<Self> {
        let mut b = GraphBuilder::new(n_objectives);
        for _ in 0..n_vertices {
            b.add_vertex(None);
        }
        for (u, v, c) in edges {
            b.add_edge(u, v, c)?;
        }
        b.build()
    }

    pub fn n_objectives(&self) -> usize {
        self.n_objectives
    }

    pub fn n_vertices(&self) -> usize {
        self.ids.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// External identifier of vertex `v`.
    pub fn id(&self, v: usize) -> u64 {
        self.ids[v]
    }

    pub fn index_of(&self, id: u64) -> Option<usize> {
        self.id_index.get(&id).copied()
    }

    pub fn position(&self, v: usize) -> Option<[f64; 2]> {
        self.positions.as_ref().map(|p| p[v])
    }

    pub fn positions(&self) -> Option<&[[f64; 2]]> {
        self.positions.as_deref()
    }

    /// Outgoing `(neighbor, edge index)` pairs.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.out_adj[v]
    }

    /// Incoming `(neighbor, edge index)` pairs.
    #[inline]
    pub fn predecessors(&self, v: usize) -> &[(usize, usize)] {
        if self.directed {
            &self.in_adj[v]
        } else {
            &self.out_adj[v]
        }
    }

    /// Endpoints of edge `e` as stored (`u -> v` for directed graphs).
    pub fn edge_endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    #[inline]
    pub fn edge_cost(&self, e: usize) -> &[f64] {
        &self.costs[e * self.n_objectives..(e + 1) * self.n_objectives]
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.out_adj
            .get(u)?
            .iter()
            .find(|(w, _)| *w == v)
            .map(|(_, e)| *e)
    }

    /// Largest single edge cost component over the whole graph.
    pub fn max_edge_component(&self) -> f64 {
        self.max_edge_component
    }

    /// Default additive tie-breaker for this graph.
    pub fn default_rho(&self) -> f64 {
        default_rho(self.n_objectives, self.max_edge_component)
    }

    /// Per-objective `c_i` with `f_i(e) >= c_i * |e|` for every edge, where `|e|`
    /// is the Euclidean distance between the endpoint positions.
    ///
    /// Only available when every vertex has a position. These ratios give a
    /// consistent straight-line heuristic for scalarized searches.
    pub fn length_ratios(&self) -> Option<&[f64]> {
        self.length_ratios.as_deref()
    }

    /// Same vertex and edge sets with replaced edge costs.
    pub(crate) fn with_costs(&self, n_objectives: usize, costs: Vec<f64>) -> Result<Self> {
        if costs.len() != self.edges.len() * n_objectives {
            return Err(Error::DimensionMismatch {
                expected: self.edges.len() * n_objectives,
                got: costs.len(),
            });
        }
        let mut g = self.clone();
        g.n_objectives = n_objectives;
        g.costs = costs;
        g.refresh_derived();
        Ok(g)
    }

    fn refresh_derived(&mut self) {
        self.max_edge_component = self.costs.iter().copied().fold(0.0, f64::max);
        self.length_ratios = self.positions.as_ref().map(|pos| {
            let n = self.n_objectives;
            let mut ratios = vec![f64::INFINITY; n];
            for (e, &(u, v)) in self.edges.iter().enumerate() {
                let len = euclid(pos[u], pos[v]);
                if len <= 0.0 {
                    continue;
                }
                for (i, r) in ratios.iter_mut().enumerate() {
                    *r = r.min(self.costs[e * n + i] / len);
                }
            }
            ratios
                .into_iter()
                .map(|r| if r.is_finite() { r } else { 0.0 })
                .collect()
        });
    }

    fn check_weakly_connected(&self) -> Result<()> {
        let n = self.n_vertices();
        if n == 0 {
            return Err(Error::InvalidGraph("graph has no vertices".into()));
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            let nbrs = self.out_adj[u]
                .iter()
                .chain(if self.directed { self.in_adj[u].iter() } else { [].iter() });
            for &(v, _) in nbrs {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        if count != n {
            return Err(Error::InvalidGraph(format!(
                "graph is not connected: {count} of {n} vertices reachable"
            )));
        }
        Ok(())
    }
}

pub(crate) fn euclid(a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - b[0]).hypot(a[1] - b[1])
}

/// Incremental constructor for [`MoGraph`].
#[derive(Debug)]
pub struct GraphBuilder {
    n_objectives: usize,
    directed: bool,
    ids: Vec<u64>,
    positions: Vec<Option<[f64; 2]>>,
    edges: Vec<(usize, usize)>,
    costs: Vec<f64>,
    seen_edges: HashSet<(usize, usize)>,
}

impl GraphBuilder {
    pub fn new(n_objectives: usize) -> Self {
        Self {
            n_objectives,
            directed: false,
            ids: Vec::new(),
            positions: Vec::new(),
            edges: Vec::new(),
            costs: Vec::new(),
            seen_edges: HashSet::new(),
        }
    }

    pub fn directed(mut self, directed: bool) -> Self {
        self.directed = directed;
        self
    }

    /// Adds a vertex whose external id equals its index.
    pub fn add_vertex(&mut self, pos: Option<[f64; 2]>) -> usize {
        let idx = self.ids.len();
        self.ids.push(idx as u64);
        self.positions.push(pos);
        idx
    }

    pub fn add_vertex_with_id(&mut self, id: u64, pos: Option<[f64; 2]>) -> usize {
        let idx = self.ids.len();
        self.ids.push(id);
        self.positions.push(pos);
        idx
    }

    pub fn n_vertices(&self) -> usize {
        self.ids.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize, costs: Vec<f64>) -> Result<usize> {
        let n = self.ids.len();
        if u >= n || v >= n {
            return Err(Error::InvalidGraph(format!(
                "edge ({u}, {v}) references a vertex outside 0..{n}"
            )));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("self loop at vertex {u}")));
        }
        if costs.len() != self.n_objectives {
            return Err(Error::DimensionMismatch {
                expected: self.n_objectives,
                got: costs.len(),
            });
        }
        let costs = CostVector::new(costs)?;
        let key = if self.directed { (u, v) } else { (u.min(v), u.max(v)) };
        if !self.seen_edges.insert(key) {
            return Err(Error::InvalidGraph(format!("parallel edge ({u}, {v})")));
        }
        self.edges.push((u, v));
        self.costs.extend_from_slice(costs.as_slice());
        Ok(self.edges.len() - 1)
    }

    pub fn build(self) -> Result<MoGraph> {
        if self.n_objectives == 0 {
            return Err(Error::InvalidGraph("graph needs at least one objective".into()));
        }
        let n = self.ids.len();
        let mut id_index = HashMap::with_capacity(n);
        for (i, id) in self.ids.iter().enumerate() {
            if id_index.insert(*id, i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex id {id}")));
            }
        }
        let positions = if n > 0 && self.positions.iter().all(Option::is_some) {
            Some(self.positions.iter().map(|p| p.unwrap()).collect())
        } else {
            None
        };
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = if self.directed { vec![Vec::new(); n] } else { Vec::new() };
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            out_adj[u].push((v, e));
            if self.directed {
                in_adj[v].push((u, e));
            } else {
                out_adj[v].push((u, e));
            }
        }
        let mut g = MoGraph {
            n_objectives: self.n_objectives,
            directed: self.directed,
            ids: self.ids,
            id_index,
            positions,
            out_adj,
            in_adj,
            edges: self.edges,
            costs: self.costs,
            max_edge_component: 0.0,
            length_ratios: None,
        };
        g.refresh_derived();
        g.check_weakly_connected()?;
        Ok(g)
    }
}
