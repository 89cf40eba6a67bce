use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::grid::{GridEnvironment, RiskLevel};
use crate::error::{Error, Result};
use crate::graph::{euclid, CostVector, GraphBuilder, MoGraph};

/// Closeness guard `ε_c` in cell units.
pub const CLOSENESS_EPSILON_CELLS: f64 = 0.1;

/// Cost per unit length inside low, medium and high risk zones.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RiskLevels {
    pub low: f64,
    pub medium: f64,
    pub high: f64,
}

impl Default for RiskLevels {
    fn default() -> Self {
        Self { low: 1.0, medium: 5.0, high: 10.0 }
    }
}

impl RiskLevels {
    pub fn value(&self, level: RiskLevel) -> f64 {
        match level {
            RiskLevel::Low => self.low,
            RiskLevel::Medium => self.medium,
            RiskLevel::High => self.high,
        }
    }
}

/// Whether edges carry a third, risk objective.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RiskObjective {
    /// On when the map declares at least one risk zone.
    #[default]
    Auto,
    On,
    Off,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PrmConfig {
    pub node_count: usize,
    pub k_nn: usize,
    pub seed: u64,
    pub risk_levels: RiskLevels,
    pub risk: RiskObjective,
}

impl Default for PrmConfig {
    fn default() -> Self {
        Self {
            node_count: 500,
            k_nn: 10,
            seed: 0,
            risk_levels: RiskLevels::default(),
            risk: RiskObjective::Auto,
        }
    }
}

impl PrmConfig {
    pub fn new(node_count: usize, k_nn: usize, seed: u64) -> Self {
        Self { node_count, k_nn, seed, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.node_count < 2 {
            return Err(Error::Config("PRM needs at least 2 nodes".into()));
        }
        if self.k_nn < 1 {
            return Err(Error::Config("PRM needs k_nn >= 1".into()));
        }
        let l = &self.risk_levels;
        if ![l.low, l.medium, l.high].iter().all(|v| v.is_finite() && *v >= 0.0) {
            return Err(Error::Config("risk levels must be finite and non-negative".into()));
        }
        Ok(())
    }

    /// Risk levels to use on `env`, or `None` for two objectives.
    pub fn risk_for(&self, env: &GridEnvironment) -> Option<RiskLevels> {
        let on = match self.risk {
            RiskObjective::Auto => !env.risk_zones().is_empty(),
            RiskObjective::On => true,
            RiskObjective::Off => false,
        };
        on.then_some(self.risk_levels)
    }
}

fn check_point(env: &GridEnvironment, p: [f64; 2]) -> Result<()> {
    if env.in_bounds(p) {
        Ok(())
    } else {
        Err(Error::Environment(format!(
            "point ({}, {}) lies outside the {}×{} map",
            p[0],
            p[1],
            env.width(),
            env.height()
        )))
    }
}

/// Whether the segment `a`–`b` stays in free cells.
///
/// Walks every cell the segment passes through (grid traversal in cell
/// coordinates). Where the segment crosses a cell corner exactly, both
/// side cells are checked too.
pub fn collision_free(env: &GridEnvironment, a: [f64; 2], b: [f64; 2]) -> Result<bool> {
    check_point(env, a)?;
    check_point(env, b)?;
    let s = env.cell_size();
    let (rows, cols) = (env.rows() as i64, env.cols() as i64);
    let blocked = |c: i64, r: i64| (0..cols).contains(&c) && (0..rows).contains(&r) && env.is_obstacle(r as usize, c as usize);

    let (ra, ca) = env.cell_of(a).expect("checked");
    let (rb, cb) = env.cell_of(b).expect("checked");
    let (mut cx, mut cy) = (ca as i64, ra as i64);
    let (ex, ey) = (cb as i64, rb as i64);
    let (x0, y0) = (a[0] / s, a[1] / s);
    let (dx, dy) = (b[0] / s - x0, b[1] / s - y0);

    let axis = |d: f64, pos: f64, cell: i64| -> (i64, f64, f64) {
        if d > 0.0 {
            (1, ((cell + 1) as f64 - pos) / d, 1.0 / d)
        } else if d < 0.0 {
            (-1, (pos - cell as f64) / -d, -1.0 / d)
        } else {
            (0, f64::INFINITY, f64::INFINITY)
        }
    };
    let (sx, mut tx, dtx) = axis(dx, x0, cx);
    let (sy, mut ty, dty) = axis(dy, y0, cy);

    let max_steps = (ex - cx).abs() + (ey - cy).abs() + 2;
    for _ in 0..=max_steps {
        if blocked(cx, cy) {
            return Ok(false);
        }
        if (cx, cy) == (ex, ey) || tx.min(ty) > 1.0 {
            break;
        }
        if tx < ty {
            cx += sx;
            tx += dtx;
        } else if ty < tx {
            cy += sy;
            ty += dty;
        } else {
            if blocked(cx + sx, cy) || blocked(cx, cy + sy) {
                return Ok(false);
            }
            cx += sx;
            cy += sy;
            tx += dtx;
            ty += dty;
        }
    }
    Ok(!blocked(ex, ey))
}

/// Smallest cell clearance met by samples spaced at most half a cell
/// apart along the segment (endpoints included).
pub fn min_clearance_along(env: &GridEnvironment, a: [f64; 2], b: [f64; 2]) -> Result<f64> {
    check_point(env, a)?;
    check_point(env, b)?;
    let len = euclid(a, b);
    let steps = ((len / (0.5 * env.cell_size())).ceil() as usize).max(1);
    let mut best = f64::INFINITY;
    for i in 0..=steps {
        let t = i as f64 / steps as f64;
        let p = [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])];
        best = best.min(env.clearance_at(p).expect("point on an in-bounds segment"));
    }
    Ok(best)
}

/// Edge cost vector for the straight segment `a`–`b`:
/// `[length, length / (ε_c + min clearance), length × zone level]`, the
/// last entry only when `risk` is given.
pub fn edge_costs(env: &GridEnvironment, a: [f64; 2], b: [f64; 2], risk: Option<&RiskLevels>) -> Result<CostVector> {
    if !collision_free(env, a, b)? {
        return Err(Error::Environment(format!(
            "segment ({}, {})–({}, {}) crosses an obstacle",
            a[0], a[1], b[0], b[1]
        )));
    }
    let len = euclid(a, b);
    let eps = CLOSENESS_EPSILON_CELLS * env.cell_size();
    let closeness = len / (eps + min_clearance_along(env, a, b)?);
    let mut costs = vec![len, closeness];
    if let Some(levels) = risk {
        let level = env.max_risk_level(a, b).map_or(0.0, |l| levels.value(l));
        costs.push(len * level);
    }
    CostVector::new(costs)
}

/// Samples `node_count` free points, links each to its `k_nn` nearest
/// neighbours through collision-free segments and keeps the largest
/// connected component.
pub fn build_prm(env: &GridEnvironment, config: &PrmConfig) -> Result<MoGraph> {
    config.validate()?;
    if env.free_cell_count() == 0 {
        return Err(Error::Environment("map has no free cell".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let (w, h) = (env.width(), env.height());
    let max_attempts = config.node_count.saturating_mul(1000).max(10_000);
    let mut points: Vec<[f64; 2]> = Vec::with_capacity(config.node_count);
    let mut attempts = 0;
    while points.len() < config.node_count && attempts < max_attempts {
        attempts += 1;
        let p = [rng.random_range(0.0..w), rng.random_range(0.0..h)];
        if env.is_free(p) {
            points.push(p);
        }
    }
    if points.len() < 2 {
        return Err(Error::Environment(format!(
            "only {} free samples after {attempts} attempts",
            points.len()
        )));
    }

    let n = points.len();
    let risk = config.risk_for(env);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut dist: Vec<(f64, usize)> = Vec::with_capacity(n);
    for i in 0..n {
        dist.clear();
        dist.extend((0..n).filter(|&j| j != i).map(|j| (euclid(points[i], points[j]), j)));
        let k = config.k_nn.min(dist.len());
        if k < dist.len() {
            dist.select_nth_unstable_by(k - 1, |a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        }
        for &(d, j) in &dist[..k] {
            if d > 0.0 {
                pairs.push((i.min(j), i.max(j)));
            }
        }
    }
    pairs.sort_unstable();
    pairs.dedup();

    let mut edges = Vec::new();
    for (i, j) in pairs {
        if collision_free(env, points[i], points[j])? {
            edges.push((i, j, edge_costs(env, points[i], points[j], risk.as_ref())?));
        }
    }

    // Largest connected component by union-find.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(i, j, _) in &edges {
        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut size = vec![0usize; n];
    let roots: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
    for &r in &roots {
        size[r] += 1;
    }
    let keep_root = (0..n).max_by_key(|&r| (size[r], std::cmp::Reverse(r))).expect("n >= 2");
    if size[keep_root] < 2 {
        return Err(Error::Environment("roadmap has no connected pair of samples".into()));
    }

    let n_obj = if risk.is_some() { 3 } else { 2 };
    let mut builder = GraphBuilder::new(n_obj);
    let mut index = vec![usize::MAX; n];
    for i in 0..n {
        if roots[i] == keep_root {
            index[i] = builder.add_vertex(Some(points[i]));
        }
    }
    for (i, j, c) in edges {
        if roots[i] == keep_root {
            builder.add_edge(index[i], index[j], c.into_vec())?;
        }
    }
    builder.build()
}
