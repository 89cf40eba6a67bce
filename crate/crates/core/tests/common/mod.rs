//! Independent reference implementations used as test oracles. None of
//! these share code with the library beyond its public data types.
#![allow(dead_code)]

use std::collections::HashSet;

use wmlns::env::GridEnvironment;
use wmlns::graph::MoGraph;

pub fn edge_list(graph: &MoGraph) -> Vec<(usize, usize, Vec<f64>)> {
    (0..graph.n_edges())
        .map(|e| {
            let (u, v) = graph.edge_endpoints(e);
            (u, v, graph.edge_cost(e).to_vec())
        })
        .collect()
}

/// O(V²) Dijkstra on the scalarized costs `Σ w_i f_i(e)`.
pub fn dijkstra_scalar(graph: &MoGraph, s: usize, g: usize, w: &[f64]) -> Option<f64> {
    let n = graph.n_vertices();
    let mut adj: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
    for (u, v, c) in edge_list(graph) {
        let cost: f64 = c.iter().zip(w).map(|(a, b)| a * b).sum();
        adj[u].push((v, cost));
        if !graph.is_directed() {
            adj[v].push((u, cost));
        }
    }
    let mut dist = vec![f64::INFINITY; n];
    let mut done = vec![false; n];
    dist[s] = 0.0;
    for _ in 0..n {
        let u = (0..n).filter(|&v| !done[v]).min_by(|&a, &b| dist[a].total_cmp(&dist[b]))?;
        if dist[u].is_infinite() {
            break;
        }
        done[u] = true;
        for &(v, c) in &adj[u] {
            if dist[u] + c < dist[v] {
                dist[v] = dist[u] + c;
            }
        }
    }
    dist[g].is_finite().then_some(dist[g])
}

/// Every simple s→g path with its summed cost vector.
pub fn simple_paths(graph: &MoGraph, s: usize, g: usize) -> Vec<(Vec<usize>, Vec<f64>)> {
    let n = graph.n_vertices();
    let m = graph.n_objectives();
    let mut adj: Vec<Vec<(usize, Vec<f64>)>> = vec![Vec::new(); n];
    for (u, v, c) in edge_list(graph) {
        adj[u].push((v, c.clone()));
        if !graph.is_directed() {
            adj[v].push((u, c));
        }
    }
    let mut out = Vec::new();
    let mut stack = vec![s];
    let mut on = vec![false; n];
    on[s] = true;
    fn rec(
        adj: &[Vec<(usize, Vec<f64>)>],
        g: usize,
        stack: &mut Vec<usize>,
        on: &mut [bool],
        cost: Vec<f64>,
        out: &mut Vec<(Vec<usize>, Vec<f64>)>,
    ) {
        let u = *stack.last().unwrap();
        if u == g {
            out.push((stack.clone(), cost));
            return;
        }
        for (v, c) in &adj[u] {
            if on[*v] {
                continue;
            }
            on[*v] = true;
            stack.push(*v);
            let next: Vec<f64> = cost.iter().zip(c).map(|(a, b)| a + b).collect();
            rec(adj, g, stack, on, next, out);
            stack.pop();
            on[*v] = false;
        }
    }
    rec(&adj, g, &mut stack, &mut on, vec![0.0; m], &mut out);
    out
}

pub fn wm_value(cost: &[f64], w: &[f64]) -> f64 {
    cost.iter().zip(w).map(|(c, w)| c * w).fold(f64::NEG_INFINITY, f64::max)
}

pub fn ws_value(cost: &[f64], w: &[f64]) -> f64 {
    cost.iter().zip(w).map(|(c, w)| c * w).sum()
}

pub fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * 1f64.max(a.abs()).max(b.abs())
}

pub fn close_vec(a: &[f64], b: &[f64]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| close(*x, *y))
}

/// Strict Pareto dominance.
pub fn dominates(a: &[f64], b: &[f64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y) && a.iter().zip(b).any(|(x, y)| x < y)
}

/// Pareto-optimal cost vectors among `costs`, one per distinct value.
pub fn pareto_front(costs: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = Vec::new();
    for c in costs {
        if costs.iter().any(|d| dominates(d, c)) {
            continue;
        }
        if !out.iter().any(|o| close_vec(o, c)) {
            out.push(c.clone());
        }
    }
    out
}

/// Euclidean projection onto the simplex by bisection on the KKT multiplier
/// of `min ||x - v||² s.t. Σx = 1, x ≥ 0`: `x_i = max(v_i - τ, 0)` where
/// `τ` solves `Σ max(v_i - τ, 0) = 1`.
pub fn simplex_projection_qp(v: &[f64]) -> Vec<f64> {
    let mass = |t: f64| v.iter().map(|x| (x - t).max(0.0)).sum::<f64>();
    let mut lo = v.iter().copied().fold(f64::INFINITY, f64::min) - 1.0;
    let mut hi = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mass(mid) > 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let t = 0.5 * (lo + hi);
    v.iter().map(|x| (x - t).max(0.0)).collect()
}

/// Cells whose closed square meets the segment (cell units).
pub fn supercover(env: &GridEnvironment, a: [f64; 2], b: [f64; 2]) -> HashSet<(usize, usize)> {
    let s = env.cell_size();
    let (a, b) = ([a[0] / s, a[1] / s], [b[0] / s, b[1] / s]);
    let c0 = a[0].min(b[0]).floor().max(0.0) as usize;
    let c1 = (a[0].max(b[0]).floor() as usize).min(env.cols() - 1);
    let r0 = a[1].min(b[1]).floor().max(0.0) as usize;
    let r1 = (a[1].max(b[1]).floor() as usize).min(env.rows() - 1);
    let mut out = HashSet::new();
    for r in r0..=r1 {
        for c in c0..=c1 {
            if segment_meets_box(a, b, [c as f64, r as f64], [c as f64 + 1.0, r as f64 + 1.0]) {
                out.insert((r, c));
            }
        }
    }
    out
}

pub fn segment_meets_box(a: [f64; 2], b: [f64; 2], lo: [f64; 2], hi: [f64; 2]) -> bool {
    let (mut t0, mut t1) = (0.0f64, 1.0f64);
    for i in 0..2 {
        let d = b[i] - a[i];
        if d == 0.0 {
            if a[i] < lo[i] || a[i] > hi[i] {
                return false;
            }
        } else {
            let (mut ta, mut tb) = ((lo[i] - a[i]) / d, (hi[i] - a[i]) / d);
            if ta > tb {
                std::mem::swap(&mut ta, &mut tb);
            }
            t0 = t0.max(ta);
            t1 = t1.min(tb);
            if t0 > t1 {
                return false;
            }
        }
    }
    true
}

/// Nearest obstacle-cell centre distance by scanning every obstacle.
pub fn brute_clearance(env: &GridEnvironment) -> Vec<f64> {
    let obstacles: Vec<(f64, f64)> = (0..env.rows())
        .flat_map(|r| (0..env.cols()).map(move |c| (r, c)))
        .filter(|&(r, c)| env.is_obstacle(r, c))
        .map(|(r, c)| (r as f64, c as f64))
        .collect();
    let mut out = Vec::with_capacity(env.rows() * env.cols());
    for r in 0..env.rows() {
        for c in 0..env.cols() {
            let d = obstacles
                .iter()
                .map(|&(a, b)| ((a - r as f64).powi(2) + (b - c as f64).powi(2)).sqrt())
                .fold(f64::INFINITY, f64::min);
            out.push(d * env.cell_size());
        }
    }
    out
}

/// Lower-left convex hull vertices of a two-objective point set: the
/// points that uniquely minimize `w·p` for some strictly positive `w`.
pub fn extreme_points_2d(points: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut pts: Vec<Vec<f64>> = pareto_front(points);
    pts.sort_by(|a, b| a[0].total_cmp(&b[0]));
    // Sorted by f1 ascending, f2 descending along a Pareto front; keep the
    // convex chain.
    let mut hull: Vec<Vec<f64>> = Vec::new();
    for p in pts {
        while hull.len() >= 2 {
            let (a, b) = (&hull[hull.len() - 2], &hull[hull.len() - 1]);
            let cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
            if cross <= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull
}

fn orient(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> f64 {
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

fn on_segment(a: [f64; 2], b: [f64; 2], p: [f64; 2]) -> bool {
    p[0] >= a[0].min(b[0]) && p[0] <= a[0].max(b[0]) && p[1] >= a[1].min(b[1]) && p[1] <= a[1].max(b[1])
}

/// Closed segment intersection by orientation tests.
pub fn segments_intersect(p1: [f64; 2], p2: [f64; 2], q1: [f64; 2], q2: [f64; 2]) -> bool {
    let (d1, d2) = (orient(q1, q2, p1), orient(q1, q2, p2));
    let (d3, d4) = (orient(p1, p2, q1), orient(p1, p2, q2));
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0)) {
        return true;
    }
    (d1 == 0.0 && on_segment(q1, q2, p1))
        || (d2 == 0.0 && on_segment(q1, q2, p2))
        || (d3 == 0.0 && on_segment(p1, p2, q1))
        || (d4 == 0.0 && on_segment(p1, p2, q2))
}

/// Segment meets the closed rectangle: an endpoint lies inside or the
/// segment crosses one of its sides.
pub fn segment_meets_rect(a: [f64; 2], b: [f64; 2], x0: f64, y0: f64, x1: f64, y1: f64) -> bool {
    let inside = |p: [f64; 2]| p[0] >= x0 && p[0] <= x1 && p[1] >= y0 && p[1] <= y1;
    if inside(a) || inside(b) {
        return true;
    }
    let c = [[x0, y0], [x1, y0], [x1, y1], [x0, y1]];
    (0..4).any(|i| segments_intersect(a, b, c[i], c[(i + 1) % 4]))
}

/// Exact area of the part of `[0, 1]²` weakly dominated by `set`, by
/// sweeping the staircase of the non-dominated points.
pub fn dominated_area_2d(set: &[Vec<f64>]) -> f64 {
    let mut pts: Vec<(f64, f64)> = set.iter().map(|p| (p[0], p[1])).collect();
    pts.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    let mut area = 0.0;
    let mut best_y = 1.0f64;
    for (i, &(x, y)) in pts.iter().enumerate() {
        best_y = best_y.min(y);
        let next_x = pts.get(i + 1).map_or(1.0, |p| p.0);
        area += (next_x - x) * (1.0 - best_y);
    }
    area
}
