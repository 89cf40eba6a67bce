use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::params::LnsParams;
use crate::error::{Error, Result};
use crate::graph::{path_cost, weighted_max, CostVector, MoGraph, Path, WeightVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DestroyHeuristic {
    Worst,
    Best,
    Unbalanced,
    Balanced,
    Random,
}

impl DestroyHeuristic {
    pub const ALL: [DestroyHeuristic; 5] = [
        DestroyHeuristic::Worst,
        DestroyHeuristic::Best,
        DestroyHeuristic::Unbalanced,
        DestroyHeuristic::Balanced,
        DestroyHeuristic::Random,
    ];

    pub fn from_index(i: usize) -> Result<Self> {
        Self::ALL
            .get(i)
            .copied()
            .ok_or_else(|| Error::UnknownHeuristic(i.to_string()))
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            DestroyHeuristic::Worst => "worst",
            DestroyHeuristic::Best => "best",
            DestroyHeuristic::Unbalanced => "unbalanced",
            DestroyHeuristic::Balanced => "balanced",
            DestroyHeuristic::Random => "random",
        }
    }
}

impl fmt::Display for DestroyHeuristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DestroyHeuristic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|h| h.name() == s)
            .ok_or_else(|| Error::UnknownHeuristic(s.to_string()))
    }
}

/// A path with a contiguous interior segment removed.
///
/// `prefix` runs from the start to the first breakpoint, `suffix` from the
/// second breakpoint to the goal.
#[derive(Clone, Debug, PartialEq)]
pub struct PartialSolution {
    pub prefix: Vec<usize>,
    pub suffix: Vec<usize>,
    pub prefix_cost: CostVector,
    pub suffix_cost: CostVector,
}

impl PartialSolution {
    /// Splits `path` around the removed interior window `[first, first + k)`.
    pub fn split(graph: &MoGraph, path: &Path, first: usize, k: usize) -> Result<Self> {
        let v = path.vertices();
        if first == 0 || first + k >= v.len() {
            return Err(Error::InvalidPath(format!(
                "window [{first}, {}) does not lie strictly inside a path of {} vertices",
                first + k,
                v.len()
            )));
        }
        let prefix = v[..first].to_vec();
        let suffix = v[first + k..].to_vec();
        Ok(Self {
            prefix_cost: path_cost(graph, &prefix)?,
            suffix_cost: path_cost(graph, &suffix)?,
            prefix,
            suffix,
        })
    }

    /// Breakpoints at both ends of the path: the repair replans everything.
    pub fn endpoints(path: &Path) -> Self {
        let n = path.cost().len();
        Self {
            prefix: vec![path.start()],
            suffix: vec![path.goal()],
            prefix_cost: CostVector::zeros(n),
            suffix_cost: CostVector::zeros(n),
        }
    }

    pub fn breakpoints(&self) -> (usize, usize) {
        (*self.prefix.last().unwrap(), self.suffix[0])
    }
}

/// Number of interior vertices to remove from a path of `path_len` vertices.
///
/// Uniform on `[max(1, ceil(min_frac L)), min(L - 2, floor(max_frac L))]`;
/// zero when the path has no interior vertex.
pub fn sample_k<R: Rng + ?Sized>(path_len: usize, params: &LnsParams, rng: &mut R) -> usize {
    let (lo, hi) = k_bounds(path_len, params);
    if hi == 0 {
        0
    } else {
        rng.random_range(lo..=hi)
    }
}

pub fn k_bounds(path_len: usize, params: &LnsParams) -> (usize, usize) {
    if path_len < 3 {
        return (0, 0);
    }
    let l = path_len as f64;
    let hi = (path_len - 2).min((params.max_removed_fraction * l).floor() as usize).max(1);
    let lo = ((params.min_removed_fraction * l).ceil() as usize).max(1).min(hi);
    (lo, hi)
}

fn mean_absolute_deviation(x: &[f64]) -> f64 {
    let mean = x.iter().sum::<f64>() / x.len() as f64;
    x.iter().map(|v| (v - mean).abs()).sum::<f64>() / x.len() as f64
}

/// Scores every window of `k` consecutive interior vertices.
///
/// Window `j` removes vertices `j + 1 ..= j + k`; its segment runs from
/// vertex `j` to vertex `j + k + 1` and includes both boundary edges.
pub fn window_scores(
    graph: &MoGraph,
    path: &Path,
    k: usize,
    w: &WeightVector,
    heuristic: DestroyHeuristic,
) -> Vec<f64> {
    let v = path.vertices();
    let n = graph.n_objectives();
    let mut cum = vec![0.0; v.len() * n];
    for i in 1..v.len() {
        let e = graph.edge_between(v[i - 1], v[i]).expect("path edges exist");
        let c = graph.edge_cost(e);
        for j in 0..n {
            cum[i * n + j] = cum[(i - 1) * n + j] + c[j];
        }
    }
    let windows = v.len().saturating_sub(k + 1);
    let mut seg = vec![0.0; n];
    (0..windows)
        .map(|j| {
            let end = j + k + 1;
            for (i, s) in seg.iter_mut().enumerate() {
                *s = (cum[end * n + i] - cum[j * n + i]).max(0.0);
            }
            match heuristic {
                DestroyHeuristic::Worst | DestroyHeuristic::Best => weighted_max(&seg, w.as_slice()),
                DestroyHeuristic::Unbalanced | DestroyHeuristic::Balanced => {
                    let weighted: Vec<f64> =
                        seg.iter().zip(w.as_slice()).map(|(s, w)| s * w).collect();
                    mean_absolute_deviation(&weighted)
                }
                DestroyHeuristic::Random => 0.0,
            }
        })
        .collect()
}

/// Index of the window a score-based heuristic removes; first index on ties.
pub fn select_window(scores: &[f64], heuristic: DestroyHeuristic) -> usize {
    let maximize = matches!(heuristic, DestroyHeuristic::Worst | DestroyHeuristic::Unbalanced);
    let mut pick = 0;
    for (j, s) in scores.iter().enumerate() {
        let better = if maximize { *s > scores[pick] } else { *s < scores[pick] };
        if better {
            pick = j;
        }
    }
    pick
}

/// Removes `k` contiguous interior vertices chosen by `heuristic`.
pub fn destroy<R: Rng + ?Sized>(
    graph: &MoGraph,
    path: &Path,
    heuristic: DestroyHeuristic,
    k: usize,
    w: &WeightVector,
    rng: &mut R,
) -> Result<PartialSolution> {
    if k == 0 || k + 2 > path.len() {
        return Err(Error::InvalidPath(format!(
            "cannot remove {k} interior vertices from a path of {} vertices",
            path.len()
        )));
    }
    let window = match heuristic {
        DestroyHeuristic::Random => rng.random_range(0..path.len() - k - 1),
        _ => select_window(&window_scores(graph, path, k, w, heuristic), heuristic),
    };
    PartialSolution::split(graph, path, window + 1, k)
}
