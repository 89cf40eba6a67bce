use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{approx_eq_scalar, pareto_filter, CostVector};

pub const DEFAULT_COVERAGE_SAMPLES: usize = 100_000;

/// Per-objective min-max scaling to `[0, 1]` over the whole set; objectives
/// that are constant across the set map to 0.
pub fn normalize_objectives(costs: &[CostVector]) -> Vec<Vec<f64>> {
    let Some(first) = costs.first() else {
        return Vec::new();
    };
    let n = first.len();
    let mut lo = vec![f64::INFINITY; n];
    let mut hi = vec![f64::NEG_INFINITY; n];
    for c in costs {
        for i in 0..n {
            lo[i] = lo[i].min(c[i]);
            hi[i] = hi[i].max(c[i]);
        }
    }
    costs
        .iter()
        .map(|c| {
            (0..n)
                .map(|i| {
                    let span = hi[i] - lo[i];
                    if span > 0.0 {
                        ((c[i] - lo[i]) / span).clamp(0.0, 1.0)
                    } else {
                        0.0
                    }
                })
                .collect()
        })
        .collect()
}

/// Monte-Carlo estimate of the share of `[0, 1]^n` weakly dominated by
/// some member of `set`.
pub fn coverage(set: &[Vec<f64>], samples: usize, seed: u64) -> f64 {
    let Some(first) = set.first() else {
        return 0.0;
    };
    if samples == 0 {
        return 0.0;
    }
    let n = first.len();
    // Only non-dominated members matter; fewer members make sampling cheaper.
    let front: Vec<CostVector> = pareto_filter(
        &set.iter()
            .map(|v| CostVector::new(v.clone()).expect("normalized costs are valid"))
            .collect::<Vec<_>>(),
    );
    let front: Vec<&[f64]> = front.iter().map(|c| c.as_slice()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x = vec![0.0; n];
    let mut hits = 0usize;
    for _ in 0..samples {
        x.iter_mut().for_each(|v| *v = rng.random::<f64>());
        if front.iter().any(|s| s.iter().zip(&x).all(|(a, b)| a <= b)) {
            hits += 1;
        }
    }
    hits as f64 / samples as f64
}

/// Number of distinct non-dominated cost vectors in `costs`.
pub fn unique_solutions(costs: &[CostVector]) -> usize {
    pareto_filter(costs).len()
}

/// `100 · (cost − optimum) / optimum`.
pub fn percent_error(cost: f64, optimum: f64) -> Result<f64> {
    if optimum.is_nan() || optimum <= 0.0 {
        return Err(Error::Config(format!("percentage error needs a positive optimum, got {optimum}")));
    }
    if approx_eq_scalar(cost, optimum) {
        // Summation order alone can put equal costs a few ulps apart.
        return Ok(0.0);
    }
    Ok(100.0 * (cost - optimum) / optimum)
}

/// `max_i w_i F_i − min_i w_i F_i`.
pub fn weighted_spread(cost: &[f64], w: &[f64]) -> f64 {
    let (lo, hi) = cost
        .iter()
        .zip(w)
        .map(|(c, w)| c * w)
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    hi - lo
}

/// Linear-interpolation quantile of `values` (`q` in `[0, 1]`).
pub fn quantile(values: &[f64], q: f64) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let pos = q.clamp(0.0, 1.0) * (v.len() - 1) as f64;
    let (i, frac) = (pos.floor() as usize, pos.fract());
    Some(if i + 1 < v.len() { v[i] + frac * (v[i + 1] - v[i]) } else { v[i] })
}

pub fn mean(values: &[f64]) -> Option<f64> {
    (!values.is_empty()).then(|| values.iter().sum::<f64>() / values.len() as f64)
}
