use crate::graph::WeightVector;

/// Euclidean projection of `v` onto `{x >= 0, Σx = 1}`.
///
/// Sort-based threshold search: find `tau` with `Σ max(v_i - tau, 0) = 1`
/// and clip. `O(n log n)`, which is plenty for weight vectors.
pub fn project_simplex(v: &[f64]) -> WeightVector {
    assert!(!v.is_empty(), "cannot project an empty vector");
    let mut sorted = v.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let mut cumsum = 0.0;
    let mut tau = 0.0;
    for (i, &u) in sorted.iter().enumerate() {
        cumsum += u;
        let t = (cumsum - 1.0) / (i + 1) as f64;
        if u - t > 0.0 {
            tau = t;
        }
    }
    let mut x: Vec<f64> = v.iter().map(|&vi| (vi - tau).max(0.0)).collect();
    // Fix residual rounding so the result passes the simplex check exactly.
    let sum: f64 = x.iter().sum();
    if sum > 0.0 && (sum - 1.0).abs() > 0.0 {
        x.iter_mut().for_each(|xi| *xi /= sum);
    }
    WeightVector::from_raw(x)
}
