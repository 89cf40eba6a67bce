//! Supported (weighted-sum reachable) points of a Pareto front.
//!
//! A point `p` of a finite front is supported when some weight `w` on the
//! simplex makes it a weighted-sum minimizer over the front. The support
//! margin of `p` is
//!
//! ```text
//! max_{w in W} min_{q != p} w . (q - p)
//! ```
//!
//! solved as a small linear program. A non-negative margin places `p` on the
//! lower boundary of the convex hull; a strictly positive margin makes it a hull
//! vertex that is the unique minimizer for some weight.

use microlp::{ComparisonOp, OptimizationDirection, Problem};

use crate::error::{Error, Result};
use crate::graph::CostVector;

/// Margins below this are treated as zero.
pub const SUPPORT_TOL: f64 = 1e-9;

/// Support margin of every point in `front`, after per-objective scaling to
/// `[0, 1]`. Scaling by positive constants preserves the sign of each margin.
pub fn support_margins(front: &[CostVector]) -> Result<Vec<f64>> {
    let m = front.len();
    if m == 0 {
        return Ok(Vec::new());
    }
    let n = front[0].len();
    if let Some(bad) = front.iter().find(|c| c.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: bad.len(),
        });
    }
    if m == 1 {
        return Ok(vec![1.0]);
    }
    let scale: Vec<f64> = (0..n)
        .map(|i| {
            let mx = front.iter().map(|c| c[i]).fold(0.0, f64::max);
            if mx > 0.0 {
                1.0 / mx
            } else {
                1.0
            }
        })
        .collect();
    let scaled: Vec<Vec<f64>> = front
        .iter()
        .map(|c| c.as_slice().iter().zip(&scale).map(|(v, s)| v * s).collect())
        .collect();

    scaled
        .iter()
        .enumerate()
        .map(|(pi, p)| {
            let mut lp = Problem::new(OptimizationDirection::Maximize);
            let w: Vec<_> = (0..n).map(|_| lp.add_var(0.0, (0.0, 1.0))).collect();
            let t = lp.add_var(1.0, (-2.0, 2.0));
            let simplex: Vec<_> = w.iter().map(|&v| (v, 1.0)).collect();
            lp.add_constraint(simplex.as_slice(), ComparisonOp::Eq, 1.0);
            for (qi, q) in scaled.iter().enumerate() {
                if qi == pi {
                    continue;
                }
                let mut row: Vec<_> = w
                    .iter()
                    .zip(q.iter().zip(p))
                    .map(|(&v, (qv, pv))| (v, qv - pv))
                    .collect();
                row.push((t, -1.0));
                lp.add_constraint(row.as_slice(), ComparisonOp::Ge, 0.0);
            }
            let outcome = lp.solve().map_err(|e| Error::Lp(e.to_string()))?;
            let solution = outcome
                .into_solution()
                .map_err(|_| Error::Lp("solve interrupted".into()))?;
            Ok(solution.objective())
        })
        .collect()
}

/// Points on the lower-left boundary of the convex hull of `front`.
pub fn supported_solutions(front: &[CostVector]) -> Result<Vec<CostVector>> {
    let margins = support_margins(front)?;
    Ok(front
        .iter()
        .zip(margins)
        .filter(|(_, m)| *m >= -SUPPORT_TOL)
        .map(|(c, _)| c.clone())
        .collect())
}

/// Supported points that are also vertices of the hull.
pub fn extreme_supported_solutions(front: &[CostVector]) -> Result<Vec<CostVector>> {
    let margins = support_margins(front)?;
    Ok(front
        .iter()
        .zip(margins)
        .filter(|(_, m)| *m > SUPPORT_TOL)
        .map(|(c, _)| c.clone())
        .collect())
}
