use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Index};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative tolerance used when two cost vectors are compared for equality.
pub const COST_REL_TOL: f64 = 1e-9;

/// Absolute tolerance for a weight vector to count as a point on the simplex.
pub const SIMPLEX_TOL: f64 = 1e-9;

/// Accumulated non-negative objective costs of an edge or a path.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CostVector(Vec<f64>);

impl CostVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidGraph("cost vector must have at least one objective".into()));
        }
        if let Some(bad) = values.iter().find(|v| !v.is_finite() || **v < 0.0) {
            return Err(Error::InvalidGraph(format!(
                "cost components must be finite and non-negative, got {bad}"
            )));
        }
        Ok(Self(values))
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0.0; n])
    }

    pub(crate) fn from_raw(values: Vec<f64>) -> Self {
        Self(values)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }

    /// Component-wise equality within [`COST_REL_TOL`].
    pub fn approx_eq(&self, other: &CostVector) -> bool {
        approx_eq_slice(&self.0, &other.0)
    }

    pub fn dominates(&self, other: &CostVector) -> Result<bool> {
        dominates(self, other)
    }
}

impl Index<usize> for CostVector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl AddAssign<&[f64]> for CostVector {
    fn add_assign(&mut self, rhs: &[f64]) {
        debug_assert_eq!(self.0.len(), rhs.len());
        for (a, b) in self.0.iter_mut().zip(rhs) {
            *a += b;
        }
    }
}

impl Add<&CostVector> for &CostVector {
    type Output = CostVector;

    fn add(self, rhs: &CostVector) -> CostVector {
        let mut out = self.clone();
        out += rhs.as_slice();
        out
    }
}

impl fmt::Display for CostVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v:.6}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn approx_eq_scalar(a: f64, b: f64) -> bool {
    (a - b).abs() <= COST_REL_TOL * a.abs().max(b.abs()).max(1.0)
}

pub(crate) fn approx_eq_slice(a: &[f64], b: &[f64]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| approx_eq_scalar(*x, *y))
}

/// A preference vector on the unit simplex.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    /// Accepts `weights` only if they already lie on the simplex.
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights("weight vector is empty".into()));
        }
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::InvalidWeights(format!(
                "weights must be finite and non-negative: {weights:?}"
            )));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > SIMPLEX_TOL {
            return Err(Error::InvalidWeights(format!("weights sum to {sum}, expected 1")));
        }
        Ok(Self(weights))
    }

    /// Scales a non-negative vector with positive mass onto the simplex.
    pub fn normalized(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() || values.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::InvalidWeights(format!(
                "cannot normalize {values:?} onto the simplex"
            )));
        }
        let sum: f64 = values.iter().sum();
        if sum <= 0.0 {
            return Err(Error::InvalidWeights("weights have zero total mass".into()));
        }
        Ok(Self(values.into_iter().map(|v| v / sum).collect()))
    }

    pub fn uniform(n: usize) -> Self {
        assert!(n > 0, "weight vector needs at least one component");
        Self(vec![1.0 / n as f64; n])
    }

    pub fn unit(n: usize, j: usize) -> Self {
        assert!(j < n, "unit index {j} out of range for dimension {n}");
        let mut w = vec![0.0; n];
        w[j] = 1.0;
        Self(w)
    }

    pub(crate) fn from_raw(values: Vec<f64>) -> Self {
        Self(values)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    /// Appends `extra` zero weights (used by the BWSA construction).
    pub fn extended_with_zeros(&self, extra: usize) -> Self {
        let mut w = self.0.clone();
        w.resize(self.0.len() + extra, 0.0);
        Self(w)
    }
}

impl TryFrom<Vec<f64>> for WeightVector {
    type Error = Error;

    fn try_from(value: Vec<f64>) -> Result<Self> {
        Self::new(value)
    }
}

impl From<WeightVector> for Vec<f64> {
    fn from(w: WeightVector) -> Self {
        w.0
    }
}

impl Index<usize> for WeightVector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

fn check_dims(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::DimensionMismatch { expected, got });
    }
    Ok(())
}

/// Weighted sum `Σ w_i F_i`.
pub fn ws_cost(cost: &CostVector, w: &WeightVector) -> Result<f64> {
    check_dims(cost.len(), w.len())?;
    Ok(weighted_sum(cost.as_slice(), w.as_slice()))
}

/// Weighted maximum `max_i w_i F_i + rho Σ F_i`.
pub fn wm_cost(cost: &CostVector, w: &WeightVector, rho: f64) -> Result<f64> {
    check_dims(cost.len(), w.len())?;
    if rho.is_nan() || rho < 0.0 {
        return Err(Error::Config(format!("tie-breaker rho must be non-negative, got {rho}")));
    }
    Ok(weighted_max(cost.as_slice(), w.as_slice()) + rho * cost.sum())
}

/// Default tie-breaker: `1e-6 / (n · max edge component)`.
pub fn default_rho(n_objectives: usize, max_edge_component: f64) -> f64 {
    if max_edge_component > 0.0 {
        1e-6 / (n_objectives as f64 * max_edge_component)
    } else {
        1e-6
    }
}

#[inline]
pub(crate) fn weighted_sum(cost: &[f64], w: &[f64]) -> f64 {
    cost.iter().zip(w).map(|(c, w)| c * w).sum()
}

#[inline]
pub(crate) fn weighted_max(cost: &[f64], w: &[f64]) -> f64 {
    cost.iter().zip(w).map(|(c, w)| c * w).fold(0.0, f64::max)
}

/// Ordering key for weighted-maximum comparisons.
///
/// Ties in the weighted maximum are broken by the plain objective sum, which is
/// the `rho -> 0+` limit of the additive tie-breaker and never reorders two
/// paths whose weighted maxima differ.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WmKey {
    pub wm: f64,
    pub sum: f64,
}

impl WmKey {
    #[inline]
    pub fn of(cost: &[f64], w: &[f64]) -> Self {
        Self {
            wm: weighted_max(cost, w),
            sum: cost.iter().sum(),
        }
    }
}

impl Eq for WmKey {}

impl PartialOrd for WmKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WmKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.wm
            .total_cmp(&other.wm)
            .then_with(|| self.sum.total_cmp(&other.sum))
    }
}

/// Pareto dominance: `a <= b` everywhere and `a < b` somewhere.
pub fn dominates(a: &CostVector, b: &CostVector) -> Result<bool> {
    check_dims(a.len(), b.len())?;
    Ok(dominates_slice(a.as_slice(), b.as_slice()))
}

#[inline]
pub(crate) fn dominates_slice(a: &[f64], b: &[f64]) -> bool {
    let mut strict = false;
    for (x, y) in a.iter().zip(b) {
        if x > y {
            return false;
        }
        if x < y {
            strict = true;
        }
    }
    strict
}

/// `a <= b` in every component.
#[inline]
pub(crate) fn weakly_dominates_slice(a: &[f64], b: &[f64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Non-dominated members of `set`, with near-equal vectors collapsed to one.
///
/// The result is sorted lexicographically.
pub fn pareto_filter(set: &[CostVector]) -> Vec<CostVector> {
    let mut sorted: Vec<&CostVector> = set.iter().collect();
    sorted.sort_by(|a, b| lex_cmp(a.as_slice(), b.as_slice()));
    // Lexicographic order guarantees no later vector dominates an earlier one.
    let mut kept: Vec<CostVector> = Vec::new();
    for candidate in sorted {
        let c = candidate.as_slice();
        let shadowed = kept.iter().any(|k| {
            let k = k.as_slice();
            dominates_slice(k, c) || approx_eq_slice(k, c)
        });
        if !shadowed {
            kept.push(candidate.clone());
        }
    }
    kept
}

pub(crate) fn lex_cmp(a: &[f64], b: &[f64]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.total_cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}
