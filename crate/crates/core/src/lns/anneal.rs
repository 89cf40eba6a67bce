use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// Outcome of one acceptance test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Decision {
    Accept,
    Reject,
    /// Equal WM cost: the current solution is kept without drawing.
    Skip,
    /// The repair step found no reconnecting segment.
    RepairFailed,
}

/// Relative WM change from `current` to `candidate`.
pub fn relative_change(candidate: f64, current: f64) -> f64 {
    (candidate - current) / (current + 1e-9)
}

/// Metropolis test on a relative change `delta` at temperature `t`.
pub fn accept_delta<R: Rng + ?Sized>(delta: f64, t: f64, rng: &mut R) -> Decision {
    if delta < 0.0 {
        Decision::Accept
    } else if delta == 0.0 {
        Decision::Skip
    } else if t > 0.0 && rng.random::<f64>() < (-delta / t).exp() {
        Decision::Accept
    } else {
        Decision::Reject
    }
}

/// Start temperature at which a relative deterioration of `p` is accepted
/// with probability one half.
pub fn initial_temperature(p: f64) -> Result<f64> {
    if !(p > 0.0 && p.is_finite()) {
        return Err(Error::Config(format!("deterioration level must be positive, got {p}")));
    }
    Ok(p / std::f64::consts::LN_2)
}

/// Geometric cooling with reheating.
#[derive(Clone, Debug)]
pub struct Annealer {
    t0: f64,
    t: f64,
    rate: f64,
}

impl Annealer {
    pub fn new(t0: f64, rate: f64) -> Self {
        Self { t0, t: t0, rate }
    }

    pub fn temperature(&self) -> f64 {
        self.t
    }

    pub fn cool(&mut self) {
        self.t *= self.rate;
    }

    /// Resets the temperature to half the start temperature.
    pub fn reheat(&mut self) {
        self.t = 0.5 * self.t0;
    }
}
