use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// WM-LNS hyperparameters.
///
/// `Default` gives the two-objective configuration (random repair weights,
/// longer runs); [`LnsParams::for_objectives`] switches to the shorter
/// pattern-search configuration when there are more than two objectives.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LnsParams {
    pub max_iterations: usize,
    pub non_improving_limit: usize,
    /// Lower bound on removed vertices as a fraction of path length.
    pub min_removed_fraction: f64,
    pub max_removed_fraction: f64,
    pub cooling_rate: f64,
    /// Relative deterioration accepted with probability 1/2 at the start temperature.
    pub start_temp_deterioration: f64,
    /// Reheat after this fraction of `non_improving_limit` stagnant iterations.
    pub reheat_fraction: f64,
    pub alns_window: usize,
    pub reaction_factor: f64,
    pub reward_global_best: f64,
    pub reward_improvement: f64,
    pub reward_accepted: f64,
    pub initial_beam_width: usize,
    pub gps_iterations: usize,
    pub gps_step_min: f64,
    pub gps_step_max: f64,
    pub gps_mesh_increase: f64,
    pub gps_mesh_decrease: f64,
    /// Exponent range `[min, 0]` for log-scale repair weight sampling.
    pub log_weight_exponent_min: f64,
    pub seed: u64,
}

impl Default for LnsParams {
    fn default() -> Self {
        Self {
            max_iterations: 400,
            non_improving_limit: 50,
            min_removed_fraction: 0.05,
            max_removed_fraction: 0.95,
            cooling_rate: 0.985,
            start_temp_deterioration: 0.5,
            reheat_fraction: 0.95,
            alns_window: 50,
            reaction_factor: 0.75,
            reward_global_best: 15.0,
            reward_improvement: 3.0,
            reward_accepted: 1.0,
            initial_beam_width: 1,
            gps_iterations: 2,
            gps_step_min: 0.125,
            gps_step_max: 0.25,
            gps_mesh_increase: 2.0,
            gps_mesh_decrease: 0.25,
            log_weight_exponent_min: -3.0,
            seed: 0,
        }
    }
}

impl LnsParams {
    pub fn for_objectives(n: usize) -> Self {
        let mut p = Self::default();
        if n > 2 {
            p.max_iterations = 75;
            p.non_improving_limit = 25;
        }
        p
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// Overlays the fields present in `overrides` (a JSON object) on `self`.
    pub fn with_overrides(&self, overrides: &serde_json::Value) -> Result<Self> {
        let mut base = serde_json::to_value(self)?;
        let (Some(target), Some(patch)) = (base.as_object_mut(), overrides.as_object()) else {
            return Err(Error::Config("LNS parameter overrides must be a JSON object".into()));
        };
        for (k, v) in patch {
            target.insert(k.clone(), v.clone());
        }
        let params: Self = serde_json::from_value(base)
            .map_err(|e| Error::Config(format!("bad LNS parameters: {e}")))?;
        params.validate()?;
        Ok(params)
    }

    /// Iterations without a new best before the temperature is reset.
    pub fn reheat_after(&self) -> usize {
        ((self.reheat_fraction * self.non_improving_limit as f64).ceil() as usize).max(1)
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: &str| Err(Error::Config(msg.to_string()));
        if !(self.cooling_rate > 0.0 && self.cooling_rate < 1.0) {
            return fail("cooling rate must lie in (0, 1)");
        }
        if !(self.start_temp_deterioration > 0.0 && self.start_temp_deterioration < 1.0) {
            return fail("start temperature deterioration must lie in (0, 1)");
        }
        if !(0.0..=1.0).contains(&self.reaction_factor) {
            return fail("reaction factor must lie in [0, 1]");
        }
        if !(self.reward_global_best >= self.reward_improvement
            && self.reward_improvement >= self.reward_accepted
            && self.reward_accepted >= 0.0)
        {
            return fail("rewards must satisfy global >= improvement >= accepted >= 0");
        }
        if !(self.gps_step_min >= 0.0 && self.gps_step_min < self.gps_step_max) {
            return fail("GPS step bounds must satisfy 0 <= min < max");
        }
        if !(self.gps_mesh_increase >= 1.0 && self.gps_mesh_decrease > 0.0 && self.gps_mesh_decrease <= 1.0) {
            return fail("GPS mesh factors must satisfy increase >= 1 and 0 < decrease <= 1");
        }
        if !(0.0 <= self.min_removed_fraction && self.min_removed_fraction <= self.max_removed_fraction) {
            return fail("removed-vertex fractions must satisfy 0 <= min <= max");
        }
        if self.alns_window == 0 || self.initial_beam_width == 0 {
            return fail("ALNS window and initial beam width must be positive");
        }
        if self.log_weight_exponent_min.is_nan() || self.log_weight_exponent_min >= 0.0 {
            return fail("log weight exponent range must be negative");
        }
        Ok(())
    }
}
