use rand::Rng;

use super::destroy::DestroyHeuristic;

const N: usize = DestroyHeuristic::ALL.len();

/// Roulette-wheel pick proportional to `scores`; uniform if they are all
/// zero or not finite.
pub fn roulette<R: Rng + ?Sized>(scores: &[f64], rng: &mut R) -> usize {
    let total: f64 = scores.iter().filter(|s| s.is_finite() && **s > 0.0).sum();
    if !(total > 0.0 && total.is_finite()) {
        return rng.random_range(0..scores.len());
    }
    let mut r = rng.random::<f64>() * total;
    let mut last = 0;
    for (i, &s) in scores.iter().enumerate() {
        if !(s.is_finite() && s > 0.0) {
            continue;
        }
        last = i;
        if r < s {
            return i;
        }
        r -= s;
    }
    last
}

/// Adaptive destroy-heuristic selection.
///
/// Rewards are accumulated over a window of iterations; at the end of each
/// window, the score of every heuristic used in it moves toward its mean
/// reward by the reaction factor. Unused heuristics keep their score.
#[derive(Clone, Debug)]
pub struct AdaptiveSelector {
    scores: [f64; N],
    reward_sum: [f64; N],
    uses: [usize; N],
    window: usize,
    reaction: f64,
    recorded: usize,
}

impl AdaptiveSelector {
    pub fn new(window: usize, reaction: f64) -> Self {
        Self {
            scores: [1.0; N],
            reward_sum: [0.0; N],
            uses: [0; N],
            window: window.max(1),
            reaction,
            recorded: 0,
        }
    }

    pub fn scores(&self) -> &[f64; N] {
        &self.scores
    }

    pub fn select<R: Rng + ?Sized>(&self, rng: &mut R) -> DestroyHeuristic {
        DestroyHeuristic::ALL[roulette(&self.scores, rng)]
    }

    /// Credits `reward` to `h`; closes the window when it is full.
    pub fn record(&mut self, h: DestroyHeuristic, reward: f64) {
        let i = h.index();
        self.reward_sum[i] += reward;
        self.uses[i] += 1;
        self.recorded += 1;
        if self.recorded.is_multiple_of(self.window) {
            self.update();
        }
    }

    fn update(&mut self) {
        for i in 0..N {
            if self.uses[i] > 0 {
                let mean = self.reward_sum[i] / self.uses[i] as f64;
                self.scores[i] = (1.0 - self.reaction) * self.scores[i] + self.reaction * mean;
            }
        }
        self.reward_sum = [0.0; N];
        self.uses = [0; N];
    }
}
