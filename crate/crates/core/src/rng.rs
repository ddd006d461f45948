//! Seedable deterministic deviate streams.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

/// Source of the two deviate kinds the mutation operators consume.
///
/// `uniform01` draws from the half-open interval `[0, 1)`; `gaussian` draws a
/// normal deviate with the given mean and standard deviation. Implementations
/// other than [`RandomStream`] exist only so tests can pin individual draws.
pub trait DeviateSource {
    fn uniform01(&mut self) -> f64;
    fn gaussian(&mut self, mean: f64, sd: f64) -> f64;
}

/// Deterministic deviate stream derived from a single integer seed.
///
/// Streams built from equal seeds emit bit-identical sequences. A stream is
/// single-owner and deliberately not `Clone`, so it cannot be shared between
/// concurrent activities.
#[derive(Debug)]
pub struct RandomStream {
    rng: ChaCha8Rng,
}

impl RandomStream {
    pub fn from_seed(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl DeviateSource for RandomStream {
    fn uniform01(&mut self) -> f64 {
        self.rng.random::<f64>()
    }

    fn gaussian(&mut self, mean: f64, sd: f64) -> f64 {
        debug_assert!(sd >= 0.0, "negative standard deviation {sd}");
        let z: f64 = self.rng.sample(StandardNormal);
        mean + sd * z
    }
}
