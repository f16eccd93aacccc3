//! Small shared helpers.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Deterministic RNG for reproducible randomized checks.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
