//! Seeded, splittable random streams.
//!
//! Every sampling routine takes an explicit seed or generator. Parallel
//! work is split into numbered streams of the same ChaCha key, so results
//! do not depend on thread scheduling.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type SimRng = ChaCha8Rng;

/// Generator for `(seed, stream)`; distinct streams are independent.
pub fn stream(seed: u64, stream: u64) -> SimRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn from_seed(seed: u64) -> SimRng {
    stream(seed, 0)
}
