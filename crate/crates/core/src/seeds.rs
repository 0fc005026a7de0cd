//! Deterministic sub-seeds so that every random decision traces back to one
//! master seed.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seed for the consumer named `tag`, derived from `master`.
pub fn derive_seed(master: u64, tag: &str) -> u64 {
    // FNV-1a of the tag picks the stream
    let stream = tag
        .bytes()
        .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3));
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    rng.set_stream(stream);
    rng.next_u64()
}
