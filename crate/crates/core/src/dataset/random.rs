use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::oeis::{Sequence, SequenceId, TermSource};

/// `count` sequences of independent uniform integers in `[lo, hi)`, with
/// ids `R000001`, `R000002`, ...
pub fn generate_random_sequences(
    count: usize,
    length: usize,
    lo: i64,
    hi: i64,
    seed: u64,
) -> Result<Vec<Sequence>> {
    if length == 0 {
        return Err(Error::invalid("random sequence length must be positive"));
    }
    if lo >= hi {
        return Err(Error::invalid(format!("empty range [{lo}, {hi})")));
    }
    if count > SequenceId::MAX_NUMBER as usize {
        return Err(Error::invalid(format!("at most {} random sequences", SequenceId::MAX_NUMBER)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((1..=count as u32)
        .map(|k| {
            let terms = (0..length)
                .map(|_| BigInt::from(rng.random_range(lo..hi)))
                .collect();
            let id = SequenceId::synthetic(k).expect("bounded above");
            Sequence::new(id, terms, TermSource::Synthetic)
        })
        .collect())
}
