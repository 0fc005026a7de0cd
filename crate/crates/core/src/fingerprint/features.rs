use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{digit_distribution, taylor_features, DigitDistribution, Distances, TaylorFit};
use crate::oeis::{Sequence, SequenceId};

pub const FEATURE_COUNT: usize = 14;

/// Column names in the fixed feature order.
pub const FEATURE_NAMES: [&str; FEATURE_COUNT] = [
    "s", "intercept", "r", "p_z", "b_d0", "b_d1", "b_d2", "b_d3", "b_d4", "b_d5", "b_d6", "b_d7",
    "b_d8", "b_d9",
];

/// `[s, intercept, r, p_z, b_d(0), ..., b_d(9)]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FeatureVector(pub [f64; FEATURE_COUNT]);

impl FeatureVector {
    pub fn from_parts(taylor: &TaylorFit, digits: &DigitDistribution) -> Self {
        let mut v = [0.0; FEATURE_COUNT];
        v[0] = taylor.s;
        v[1] = taylor.intercept;
        v[2] = taylor.r;
        v[3] = digits.p_z;
        v[4..].copy_from_slice(&digits.b_d);
        FeatureVector(v)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

/// Everything computed for one sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct Fingerprint {
    pub id: SequenceId,
    pub features: FeatureVector,
    pub distances: Distances,
}

pub fn feature_vector(seq: &Sequence) -> FeatureVector {
    FeatureVector::from_parts(&taylor_features(&seq.terms), &digit_distribution(&seq.terms))
}

pub fn fingerprint(seq: &Sequence) -> Fingerprint {
    let digits = digit_distribution(&seq.terms);
    Fingerprint {
        id: seq.id,
        features: FeatureVector::from_parts(&taylor_features(&seq.terms), &digits),
        distances: Distances::of(&digits),
    }
}

/// Fingerprints every sequence on the current rayon pool. Output order
/// follows input order.
pub fn fingerprint_all(sequences: &[Sequence]) -> Vec<Fingerprint> {
    sequences.par_iter().map(fingerprint).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oeis::TermSource;
    use num_bigint::BigInt;

    fn seq(terms: Vec<i64>) -> Sequence {
        Sequence::new(
            SequenceId::oeis(1).unwrap(),
            terms.into_iter().map(BigInt::from).collect(),
            TermSource::Stripped,
        )
    }

    #[test]
    fn constant_sequence() {
        let v = feature_vector(&seq(vec![7; 20]));
        let mut expected = [0.0; FEATURE_COUNT];
        expected[3] = 1.0;
        expected[4 + 7] = 1.0;
        assert_eq!(v.0, expected);
    }

    #[test]
    fn zero_sequence() {
        let v = feature_vector(&seq(vec![0; 20]));
        assert_eq!(v.0[3], 0.0);
        assert_eq!(v.0[4], 1.0);
        assert_eq!(&v.0[..3], &[0.0, 0.0, 0.0]);
    }

    #[test]
    fn parallel_order_is_stable() {
        let seqs: Vec<Sequence> = (1..40)
            .map(|k| {
                let mut s = seq((1..200).map(|n| n * k + (n % k)).collect());
                s.id = SequenceId::oeis(k as u32).unwrap();
                s
            })
            .collect();
        let serial: Vec<Fingerprint> = seqs.iter().map(fingerprint).collect();
        for threads in [1, 4] {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
            assert_eq!(pool.install(|| fingerprint_all(&seqs)), serial);
        }
    }
}
