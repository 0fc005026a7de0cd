//! Leading-digit distributions, distances from Benford's law, and the
//! variance-versus-mean power-law fit.

mod digits;
mod distance;
mod features;
mod table;
mod taylor;

pub use digits::{digit_distribution, leading_digit, DigitDistribution};
pub use distance::{
    benford_reference, kl_divergence, ks_statistic, total_variation, wasserstein_sorted,
    BenfordReference, Distances,
};
pub use features::{
    feature_vector, fingerprint, fingerprint_all, FeatureVector, Fingerprint, FEATURE_COUNT,
    FEATURE_NAMES,
};
pub use table::{read_feature_table, write_feature_table, DISTANCE_NAMES};
pub use taylor::{taylor_features, taylor_points, TaylorFit};
