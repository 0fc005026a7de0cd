//! Labelled datasets: random negatives, splits, scaling and PCA.

mod pca;
mod random;
mod scale;
mod split;
mod table;

pub use pca::PcaModel;
pub use random::generate_random_sequences;
pub(crate) use scale::check_width;
pub use scale::ScalerModel;
pub use split::{split, split_sizes, SplitTag};
pub use table::{Dataset, FEATURES_FILE, LABELS_FILE, SPLIT_FILE};
