//! Decision-tree ensembles grown from scratch, a frequency baseline, and
//! one-forest-per-label multilabel classification.

mod forest;
mod multilabel;
mod persist;
mod tree;

pub use forest::{forest_fit, forest_predict_proba, ForestModel, Hyper, Mode};
pub use multilabel::{
    multilabel_fit, multilabel_predict, BaselineModel, MultilabelModel, Preprocess,
};
pub use persist::{Model, ModelFile};
pub use tree::{tree_fit, Node, SplitRule, Tree, TreeParams};
