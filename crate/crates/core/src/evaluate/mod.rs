//! Multilabel metrics, reports and plot-data exports.

mod figures;
mod metrics;
mod report;

pub use figures::{
    export_correlations, export_distances, export_label_scores, export_model_summary,
    export_slope_scatter,
};
pub use metrics::{per_label_metrics, subset_accuracy, weighted_average, LabelMetrics};
pub use report::Report;
