//! Configuration and the stage functions behind the command-line tool.

mod config;
mod stages;

pub use config::{
    CorpusConfig, ModelKind, PreprocessConfig, RandomConfig, RansacConfig, RunConfig,
    SplitConfig, Task, TrainConfig,
};
pub use stages::{
    classify, evaluate, export_figs, features, ingest, make_dataset, model_id, ransac,
    run_pipeline, slope_points, train, train_all, Classification, IngestSummary, Layout,
    RansacArtifact,
};
