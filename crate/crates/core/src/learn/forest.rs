use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::tree::{tree_fit, SplitRule, Tree, TreeParams};
use crate::dataset::check_width;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    RandomForest,
    ExtraTrees,
}

impl Mode {
    pub fn default_split_rule(&self) -> SplitRule {
        match self {
            Mode::RandomForest => SplitRule::BestGini,
            Mode::ExtraTrees => SplitRule::RandomThreshold,
        }
    }

    pub fn default_bootstrap(&self) -> bool {
        matches!(self, Mode::RandomForest)
    }
}

/// Forest hyperparameters. `bootstrap` and `split_rule` fall back to the
/// mode's own rule when unset.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Hyper {
    pub n_trees: usize,
    pub max_depth: Option<usize>,
    pub min_samples_leaf: usize,
    pub max_features: usize,
    pub bootstrap: Option<bool>,
    pub split_rule: Option<SplitRule>,
    pub seed: u64,
}

impl Hyper {
    /// ceil(sqrt(14)) features per split, unlimited depth, single-sample leaves.
    pub fn with_trees(n_trees: usize) -> Self {
        Hyper {
            n_trees,
            max_depth: None,
            min_samples_leaf: 1,
            max_features: 4,
            bootstrap: None,
            split_rule: None,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ForestModel {
    pub mode: Mode,
    pub hyper: Hyper,
    pub n_features: usize,
    /// Normalised total Gini decrease per feature.
    pub importance: Vec<f64>,
    pub trees: Vec<Tree>,
}

fn normalise(v: &mut [f64]) {
    let total: f64 = v.iter().sum();
    if total > 0.0 {
        v.iter_mut().for_each(|x| *x /= total);
    }
}

/// Trees are grown in parallel; tree `t` draws from stream `t` of a ChaCha8
/// generator seeded with `hyper.seed`, so the result ignores scheduling.
pub fn forest_fit(x: &[Vec<f64>], y: &[bool], mode: Mode, hyper: Hyper) -> Result<ForestModel> {
    let n = x.len();
    if n == 0 {
        return Err(Error::invalid("cannot train on zero rows"));
    }
    if y.len() != n {
        return Err(Error::shape(format!("{n} labels"), y.len()));
    }
    let n_features = x[0].len();
    check_width(x, n_features)?;
    if hyper.n_trees == 0 {
        return Err(Error::invalid("a forest needs at least one tree"));
    }
    let params = TreeParams {
        max_depth: hyper.max_depth,
        min_samples_leaf: hyper.min_samples_leaf,
        max_features: hyper.max_features,
        split_rule: hyper.split_rule.unwrap_or(mode.default_split_rule()),
    };
    let bootstrap = hyper.bootstrap.unwrap_or(mode.default_bootstrap());
    let grown: Vec<(Tree, Vec<f64>)> = (0..hyper.n_trees)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(hyper.seed);
            rng.set_stream(t as u64);
            let samples: Vec<usize> = if bootstrap {
                (0..n).map(|_| rng.random_range(0..n)).collect()
            } else {
                (0..n).collect()
            };
            let (tree, mut imp) = tree_fit(x, y, samples, params, &mut rng);
            normalise(&mut imp);
            (tree, imp)
        })
        .collect();
    let mut importance = vec![0.0; n_features];
    for (_, imp) in &grown {
        for (a, b) in importance.iter_mut().zip(imp) {
            *a += b;
        }
    }
    normalise(&mut importance);
    Ok(ForestModel {
        mode,
        hyper,
        n_features,
        importance,
        trees: grown.into_iter().map(|(t, _)| t).collect(),
    })
}

impl ForestModel {
    /// Mean over trees of the positive fraction in the reached leaf.
    pub fn predict_proba(&self, x: &[Vec<f64>]) -> Result<Vec<f64>> {
        if self.trees.is_empty() {
            return Err(Error::EmptyModel);
        }
        check_width(x, self.n_features)?;
        let k = self.trees.len() as f64;
        Ok(x.iter()
            .map(|row| self.trees.iter().map(|t| t.predict_proba(row)).sum::<f64>() / k)
            .collect())
    }
}

pub fn forest_predict_proba(model: &ForestModel, x: &[Vec<f64>]) -> Result<Vec<f64>> {
    model.predict_proba(x)
}
