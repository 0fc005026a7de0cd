use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::forest::{forest_fit, ForestModel, Hyper, Mode};
use crate::dataset::{PcaModel, ScalerModel};
use crate::error::{Error, Result};
use crate::seeds::derive_seed;

/// Optional standard scaling followed by optional PCA, fitted on training rows.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Preprocess {
    pub scaler: Option<ScalerModel>,
    pub pca: Option<PcaModel>,
}

impl Preprocess {
    pub fn fit(x: &[Vec<f64>], scale: bool, pca_components: Option<usize>) -> Result<Self> {
        let scaler = if scale { Some(ScalerModel::fit(x)?) } else { None };
        let pca = match pca_components {
            Some(k) => {
                let scaled = match &scaler {
                    Some(s) => s.apply(x)?,
                    None => x.to_vec(),
                };
                Some(PcaModel::fit(&scaled, k)?)
            }
            None => None,
        };
        Ok(Preprocess { scaler, pca })
    }

    pub fn apply(&self, x: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
        let mut out = match &self.scaler {
            Some(s) => s.apply(x)?,
            None => x.to_vec(),
        };
        if let Some(p) = &self.pca {
            out = p.apply(&out)?;
        }
        Ok(out)
    }
}

fn column(y: &[Vec<bool>], j: usize) -> Vec<bool> {
    y.iter().map(|r| r[j]).collect()
}

fn check_labels(y: &[Vec<bool>], width: usize) -> Result<()> {
    match y.iter().find(|r| r.len() != width) {
        Some(r) => Err(Error::shape(format!("{width} label columns"), r.len())),
        None => Ok(()),
    }
}

/// One forest per label over shared preprocessing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MultilabelModel {
    pub label_names: Vec<String>,
    pub preprocess: Preprocess,
    pub thresholds: Vec<f64>,
    pub forests: Vec<ForestModel>,
}

/// Forest `j` is seeded from `hyper.seed` and label `j`'s name.
pub fn multilabel_fit(
    x: &[Vec<f64>],
    y: &[Vec<bool>],
    label_names: &[String],
    mode: Mode,
    hyper: Hyper,
    preprocess: Preprocess,
) -> Result<MultilabelModel> {
    check_labels(y, label_names.len())?;
    let z = preprocess.apply(x)?;
    let forests = label_names
        .iter()
        .enumerate()
        .map(|(j, name)| {
            let h = Hyper {
                seed: derive_seed(hyper.seed, name),
                ..hyper
            };
            forest_fit(&z, &column(y, j), mode, h)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MultilabelModel {
        label_names: label_names.to_vec(),
        preprocess,
        thresholds: vec![0.5; label_names.len()],
        forests,
    })
}

impl MultilabelModel {
    pub fn mode(&self) -> Option<Mode> {
        self.forests.first().map(|f| f.mode)
    }

    /// Per-row, per-label probabilities.
    pub fn predict_proba(&self, x: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
        if self.forests.is_empty() {
            return Err(Error::EmptyModel);
        }
        let z = self.preprocess.apply(x)?;
        let per_label = self
            .forests
            .iter()
            .map(|f| f.predict_proba(&z))
            .collect::<Result<Vec<_>>>()?;
        Ok((0..x.len())
            .map(|i| per_label.iter().map(|p| p[i]).collect())
            .collect())
    }

    pub fn predict(&self, x: &[Vec<f64>]) -> Result<Vec<Vec<bool>>> {
        Ok(self
            .predict_proba(x)?
            .into_iter()
            .map(|row| row.iter().zip(&self.thresholds).map(|(p, t)| p >= t).collect())
            .collect())
    }

    /// Importance per input column, averaged over the label forests.
    pub fn importance(&self) -> Vec<f64> {
        let width = self.forests.first().map_or(0, |f| f.importance.len());
        let mut total = vec![0.0; width];
        for f in &self.forests {
            for (a, b) in total.iter_mut().zip(&f.importance) {
                *a += b / self.forests.len() as f64;
            }
        }
        total
    }
}

pub fn multilabel_predict(model: &MultilabelModel, x: &[Vec<f64>]) -> Result<Vec<Vec<bool>>> {
    model.predict(x)
}

/// Predicts each label independently with its training frequency.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaselineModel {
    pub label_names: Vec<String>,
    pub frequencies: Vec<f64>,
}

impl BaselineModel {
    pub fn fit(y: &[Vec<bool>], label_names: &[String]) -> Result<Self> {
        if y.is_empty() {
            return Err(Error::invalid("cannot fit the baseline on zero rows"));
        }
        check_labels(y, label_names.len())?;
        let n = y.len() as f64;
        let frequencies = (0..label_names.len())
            .map(|j| y.iter().filter(|r| r[j]).count() as f64 / n)
            .collect();
        Ok(BaselineModel {
            label_names: label_names.to_vec(),
            frequencies,
        })
    }

    pub fn predict(&self, rows: usize, seed: u64) -> Vec<Vec<bool>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..rows)
            .map(|_| {
                self.frequencies
                    .iter()
                    .map(|&f| rng.random::<f64>() < f)
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(k: usize) -> Vec<String> {
        (0..k).map(|i| format!("l{i}")).collect()
    }

    fn synthetic(n: usize, seed: u64) -> (Vec<Vec<f64>>, Vec<Vec<bool>>) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n)
            .map(|_| {
                let row: Vec<f64> = (0..4).map(|_| rng.random_range(-1.0..1.0)).collect();
                let labels = vec![row[0] > 0.0, row[1] > 0.5, false];
                (row, labels)
            })
            .unzip()
    }

    #[test]
    fn separable_labels_and_constant_label() {
        let (x, y) = synthetic(200, 1);
        let pre = Preprocess::fit(&x, true, Some(4)).unwrap();
        let m = multilabel_fit(&x, &y, &names(3), Mode::RandomForest, Hyper::with_trees(20), pre).unwrap();
        let pred = m.predict(&x).unwrap();
        assert_eq!(pred, y);
        assert!(pred.iter().all(|r| !r[2]));
        assert_eq!(m.predict(&x).unwrap(), multilabel_predict(&m, &x).unwrap());
    }

    #[test]
    fn deterministic_per_seed() {
        let (x, y) = synthetic(80, 2);
        let fit = |seed| {
            let h = Hyper { seed, ..Hyper::with_trees(10) };
            multilabel_fit(&x, &y, &names(3), Mode::ExtraTrees, h, Preprocess::default()).unwrap()
        };
        assert_eq!(fit(3), fit(3));
        assert_ne!(fit(3).forests[0].trees, fit(4).forests[0].trees);
    }

    #[test]
    fn baseline_frequencies() {
        let y = vec![vec![true, false, true], vec![false, false, true], vec![true, false, true]];
        let b = BaselineModel::fit(&y, &names(3)).unwrap();
        assert_eq!(b.frequencies, vec![2.0 / 3.0, 0.0, 1.0]);
        let p = b.predict(500, 1);
        assert!(p.iter().all(|r| !r[1] && r[2]));
        assert_eq!(p, b.predict(500, 1));
    }

    #[test]
    fn baseline_rate() {
        let b = BaselineModel {
            label_names: names(1),
            frequencies: vec![0.3],
        };
        let hits = b.predict(100_000, 7).iter().filter(|r| r[0]).count();
        assert!((hits as f64 / 1e5 - 0.3).abs() < 0.01);
    }
}
