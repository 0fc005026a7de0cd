use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::forest::Mode;
use super::multilabel::{BaselineModel, MultilabelModel};
use crate::error::{Error, Result};

pub const MODEL_FORMAT: &str = "seqprint-model";
pub const MODEL_VERSION: u32 = 1;

/// A trained classifier of any kind.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Model {
    Forest(MultilabelModel),
    Extra(MultilabelModel),
    Baseline { baseline: BaselineModel, seed: u64 },
}

impl Model {
    pub fn kind(&self) -> &'static str {
        match self {
            Model::Forest(_) => "forest",
            Model::Extra(_) => "extra",
            Model::Baseline { .. } => "baseline",
        }
    }

    pub fn label_names(&self) -> &[String] {
        match self {
            Model::Forest(m) | Model::Extra(m) => &m.label_names,
            Model::Baseline { baseline, .. } => &baseline.label_names,
        }
    }

    /// Label rows for raw feature rows. The baseline ignores the features
    /// and draws from its stored seed.
    pub fn predict(&self, x: &[Vec<f64>]) -> Result<Vec<Vec<bool>>> {
        match self {
            Model::Forest(m) | Model::Extra(m) => m.predict(x),
            Model::Baseline { baseline, seed } => Ok(baseline.predict(x.len(), *seed)),
        }
    }

    fn check(&self) -> std::result::Result<(), String> {
        let expect = |m: &MultilabelModel, mode: Mode| {
            if m.forests.iter().any(|f| f.mode != mode) {
                return Err(format!("{} model holds forests of another mode", self.kind()));
            }
            if m.forests.len() != m.label_names.len() || m.thresholds.len() != m.label_names.len() {
                return Err("label, forest and threshold counts differ".into());
            }
            Ok(())
        };
        match self {
            Model::Forest(m) => expect(m, Mode::RandomForest),
            Model::Extra(m) => expect(m, Mode::ExtraTrees),
            Model::Baseline { baseline, .. } => {
                if baseline.frequencies.len() != baseline.label_names.len() {
                    return Err("label and frequency counts differ".into());
                }
                Ok(())
            }
        }
    }
}

/// Self-describing JSON envelope around a model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelFile {
    pub format: String,
    pub version: u32,
    pub model_id: String,
    pub task: String,
    pub dataset_id: String,
    pub model: Model,
}

impl ModelFile {
    pub fn new(model_id: impl Into<String>, task: impl Into<String>, dataset_id: impl Into<String>, model: Model) -> Self {
        ModelFile {
            format: MODEL_FORMAT.to_string(),
            version: MODEL_VERSION,
            model_id: model_id.into(),
            task: task.into(),
            dataset_id: dataset_id.into(),
            model,
        }
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
        let mut out = BufWriter::new(file);
        serde_json::to_writer(&mut out, self).map_err(|e| Error::format(path, e.to_string()))?;
        out.write_all(b"\n")
            .and_then(|_| out.flush())
            .map_err(|e| Error::io(path, e))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let file: ModelFile =
            serde_json::from_str(&text).map_err(|e| Error::format(path, e.to_string()))?;
        if file.format != MODEL_FORMAT || file.version != MODEL_VERSION {
            return Err(Error::format(
                path,
                format!("unsupported model format {} v{}", file.format, file.version),
            ));
        }
        file.model.check().map_err(|m| Error::format(path, m))?;
        Ok(file)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::learn::{multilabel_fit, Hyper, Preprocess};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn round_trip_reproduces_predictions() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let (x, y): (Vec<Vec<f64>>, Vec<Vec<bool>>) = (0..150)
            .map(|_| {
                let row: Vec<f64> = (0..5).map(|_| rng.random::<f64>() * 1e-3 + rng.random::<f64>()).collect();
                let l = vec![row[0] + row[1] > 1.0, row[4] > 0.7];
                (row, l)
            })
            .unzip();
        let names = vec!["a".to_string(), "b".to_string()];
        let pre = Preprocess::fit(&x, true, Some(3)).unwrap();
        let m = multilabel_fit(&x, &y, &names, Mode::ExtraTrees, Hyper::with_trees(15), pre).unwrap();
        let file = ModelFile::new("m1", "keywords", "d1", Model::Extra(m));
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("model.json");
        file.save(&path).unwrap();
        let back = ModelFile::load(&path).unwrap();
        assert_eq!(back, file);
        let probe: Vec<Vec<f64>> = (0..300).map(|_| (0..5).map(|_| rng.random::<f64>()).collect()).collect();
        assert_eq!(back.model.predict(&probe).unwrap(), file.model.predict(&probe).unwrap());
        let path2 = dir.path().join("again.json");
        back.save(&path2).unwrap();
        assert_eq!(fs::read(&path).unwrap(), fs::read(&path2).unwrap());
    }

    #[test]
    fn rejects_foreign_files() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.json");
        fs::write(&path, r#"{"format":"other","version":1}"#).unwrap();
        assert!(matches!(ModelFile::load(&path), Err(Error::Format { .. })));
        let baseline = Model::Baseline {
            baseline: BaselineModel { label_names: vec!["x".into()], frequencies: vec![] },
            seed: 0,
        };
        ModelFile::new("m", "t", "d", baseline).save(&path).unwrap();
        assert!(matches!(ModelFile::load(&path), Err(Error::Format { .. })));
    }
}
