use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{per_label_metrics, subset_accuracy, weighted_average, LabelMetrics};
use crate::error::{Error, Result};

/// Evaluation of one model on one dataset split.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub model_id: String,
    pub dataset_id: String,
    pub split: String,
    pub rows: usize,
    pub subset_accuracy: f64,
    pub label_names: Vec<String>,
    pub labels: Vec<LabelMetrics>,
    pub weighted_precision: f64,
    pub weighted_recall: f64,
    pub weighted_f1: f64,
}

impl Report {
    pub fn build(
        model_id: &str,
        dataset_id: &str,
        split: &str,
        label_names: &[String],
        y_true: &[Vec<bool>],
        y_pred: &[Vec<bool>],
    ) -> Result<Report> {
        let labels = per_label_metrics(y_true, y_pred)?;
        if labels.len() != label_names.len() {
            return Err(Error::shape(format!("{} labels", label_names.len()), labels.len()));
        }
        let (weighted_precision, weighted_recall, weighted_f1) = weighted_average(&labels)?;
        Ok(Report {
            model_id: model_id.to_string(),
            dataset_id: dataset_id.to_string(),
            split: split.to_string(),
            rows: y_true.len(),
            subset_accuracy: subset_accuracy(y_true, y_pred)?,
            label_names: label_names.to_vec(),
            labels,
            weighted_precision,
            weighted_recall,
            weighted_f1,
        })
    }

    /// Fixed-width table for people.
    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "model    {}", self.model_id);
        let _ = writeln!(s, "dataset  {} ({} split, {} rows)", self.dataset_id, self.split, self.rows);
        let _ = writeln!(s, "subset accuracy  {:.4}", self.subset_accuracy);
        let _ = writeln!(s);
        let _ = writeln!(
            s,
            "{:<12} {:>9} {:>9} {:>9} {:>8} {:>6} {:>6} {:>6} {:>6}",
            "label", "precision", "recall", "f1", "support", "tp", "fp", "fn", "tn"
        );
        for (name, m) in self.label_names.iter().zip(&self.labels) {
            let _ = writeln!(
                s,
                "{:<12} {:>9.4} {:>9.4} {:>9.4} {:>8} {:>6} {:>6} {:>6} {:>6}",
                name, m.precision, m.recall, m.f1, m.support, m.tp, m.fp, m.fn_, m.tn
            );
        }
        let _ = writeln!(
            s,
            "{:<12} {:>9.4} {:>9.4} {:>9.4} {:>8}",
            "weighted",
            self.weighted_precision,
            self.weighted_recall,
            self.weighted_f1,
            self.labels.iter().map(|m| m.support).sum::<usize>()
        );
        s
    }

    /// Writes `<stem>.json` and `<stem>.txt` into `dir`.
    pub fn save(&self, dir: &Path, stem: &str) -> Result<()> {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        let json = dir.join(format!("{stem}.json"));
        let text = serde_json::to_string_pretty(self).map_err(|e| Error::format(&json, e.to_string()))?;
        fs::write(&json, text + "\n").map_err(|e| Error::io(&json, e))?;
        let txt = dir.join(format!("{stem}.txt"));
        fs::write(&txt, self.to_table()).map_err(|e| Error::io(&txt, e))
    }

    pub fn load(path: &Path) -> Result<Report> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        serde_json::from_str(&text).map_err(|e| Error::format(path, e.to_string()))
    }
}
