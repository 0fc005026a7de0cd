use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use super::{split, SplitTag};
use crate::error::{Error, Result};
use crate::fingerprint::{FeatureVector, Fingerprint, FEATURE_COUNT, FEATURE_NAMES};
use crate::oeis::{Label, LabelSet, SequenceId};
use crate::tsv::{parse_real, real};

pub const FEATURES_FILE: &str = "features.tsv";
pub const LABELS_FILE: &str = "labels.tsv";
pub const SPLIT_FILE: &str = "split.tsv";

/// Feature rows with their label rows and split assignment, all aligned by
/// row index.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub ids: Vec<SequenceId>,
    pub x: Vec<FeatureVector>,
    pub y: Vec<Vec<bool>>,
    pub label_names: Vec<String>,
    pub split: Vec<SplitTag>,
}

impl Dataset {
    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.ids.len();
        for (what, len) in [("feature", self.x.len()), ("label", self.y.len()), ("split", self.split.len())] {
            if len != n {
                return Err(Error::shape(format!("{n} {what} rows"), len));
            }
        }
        if let Some(row) = self.y.iter().find(|r| r.len() != self.label_names.len()) {
            return Err(Error::shape(format!("{} label columns", self.label_names.len()), row.len()));
        }
        if self.x.iter().any(|v| v.0.iter().any(|f| !f.is_finite())) {
            return Err(Error::invalid("dataset contains non-finite features"));
        }
        Ok(())
    }

    /// OEIS rows labelled 1, random rows labelled 0, in that order.
    pub fn oeis_vs_random(
        oeis: &[Fingerprint],
        random: &[Fingerprint],
        fractions: [f64; 3],
        seed: u64,
    ) -> Result<Dataset> {
        let rows: Vec<(&Fingerprint, bool)> = oeis
            .iter()
            .map(|f| (f, true))
            .chain(random.iter().map(|f| (f, false)))
            .collect();
        Ok(Dataset {
            ids: rows.iter().map(|(f, _)| f.id).collect(),
            x: rows.iter().map(|(f, _)| f.features).collect(),
            y: rows.iter().map(|&(_, l)| vec![l]).collect(),
            label_names: vec!["oeis".to_string()],
            split: split(rows.len(), fractions, seed)?,
        })
    }

    /// One row per fingerprint that has a label set; rows without labels
    /// are skipped.
    pub fn keywords(
        fingerprints: &[Fingerprint],
        labels: &BTreeMap<SequenceId, LabelSet>,
        fractions: [f64; 3],
        seed: u64,
    ) -> Result<Dataset> {
        let rows: Vec<(&Fingerprint, &LabelSet)> = fingerprints
            .iter()
            .filter_map(|f| labels.get(&f.id).map(|l| (f, l)))
            .collect();
        Ok(Dataset {
            ids: rows.iter().map(|(f, _)| f.id).collect(),
            x: rows.iter().map(|(f, _)| f.features).collect(),
            y: rows.iter().map(|(_, l)| l.to_row()).collect(),
            label_names: Label::names(),
            split: split(rows.len(), fractions, seed)?,
        })
    }

    pub fn indices(&self, tag: SplitTag) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.split[i] == tag).collect()
    }

    /// Feature matrix and label rows of one split.
    pub fn part(&self, tag: SplitTag) -> (Vec<Vec<f64>>, Vec<Vec<bool>>) {
        self.indices(tag)
            .into_iter()
            .map(|i| (self.x[i].0.to_vec(), self.y[i].clone()))
            .unzip()
    }

    pub fn save(&self, dir: &Path) -> Result<()> {
        self.validate()?;
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        write_with(&dir.join(FEATURES_FILE), |out| {
            writeln!(out, "id\t{}", FEATURE_NAMES.join("\t"))?;
            for (id, v) in self.ids.iter().zip(&self.x) {
                write!(out, "{id}")?;
                for f in v.0 {
                    write!(out, "\t{}", real(f))?;
                }
                writeln!(out)?;
            }
            Ok(())
        })?;
        write_with(&dir.join(LABELS_FILE), |out| {
            writeln!(out, "id\t{}", self.label_names.join("\t"))?;
            for (id, row) in self.ids.iter().zip(&self.y) {
                write!(out, "{id}")?;
                for &b in row {
                    write!(out, "\t{}", b as u8)?;
                }
                writeln!(out)?;
            }
            Ok(())
        })?;
        write_with(&dir.join(SPLIT_FILE), |out| {
            writeln!(out, "id\tsplit")?;
            for (id, tag) in self.ids.iter().zip(&self.split) {
                writeln!(out, "{id}\t{tag}")?;
            }
            Ok(())
        })
    }

    /// Loads the three tables and joins them by id, in feature-table order.
    pub fn load(dir: &Path) -> Result<Dataset> {
        let features = read_rows(&dir.join(FEATURES_FILE))?;
        let labels = read_rows(&dir.join(LABELS_FILE))?;
        let splits = read_rows(&dir.join(SPLIT_FILE))?;

        let fpath = dir.join(FEATURES_FILE);
        if features.header.len() != FEATURE_COUNT + 1 || features.header[1..] != FEATURE_NAMES {
            return Err(Error::format(&fpath, "unexpected header"));
        }
        let label_names: Vec<String> = labels.header[1..].to_vec();
        let label_map = index_by_id(&dir.join(LABELS_FILE), &labels, label_names.len())?;
        let split_map = index_by_id(&dir.join(SPLIT_FILE), &splits, 1)?;

        let mut ds = Dataset {
            ids: Vec::new(),
            x: Vec::new(),
            y: Vec::new(),
            label_names,
            split: Vec::new(),
        };
        for (line, cols) in &features.rows {
            let bad = |m: String| Error::format(&fpath, format!("line {line}: {m}"));
            if cols.len() != FEATURE_COUNT + 1 {
                return Err(bad(format!("{} columns", cols.len())));
            }
            let id: SequenceId = cols[0].parse().map_err(|e| bad(format!("{e}")))?;
            let mut v = [0.0; FEATURE_COUNT];
            for (slot, text) in v.iter_mut().zip(&cols[1..]) {
                *slot = parse_real(text).ok_or_else(|| bad(format!("bad number {text:?}")))?;
            }
            let label_row = label_map
                .get(&id)
                .ok_or_else(|| bad(format!("{id} missing from {LABELS_FILE}")))?;
            let y = label_row
                .iter()
                .map(|t| match t.as_str() {
                    "0" => Ok(false),
                    "1" => Ok(true),
                    other => Err(bad(format!("label value {other:?} for {id}"))),
                })
                .collect::<Result<Vec<bool>>>()?;
            let tag = split_map
                .get(&id)
                .ok_or_else(|| bad(format!("{id} missing from {SPLIT_FILE}")))?[0]
                .parse()?;
            ds.ids.push(id);
            ds.x.push(FeatureVector(v));
            ds.y.push(y);
            ds.split.push(tag);
        }
        ds.validate()?;
        Ok(ds)
    }
}

fn write_with(
    path: &Path,
    body: impl FnOnce(&mut BufWriter<fs::File>) -> std::io::Result<()>,
) -> Result<()> {
    let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = BufWriter::new(file);
    body(&mut out)
        .and_then(|_| out.flush())
        .map_err(|e| Error::io(path, e))
}

struct Rows {
    header: Vec<String>,
    rows: Vec<(usize, Vec<String>)>,
}

fn read_rows(path: &Path) -> Result<Rows> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut lines = text.lines().enumerate();
    let header = match lines.next() {
        Some((_, h)) if h.starts_with("id") => h.split('\t').map(str::to_string).collect(),
        _ => return Err(Error::format(path, "missing header")),
    };
    let rows = lines
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, l)| (i + 1, l.split('\t').map(str::to_string).collect()))
        .collect();
    Ok(Rows { header, rows })
}

fn index_by_id(path: &Path, rows: &Rows, width: usize) -> Result<HashMap<SequenceId, Vec<String>>> {
    let mut map = HashMap::new();
    for (line, cols) in &rows.rows {
        if cols.len() != width + 1 {
            return Err(Error::format(path, format!("line {line}: {} columns", cols.len())));
        }
        let id: SequenceId = cols[0]
            .parse()
            .map_err(|e| Error::format(path, format!("line {line}: {e}")))?;
        if map.insert(id, cols[1..].to_vec()).is_some() {
            return Err(Error::format(path, format!("line {line}: duplicate id {id}")));
        }
    }
    Ok(map)
}
