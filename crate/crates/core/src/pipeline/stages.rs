use std::collections::BTreeMap;
use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::config::{ModelKind, RunConfig, Task};
use crate::dataset::{generate_random_sequences, Dataset, SplitTag};
use crate::error::{Error, Result};
use crate::evaluate::{
    export_correlations, export_distances, export_label_scores, export_model_summary,
    export_slope_scatter, Report,
};
use crate::fingerprint::{
    fingerprint, fingerprint_all, read_feature_table, write_feature_table, Distances,
    FeatureVector, Fingerprint,
};
use crate::learn::{multilabel_fit, BaselineModel, Mode, Model, ModelFile, Preprocess};
use crate::numerics::{ransac_fit, RansacFit};
use crate::oeis::{
    extract_labels, load_cache_dir, parse_names_line, parse_stripped, parse_terms_text,
    read_manifest, read_maybe_gzip, sample_ids, select_corpus, write_manifest, Fetcher,
    LabelSet, OeisEntry, Sequence, SequenceId, TermSource,
};
use crate::seeds::derive_seed;

/// File names under the output directory.
#[derive(Debug, Clone)]
pub struct Layout {
    pub root: PathBuf,
}

impl Layout {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        Layout { root: root.into() }
    }

    pub fn corpus(&self) -> PathBuf {
        self.root.join("corpus.tsv")
    }

    pub fn entries(&self) -> PathBuf {
        self.root.join("entries.jsonl")
    }

    pub fn features(&self) -> PathBuf {
        self.root.join("features.tsv")
    }

    pub fn ransac(&self) -> PathBuf {
        self.root.join("ransac.json")
    }

    pub fn dataset(&self, task: Task) -> PathBuf {
        self.root.join("datasets").join(task.as_str())
    }

    pub fn models(&self) -> PathBuf {
        self.root.join("models")
    }

    pub fn model(&self, task: Task, kind: ModelKind) -> PathBuf {
        self.models().join(format!("{}.json", model_id(task, kind)))
    }

    pub fn reports(&self) -> PathBuf {
        self.root.join("reports")
    }

    pub fn figs(&self) -> PathBuf {
        self.root.join("figs")
    }

    /// Present while a stage is running or after it failed.
    pub fn marker(&self) -> PathBuf {
        self.root.join(".incomplete")
    }
}

pub fn model_id(task: Task, kind: ModelKind) -> String {
    format!("{}-{}", task.as_str(), kind.as_str())
}

/// Runs one stage on the configured worker pool, tagging errors with the
/// stage name and leaving the incomplete marker behind on failure.
fn stage<T: Send>(cfg: &RunConfig, name: &'static str, body: impl FnOnce(&Layout) -> Result<T> + Send) -> Result<T> {
    let layout = Layout::new(cfg.out_dir());
    let run = || -> Result<T> {
        fs::create_dir_all(&layout.root).map_err(|e| Error::io(&layout.root, e))?;
        fs::write(layout.marker(), format!("{name}\n")).map_err(|e| Error::io(layout.marker(), e))?;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
            .map_err(|e| Error::invalid(format!("worker pool: {e}")))?;
        let value = pool.install(|| body(&layout))?;
        fs::remove_file(layout.marker()).map_err(|e| Error::io(layout.marker(), e))?;
        Ok(value)
    };
    run().map_err(|e| e.in_stage(name))
}

fn create(path: &Path) -> Result<BufWriter<fs::File>> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    fs::File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Error::io(path, e))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::format(path, e.to_string()))?;
    let mut out = create(path)?;
    out.write_all(text.as_bytes())
        .and_then(|_| out.write_all(b"\n"))
        .and_then(|_| out.flush())
        .map_err(|e| Error::io(path, e))
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| Error::format(path, e.to_string()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IngestSummary {
    pub loaded: usize,
    pub qualifying: usize,
    pub selected: usize,
}

/// Builds the corpus manifest and the entry metadata of the selected ids.
pub fn ingest(cfg: &RunConfig) -> Result<IngestSummary> {
    stage(cfg, "ingest", |layout| {
        let cache = cfg.cache_dir();
        if !cfg.corpus.fetch.is_empty() {
            let fetcher = Fetcher::http(&cache, cfg.corpus.rate_limit)?;
            for text in &cfg.corpus.fetch {
                let id = SequenceId::parse_oeis(text).map_err(|e| Error::invalid(e.to_string()))?;
                fetcher.fetch_entry(id)?;
                fetcher.fetch_bfile(id)?;
            }
        }
        let mut corpus = load_cache_dir(&cache)?;
        if let Some(path) = cfg.stripped_path() {
            let records = parse_stripped(read_maybe_gzip(&path)?.as_bytes())
                .map_err(|e| reframe(&path, e))?;
            let mut names = BTreeMap::new();
            if let Some(npath) = cfg.names_path() {
                for (i, line) in read_maybe_gzip(&npath)?.lines().enumerate() {
                    let parsed = parse_names_line(line)
                        .map_err(|e| Error::format(&npath, format!("line {}: {e}", i + 1)))?;
                    if let Some((id, name)) = parsed {
                        names.insert(id, name);
                    }
                }
            }
            corpus.add_stripped(records, &names);
        }
        let loaded = corpus.sequences.len();
        let qualifying = select_corpus(corpus.sequences, cfg.corpus.min_terms);
        let qualifying_count = qualifying.len();
        let ids: Vec<SequenceId> = qualifying.iter().map(|s| s.id).collect();
        let chosen = match cfg.corpus.sample_size {
            Some(size) => sample_ids(&ids, size, cfg.stage_seed(cfg.corpus.sample_seed, "sample")),
            None => ids,
        };
        let keep: std::collections::BTreeSet<SequenceId> = chosen.iter().copied().collect();
        let selected: Vec<Sequence> = qualifying.into_iter().filter(|s| keep.contains(&s.id)).collect();

        let path = layout.corpus();
        write_manifest(create(&path)?, &selected).map_err(|e| Error::io(&path, e))?;
        let path = layout.entries();
        let mut out = create(&path)?;
        for entry in corpus.entries.iter().filter(|e| keep.contains(&e.id)) {
            let line = serde_json::to_string(entry).map_err(|e| Error::format(&path, e.to_string()))?;
            writeln!(out, "{line}").map_err(|e| Error::io(&path, e))?;
        }
        out.flush().map_err(|e| Error::io(&path, e))?;
        Ok(IngestSummary {
            loaded,
            qualifying: qualifying_count,
            selected: selected.len(),
        })
    })
}

fn reframe(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse { line, source } => Error::format(path, format!("line {line}: {source}")),
        other => other,
    }
}

fn read_entries(path: &Path) -> Result<Vec<OeisEntry>> {
    let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    BufReader::new(file)
        .lines()
        .enumerate()
        .filter(|(_, l)| l.as_ref().map_or(true, |l| !l.is_empty()))
        .map(|(i, line)| {
            let line = line.map_err(|e| Error::io(path, e))?;
            serde_json::from_str(&line).map_err(|e| Error::format(path, format!("line {}: {e}", i + 1)))
        })
        .collect()
}

fn read_features(path: &Path) -> Result<Vec<Fingerprint>> {
    let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    read_feature_table(BufReader::new(file)).map_err(|e| reframe(path, e))
}

/// Fingerprints every manifest sequence into the feature table.
pub fn features(cfg: &RunConfig) -> Result<usize> {
    stage(cfg, "features", |layout| {
        let sequences = read_manifest(&layout.corpus())?;
        let rows = fingerprint_all(&sequences);
        let path = layout.features();
        write_feature_table(create(&path)?, &rows).map_err(|e| Error::io(&path, e))?;
        Ok(rows.len())
    })
}

/// The robust fit over the `(r, s)` points of every non-degenerate fit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RansacArtifact {
    pub ids: Vec<SequenceId>,
    pub points: Vec<(f64, f64)>,
    pub fit: RansacFit,
}

/// `(r, s)` of each fingerprint whose Taylor fit is not degenerate.
pub fn slope_points(rows: &[Fingerprint]) -> Vec<(SequenceId, (f64, f64))> {
    rows.iter()
        .filter(|f| f.features.0[..3].iter().any(|&v| v != 0.0))
        .map(|f| (f.id, (f.features.0[2], f.features.0[0])))
        .collect()
}

pub fn ransac(cfg: &RunConfig) -> Result<RansacArtifact> {
    stage(cfg, "ransac", |layout| {
        let rows = read_features(&layout.features())?;
        let (ids, points): (Vec<SequenceId>, Vec<(f64, f64)>) = slope_points(&rows).into_iter().unzip();
        let fit = ransac_fit(&points, cfg.ransac_params())?;
        let artifact = RansacArtifact { ids, points, fit };
        write_json(&layout.ransac(), &artifact)?;
        Ok(artifact)
    })
}

/// Generates the random negatives and writes both task datasets.
pub fn make_dataset(cfg: &RunConfig) -> Result<(usize, usize)> {
    stage(cfg, "make-dataset", |layout| {
        let oeis = read_features(&layout.features())?;
        let entries = read_entries(&layout.entries())?;
        let r = &cfg.random;
        let random = generate_random_sequences(
            r.count,
            r.length,
            r.lo,
            r.hi,
            cfg.stage_seed(r.seed, "random"),
        )?;
        let random_rows = fingerprint_all(&random);
        let split_seed = cfg.stage_seed(cfg.split.seed, "split");

        let binary = Dataset::oeis_vs_random(
            &oeis,
            &random_rows,
            cfg.split.oeis_vs_random,
            derive_seed(split_seed, Task::OeisVsRandom.as_str()),
        )?;
        binary.save(&layout.dataset(Task::OeisVsRandom))?;

        let labels: BTreeMap<SequenceId, LabelSet> =
            entries.iter().map(|e| (e.id, extract_labels(e))).collect();
        let keywords = Dataset::keywords(
            &oeis,
            &labels,
            cfg.split.keywords,
            derive_seed(split_seed, Task::Keywords.as_str()),
        )?;
        keywords.save(&layout.dataset(Task::Keywords))?;
        Ok((binary.len(), keywords.len()))
    })
}

/// Fits one model on the training rows of a task's dataset.
pub fn train(cfg: &RunConfig, task: Task, kind: ModelKind) -> Result<PathBuf> {
    stage(cfg, "train", |layout| {
        let ds = Dataset::load(&layout.dataset(task))?;
        let (x, y) = ds.part(SplitTag::Train);
        if x.is_empty() {
            return Err(Error::invalid(format!("{} has no training rows", task.as_str())));
        }
        let id = model_id(task, kind);
        let seed = derive_seed(cfg.stage_seed(cfg.train.seed, "train"), &id);
        let model = match kind {
            ModelKind::Baseline => Model::Baseline {
                baseline: BaselineModel::fit(&y, &ds.label_names)?,
                seed,
            },
            ModelKind::Forest | ModelKind::Extra => {
                let pre = Preprocess::fit(&x, cfg.preprocess.scale, cfg.preprocess.components())?;
                let mode = if kind == ModelKind::Forest { Mode::RandomForest } else { Mode::ExtraTrees };
                let m = multilabel_fit(&x, &y, &ds.label_names, mode, cfg.train.hyper(task, kind, seed), pre)?;
                if kind == ModelKind::Forest {
                    Model::Forest(m)
                } else {
                    Model::Extra(m)
                }
            }
        };
        let path = layout.model(task, kind);
        fs::create_dir_all(layout.models()).map_err(|e| Error::io(layout.models(), e))?;
        ModelFile::new(id, task.as_str(), task.as_str(), model).save(&path)?;
        Ok(path)
    })
}

/// Trains every model kind configured for every task.
pub fn train_all(cfg: &RunConfig) -> Result<Vec<PathBuf>> {
    let mut paths = Vec::new();
    for task in Task::ALL {
        for &kind in cfg.train.kinds(task) {
            paths.push(train(cfg, task, kind)?);
        }
    }
    Ok(paths)
}

/// Scores every configured model on its task's test rows (validation rows
/// when the test split is empty).
pub fn evaluate(cfg: &RunConfig) -> Result<Vec<Report>> {
    stage(cfg, "evaluate", |layout| {
        let mut reports = Vec::new();
        for task in Task::ALL {
            if cfg.train.kinds(task).is_empty() {
                continue;
            }
            let ds = Dataset::load(&layout.dataset(task))?;
            let (split, (x, y)) = [SplitTag::Test, SplitTag::Validation]
                .into_iter()
                .map(|t| (t, ds.part(t)))
                .find(|(_, (x, _))| !x.is_empty())
                .ok_or_else(|| Error::invalid(format!("{} has no held-out rows", task.as_str())))?;
            for &kind in cfg.train.kinds(task) {
                let file = ModelFile::load(&layout.model(task, kind))?;
                let pred = file.model.predict(&x)?;
                let report = Report::build(&file.model_id, &file.dataset_id, split.as_str(), &ds.label_names, &y, &pred)?;
                report.save(&layout.reports(), &file.model_id)?;
                reports.push(report);
            }
        }
        Ok(reports)
    })
}

/// Writes every plot-data file from the stage outputs on disk.
pub fn export_figs(cfg: &RunConfig) -> Result<Vec<PathBuf>> {
    stage(cfg, "export-figs", |layout| {
        let figs = layout.figs();
        fs::create_dir_all(&figs).map_err(|e| Error::io(&figs, e))?;
        let rows = read_features(&layout.features())?;
        let mut written = export_distances(&figs, &rows)?;
        written.push(export_correlations(&figs, &rows)?);
        let artifact: RansacArtifact = read_json(&layout.ransac())?;
        let points: Vec<(SequenceId, (f64, f64))> =
            artifact.ids.iter().copied().zip(artifact.points.iter().copied()).collect();
        written.push(export_slope_scatter(&figs, &points, &artifact.fit)?);

        let mut report_files: Vec<PathBuf> = match fs::read_dir(layout.reports()) {
            Ok(listing) => listing
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "json"))
                .collect(),
            Err(_) => Vec::new(),
        };
        report_files.sort();
        let reports = report_files.iter().map(|p| Report::load(p)).collect::<Result<Vec<_>>>()?;
        written.push(export_model_summary(&figs, &reports)?);
        for r in &reports {
            written.push(export_label_scores(&figs, r)?);
        }
        Ok(written)
    })
}

/// Every stage in order.
pub fn run_pipeline(cfg: &RunConfig) -> Result<()> {
    ingest(cfg)?;
    features(cfg)?;
    ransac(cfg)?;
    make_dataset(cfg)?;
    train_all(cfg)?;
    evaluate(cfg)?;
    export_figs(cfg)?;
    Ok(())
}

/// Fingerprint of one free-standing sequence, with predicted labels when a
/// model is supplied.
#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub terms: usize,
    pub features: FeatureVector,
    pub distances: Distances,
    pub labels: Option<Vec<String>>,
}

pub fn classify(text: &str, model: Option<&ModelFile>) -> Result<Classification> {
    let terms = parse_terms_text(text).map_err(|source| Error::Parse { line: 1, source })?;
    if terms.is_empty() {
        return Err(Error::invalid("no terms on standard input"));
    }
    let seq = Sequence::new(SequenceId::synthetic(0).expect("zero is in range"), terms, TermSource::Synthetic);
    let fp = fingerprint(&seq);
    let labels = match model {
        Some(file) => {
            let row = file.model.predict(&[fp.features.0.to_vec()])?.remove(0);
            Some(
                file.model
                    .label_names()
                    .iter()
                    .zip(row)
                    .filter(|(_, on)| *on)
                    .map(|(n, _)| n.clone())
                    .collect(),
            )
        }
        None => None,
    };
    Ok(Classification {
        terms: seq.len(),
        features: fp.features,
        distances: fp.distances,
        labels,
    })
}
