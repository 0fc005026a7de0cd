use std::fs;
use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use seqprint::dataset::{Dataset, SplitTag};
use seqprint::fingerprint::read_feature_table;
use seqprint::learn::{Model, ModelFile};
use seqprint::oeis::{read_manifest, write_manifest, IdSpace, TermSource};
use seqprint::pipeline::{
    evaluate, export_figs, features, ingest, make_dataset, ransac, run_pipeline, train_all, Layout, ModelKind,
    RunConfig, Task,
};
use seqprint::Error;
use tempfile::TempDir;

fn fixture_config(out: &Path) -> RunConfig {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/fixture.toml");
    let mut cfg = RunConfig::load(&path).unwrap();
    cfg.out = Some(out.to_path_buf());
    cfg
}

fn full_run() -> &'static (TempDir, PathBuf) {
    static RUN: OnceLock<(TempDir, PathBuf)> = OnceLock::new();
    RUN.get_or_init(|| {
        let dir = tempfile::tempdir().unwrap();
        let root = dir.path().join("full");
        run_pipeline(&fixture_config(&root)).unwrap();
        (dir, root)
    })
}

fn layout() -> Layout {
    Layout::new(&full_run().1)
}

#[test]
fn writes_every_artifact() {
    let l = layout();
    for p in [l.corpus(), l.entries(), l.features(), l.ransac()] {
        assert!(p.is_file(), "{}", p.display());
    }
    for task in Task::ALL {
        assert!(l.dataset(task).join("features.tsv").is_file());
    }
    for (task, kind) in [
        (Task::OeisVsRandom, ModelKind::Forest),
        (Task::Keywords, ModelKind::Forest),
        (Task::Keywords, ModelKind::Extra),
        (Task::Keywords, ModelKind::Baseline),
    ] {
        assert!(l.model(task, kind).is_file());
    }
    assert!(!l.marker().exists());
    let figs: Vec<String> = fs::read_dir(l.figs())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    for family in ["fig1_kl", "fig1_ks", "fig1_wd", "fig1_tv", "fig2", "fig3", "fig5", "fig6_"] {
        assert!(figs.iter().any(|f| f.starts_with(family)), "{family} missing from {figs:?}");
    }
}

#[test]
fn standalone_stages_match_full_run() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = fixture_config(&dir.path().join("staged"));
    let summary = ingest(&cfg).unwrap();
    assert_eq!(summary.selected, 200);
    assert!(summary.qualifying >= summary.selected && summary.loaded >= summary.qualifying);
    assert_eq!(features(&cfg).unwrap(), 200);
    ransac(&cfg).unwrap();
    make_dataset(&cfg).unwrap();
    train_all(&cfg).unwrap();
    evaluate(&cfg).unwrap();
    export_figs(&cfg).unwrap();
    let staged = Layout::new(cfg.out_dir());
    let full = layout();
    for (a, b) in [
        (staged.features(), full.features()),
        (staged.ransac(), full.ransac()),
        (staged.model(Task::Keywords, ModelKind::Extra), full.model(Task::Keywords, ModelKind::Extra)),
        (staged.reports().join("keywords-forest.json"), full.reports().join("keywords-forest.json")),
    ] {
        assert!(fs::read(&a).unwrap() == fs::read(&b).unwrap(), "{} differs", a.display());
    }
}

#[test]
fn manifest_round_trips_fixture_terms() {
    let path = layout().corpus();
    let sequences = read_manifest(&path).unwrap();
    assert!(sequences.iter().all(|s| s.source == TermSource::Bfile && s.len() >= 990));
    assert!(sequences.iter().any(|s| s.terms.iter().any(|t| t.bits() > 3000)), "no 1000-digit terms");
    let mut again = Vec::new();
    write_manifest(&mut again, &sequences).unwrap();
    assert!(again == fs::read(&path).unwrap());
}

#[test]
fn corpus_distances_are_in_range() {
    let file = fs::File::open(layout().features()).unwrap();
    let rows = read_feature_table(std::io::BufReader::new(file)).unwrap();
    for r in &rows {
        let d = &r.distances;
        assert!(d.kl.is_none_or(|v| v >= 0.0), "{}", r.id);
        assert!(d.ks.is_none_or(|v| (0.0..=1.0).contains(&v)), "{}", r.id);
        assert!(d.wd.is_none_or(|v| v <= 0.15534), "{}", r.id);
        assert!((0.0..=1.0).contains(&d.tv), "{}", r.id);
        assert!(r.features.0.iter().all(|v| v.is_finite()));
    }
}

#[test]
fn keyword_importance_is_spread() {
    for kind in [ModelKind::Forest, ModelKind::Extra] {
        let file = ModelFile::load(&layout().model(Task::Keywords, kind)).unwrap();
        let (Model::Forest(m) | Model::Extra(m)) = &file.model else {
            panic!("unexpected model kind {}", file.model.kind());
        };
        for (name, forest) in m.label_names.iter().zip(&m.forests) {
            let top = forest.importance.iter().copied().fold(0.0, f64::max);
            assert!(top <= 0.5, "{:?} {name}: {top}", kind);
            assert!((forest.importance.iter().sum::<f64>() - 1.0).abs() < 1e-9);
        }
    }
}

#[test]
fn predictions_ignore_row_order() {
    let ds = Dataset::load(&layout().dataset(Task::Keywords)).unwrap();
    let (x, _) = ds.part(SplitTag::Test);
    let file = ModelFile::load(&layout().model(Task::Keywords, ModelKind::Forest)).unwrap();
    let forward = file.model.predict(&x).unwrap();
    let reversed: Vec<Vec<f64>> = x.iter().rev().cloned().collect();
    let mut backward = file.model.predict(&reversed).unwrap();
    backward.reverse();
    assert_eq!(forward, backward);
}

#[test]
fn binary_dataset_is_balanced_by_source() {
    let ds = Dataset::load(&layout().dataset(Task::OeisVsRandom)).unwrap();
    for (id, y) in ds.ids.iter().zip(&ds.y) {
        assert_eq!(y[0], id.space() == IdSpace::Oeis);
    }
    assert_eq!(ds.indices(SplitTag::Test).len(), 80);
}

#[test]
fn missing_corpus_is_a_tagged_data_error() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = fixture_config(&dir.path().join("out"));
    cfg.corpus.cache_dir = dir.path().join("nowhere");
    let err = ingest(&cfg).unwrap_err();
    assert!(matches!(err, Error::Stage { stage: "ingest", .. }), "{err}");
    assert_eq!(err.exit_code(), 2);
    assert!(Layout::new(cfg.out_dir()).marker().exists());
}

#[test]
fn features_need_ingest_first() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = fixture_config(&dir.path().join("out"));
    let err = features(&cfg).unwrap_err();
    assert!(err.to_string().starts_with("[features]"), "{err}");
}
