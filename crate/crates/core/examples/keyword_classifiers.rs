//! Keyword labels from fingerprints: random forest, extra trees and the
//! frequency baseline on the same split.

use std::collections::BTreeMap;
use std::path::Path;

use seqprint::dataset::{Dataset, SplitTag};
use seqprint::evaluate::Report;
use seqprint::fingerprint::fingerprint_all;
use seqprint::learn::{multilabel_fit, BaselineModel, Hyper, Mode, Preprocess};
use seqprint::oeis::{extract_labels, load_cache_dir, select_corpus};

fn main() -> seqprint::Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/oeis/cache");
    let corpus = load_cache_dir(&dir)?;
    let labels: BTreeMap<_, _> = corpus.entries.iter().map(|e| (e.id, extract_labels(e))).collect();
    let rows = fingerprint_all(&select_corpus(corpus.sequences, 990));
    let ds = Dataset::keywords(&rows, &labels, [0.8, 0.0, 0.2], 3)?;
    let (x, y) = ds.part(SplitTag::Train);
    let (tx, ty) = ds.part(SplitTag::Test);

    let mut reports = Vec::new();
    for (name, mode, trees) in [("forest", Mode::RandomForest, 300), ("extra", Mode::ExtraTrees, 300)] {
        let pre = Preprocess::fit(&x, true, Some(14))?;
        let model = multilabel_fit(&x, &y, &ds.label_names, mode, Hyper { seed: 1, ..Hyper::with_trees(trees) }, pre)?;
        reports.push(Report::build(name, "keywords", "test", &ds.label_names, &ty, &model.predict(&tx)?)?);
    }
    let baseline = BaselineModel::fit(&y, &ds.label_names)?;
    reports.push(Report::build("baseline", "keywords", "test", &ds.label_names, &ty, &baseline.predict(tx.len(), 1))?);

    for r in &reports {
        println!("{:<9} weighted f1 {:.4}  subset accuracy {:.4}", r.model_id, r.weighted_f1, r.subset_accuracy);
    }
    println!();
    print!("{}", reports[1].to_table());
    Ok(())
}
