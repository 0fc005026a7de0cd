//! Can a forest tell OEIS sequences from uniform random ones by their
//! fingerprints alone?

use std::path::Path;

use seqprint::dataset::{generate_random_sequences, Dataset, SplitTag};
use seqprint::evaluate::per_label_metrics;
use seqprint::fingerprint::fingerprint_all;
use seqprint::learn::{multilabel_fit, Hyper, Mode, Preprocess};
use seqprint::oeis::{load_cache_dir, select_corpus};

fn main() -> seqprint::Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/oeis/cache");
    let oeis = fingerprint_all(&select_corpus(load_cache_dir(&dir)?.sequences, 990));
    let random = fingerprint_all(&generate_random_sequences(oeis.len(), 2000, 0, 1_000_000, 7)?);
    let ds = Dataset::oeis_vs_random(&oeis, &random, [0.8, 0.0, 0.2], 11)?;

    let (x, y) = ds.part(SplitTag::Train);
    let (tx, ty) = ds.part(SplitTag::Test);
    let pre = Preprocess::fit(&x, true, Some(14))?;
    let model = multilabel_fit(&x, &y, &ds.label_names, Mode::RandomForest, Hyper::with_trees(100), pre)?;
    let m = per_label_metrics(&ty, &model.predict(&tx)?)?;
    println!(
        "{} train / {} test rows: precision {:.4} recall {:.4} f1 {:.4} accuracy {:.4}",
        x.len(),
        tx.len(),
        m[0].precision,
        m[0].recall,
        m[0].f1,
        m[0].accuracy()
    );
    Ok(())
}
