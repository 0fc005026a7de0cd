//! Loads the bundled entry cache and shows what the keyword labeller sees.

use std::path::Path;

use seqprint::oeis::{extract_labels, load_cache_dir, select_corpus};

fn main() -> seqprint::Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/oeis/cache");
    let corpus = load_cache_dir(&dir)?;
    let long = select_corpus(corpus.sequences.clone(), 990);
    println!("{} entries, {} with terms, {} with at least 990 terms", corpus.entries.len(), corpus.sequences.len(), long.len());

    for entry in corpus.entries.iter().take(8) {
        let labels: Vec<&str> = extract_labels(entry).labels().map(|l| l.name()).collect();
        println!("{}  {:<40.40}  {}", entry.id, entry.name, labels.join(","));
    }
    Ok(())
}
