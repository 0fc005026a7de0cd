//! Fetch one entry and its b-file through the on-disk cache.
//!
//! Defaults to the bundled cache, so the ids it already holds need no network:
//! cargo run --example fetch_entry -- A000045 [cache-dir]

use std::path::PathBuf;

use seqprint::oeis::{Fetcher, SequenceId};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let id = SequenceId::parse_oeis(&args.next().unwrap_or_else(|| "A000045".into()))?;
    let cache = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/oeis/cache"));

    let fetcher = Fetcher::http(cache, 1.0)?;
    let entry = fetcher.fetch_entry(id)?;
    println!("{}: {}", entry.id, entry.name);
    println!("keywords: {}", entry.keywords.iter().cloned().collect::<Vec<_>>().join(","));
    match fetcher.fetch_bfile(id)? {
        Some(terms) => println!("b-file: {} terms, last has {} digits", terms.len(), terms.last().map_or(0, |t| t.to_string().len())),
        None => println!("no b-file"),
    }
    Ok(())
}
