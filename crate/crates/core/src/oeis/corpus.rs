use std::collections::BTreeMap;
use std::fs;
use std::io::{BufRead, Write};
use std::path::Path;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{parse_bfile, parse_entry_json, read_maybe_gzip, OeisEntry, Sequence, SequenceId, TermSource};
use crate::error::{Error, LineError, Result};

/// Keeps the sequences with at least `min_terms` terms, in input order.
pub fn select_corpus(sequences: Vec<Sequence>, min_terms: usize) -> Vec<Sequence> {
    sequences
        .into_iter()
        .filter(|s| s.len() >= min_terms)
        .collect()
}

/// Draws `size` ids without replacement; the result is in id order.
/// Asking for at least as many ids as exist returns all of them.
pub fn sample_ids(ids: &[SequenceId], size: usize, seed: u64) -> Vec<SequenceId> {
    let mut pool = ids.to_vec();
    pool.sort();
    pool.dedup();
    if size < pool.len() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        pool.shuffle(&mut rng);
        pool.truncate(size);
        pool.sort();
    }
    pool
}

/// Entries and term lists loaded from an entry cache directory.
#[derive(Debug, Default, Clone)]
pub struct CachedCorpus {
    pub entries: Vec<OeisEntry>,
    pub sequences: Vec<Sequence>,
}

impl CachedCorpus {
    /// Adds stripped-file sequences for ids the cache does not know; names
    /// come from the names file when available.
    pub fn add_stripped(
        &mut self,
        records: Vec<(SequenceId, Vec<BigInt>)>,
        names: &BTreeMap<SequenceId, String>,
    ) {
        let known: std::collections::BTreeSet<SequenceId> =
            self.entries.iter().map(|e| e.id).collect();
        for (id, terms) in records {
            if known.contains(&id) || terms.is_empty() {
                continue;
            }
            let name = names.get(&id).cloned().unwrap_or_else(|| id.to_string());
            self.entries.push(OeisEntry {
                id,
                name,
                keywords: Default::default(),
                comments: Vec::new(),
                terms: Vec::new(),
            });
            self.sequences.push(Sequence::new(id, terms, TermSource::Stripped));
        }
        self.entries.sort_by_key(|e| e.id);
        self.sequences.sort_by_key(|s| s.id);
    }
}

fn bfile_in(dir: &Path, id: SequenceId) -> Option<std::path::PathBuf> {
    let plain = dir.join(id.bfile_name());
    if plain.is_file() {
        return Some(plain);
    }
    let gz = dir.join(format!("{}.gz", id.bfile_name()));
    gz.is_file().then_some(gz)
}

/// Loads every `A??????.json` entry in `dir`. Terms come from the matching
/// b-file (`b??????.txt` or `.txt.gz`) when present, otherwise from the
/// entry's own data field.
pub fn load_cache_dir(dir: &Path) -> Result<CachedCorpus> {
    let listing = fs::read_dir(dir).map_err(|e| Error::io(dir, e))?;
    let mut ids = Vec::new();
    for item in listing {
        let item = item.map_err(|e| Error::io(dir, e))?;
        let file_name = item.file_name();
        let Some(stem) = file_name.to_str().and_then(|n| n.strip_suffix(".json")) else {
            continue;
        };
        if let Ok(id) = SequenceId::parse_oeis(stem) {
            ids.push(id);
        }
    }
    ids.sort();

    let mut corpus = CachedCorpus::default();
    for id in ids {
        let path = dir.join(format!("{id}.json"));
        let body = fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
        let mut entry = parse_entry_json(id, &body)?;
        let (terms, source) = match bfile_in(dir, id) {
            Some(bpath) => {
                let text = read_maybe_gzip(&bpath)?;
                let terms = parse_bfile(&text).map_err(|e| match e {
                    Error::Parse { line, source } => {
                        Error::format(&bpath, format!("line {line}: {source}"))
                    }
                    other => other,
                })?;
                (terms, TermSource::Bfile)
            }
            None => (std::mem::take(&mut entry.terms), TermSource::Stripped),
        };
        if !terms.is_empty() {
            corpus.sequences.push(Sequence::new(id, terms, source));
        }
        corpus.entries.push(entry);
    }
    Ok(corpus)
}

/// Writes the line-delimited corpus manifest: `id<TAB>source<TAB>t1,t2,...`.
pub fn write_manifest<'a, W, I>(mut out: W, sequences: I) -> std::io::Result<()>
where
    W: Write,
    I: IntoIterator<Item = &'a Sequence>,
{
    for seq in sequences {
        write!(out, "{}\t{}\t", seq.id, seq.source.as_str())?;
        for (i, t) in seq.terms.iter().enumerate() {
            if i > 0 {
                out.write_all(b",")?;
            }
            write!(out, "{t}")?;
        }
        out.write_all(b"\n")?;
    }
    out.flush()
}

/// Streams sequences back out of a manifest, one line at a time.
pub struct ManifestReader<R> {
    lines: std::io::Lines<R>,
    line: usize,
}

impl<R: BufRead> ManifestReader<R> {
    pub fn new(reader: R) -> Self {
        ManifestReader {
            lines: reader.lines(),
            line: 0,
        }
    }

    fn parse(&self, text: &str) -> std::result::Result<Sequence, LineError> {
        let mut fields = text.splitn(3, '\t');
        let (Some(id), Some(source), Some(terms)) = (fields.next(), fields.next(), fields.next())
        else {
            return Err(LineError::BadLayout(text.chars().take(40).collect()));
        };
        let id: SequenceId = id.parse()?;
        let source = source
            .parse()
            .map_err(|_| LineError::BadLayout(source.to_string()))?;
        let terms = terms
            .split(',')
            .enumerate()
            .map(|(i, t)| {
                t.parse::<BigInt>().map_err(|_| LineError::BadTerm {
                    position: i + 1,
                    token: t.to_string(),
                })
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Sequence { id, terms, source })
    }
}

impl<R: BufRead> Iterator for ManifestReader<R> {
    type Item = Result<Sequence>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let text = match self.lines.next()? {
                Ok(t) => t,
                Err(e) => return Some(Err(Error::io("<manifest>", e))),
            };
            self.line += 1;
            if text.trim().is_empty() {
                continue;
            }
            let line = self.line;
            return Some(
                self.parse(&text)
                    .map_err(|source| Error::Parse { line, source }),
            );
        }
    }
}

/// Reads a whole manifest file.
pub fn read_manifest(path: &Path) -> Result<Vec<Sequence>> {
    let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    ManifestReader::new(std::io::BufReader::new(file))
        .map(|r| r.map_err(|e| reframe(path, e)))
        .collect()
}

fn reframe(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse { line, source } => Error::format(path, format!("line {line}: {source}")),
        other => other,
    }
}
