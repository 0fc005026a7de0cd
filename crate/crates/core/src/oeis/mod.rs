//! OEIS ingestion: identifiers, sequences, entry records, the text formats
//! the OEIS distributes (stripped file, names file, b-files, JSON entries),
//! keyword labels, corpus selection and a rate-limited, cached fetcher.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::LineError;

mod corpus;
mod fetch;
mod labels;
mod parse;

pub use corpus::{
    load_cache_dir, read_manifest, sample_ids, select_corpus, write_manifest, CachedCorpus,
    ManifestReader,
};
pub use fetch::{Fetcher, HttpTransport, RateLimiter, Transport, CACHE_DIR_ENV};
pub use labels::{extract_labels, Label, LabelSet};
pub use parse::{
    parse_bfile, parse_entry_json, parse_names_line, parse_stripped, parse_stripped_line,
    parse_terms_text, read_maybe_gzip,
};

/// Where an identifier comes from: the OEIS proper (`A`) or a locally generated
/// random sequence (`R`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdSpace {
    Oeis,
    Synthetic,
}

/// Canonical sequence identifier, `A` (or `R` for synthetic sequences)
/// followed by exactly six decimal digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SequenceId {
    space: IdSpace,
    number: u32,
}

impl SequenceId {
    pub const MAX_NUMBER: u32 = 999_999;

    pub fn oeis(number: u32) -> Option<Self> {
        (number <= Self::MAX_NUMBER).then_some(SequenceId {
            space: IdSpace::Oeis,
            number,
        })
    }

    pub fn synthetic(number: u32) -> Option<Self> {
        (number <= Self::MAX_NUMBER).then_some(SequenceId {
            space: IdSpace::Synthetic,
            number,
        })
    }

    /// Parses an OEIS identifier; synthetic `R` identifiers are rejected.
    pub fn parse_oeis(text: &str) -> Result<Self, LineError> {
        match text.parse::<SequenceId>()? {
            id if id.space == IdSpace::Oeis => Ok(id),
            _ => Err(LineError::BadId(text.to_string())),
        }
    }

    pub fn number(&self) -> u32 {
        self.number
    }

    pub fn space(&self) -> IdSpace {
        self.space
    }

    /// The b-file name the OEIS uses for this entry, e.g. `b000045.txt`.
    pub fn bfile_name(&self) -> String {
        format!("b{:06}.txt", self.number)
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.space {
            IdSpace::Oeis => 'A',
            IdSpace::Synthetic => 'R',
        };
        write!(f, "{prefix}{:06}", self.number)
    }
}

impl FromStr for SequenceId {
    type Err = LineError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LineError::BadId(s.to_string());
        let mut chars = s.chars();
        let space = match chars.next() {
            Some('A') => IdSpace::Oeis,
            Some('R') => IdSpace::Synthetic,
            _ => return Err(bad()),
        };
        let digits = chars.as_str();
        if digits.len() != 6 || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        Ok(SequenceId {
            space,
            number: digits.parse().map_err(|_| bad())?,
        })
    }
}

impl Serialize for SequenceId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SequenceId {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Where a term list came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermSource {
    Stripped,
    Bfile,
    Synthetic,
}

impl TermSource {
    pub fn as_str(&self) -> &'static str {
        match self {
            TermSource::Stripped => "stripped",
            TermSource::Bfile => "bfile",
            TermSource::Synthetic => "synthetic",
        }
    }
}

impl FromStr for TermSource {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "stripped" => Ok(TermSource::Stripped),
            "bfile" => Ok(TermSource::Bfile),
            "synthetic" => Ok(TermSource::Synthetic),
            other => Err(format!("unknown term source {other:?}")),
        }
    }
}

/// An integer sequence with exact terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequence {
    pub id: SequenceId,
    pub terms: Vec<BigInt>,
    pub source: TermSource,
}

impl Sequence {
    pub fn new(id: SequenceId, terms: Vec<BigInt>, source: TermSource) -> Self {
        Sequence { id, terms, source }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// The parts of an OEIS entry this crate uses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OeisEntry {
    pub id: SequenceId,
    pub name: String,
    /// Lowercase keyword tokens, e.g. `core`, `nice`, `nonn`.
    pub keywords: BTreeSet<String>,
    pub comments: Vec<String>,
    #[serde(skip)]
    pub terms: Vec<BigInt>,
}

impl OeisEntry {
    pub fn has_keyword(&self, keyword: &str) -> bool {
        self.keywords.contains(keyword)
    }
}

/// Splits an OEIS keyword field (`"core,nonn,easy"`) into lowercase tokens.
pub fn keyword_tokens(field: &str) -> BTreeSet<String> {
    field
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(str::to_ascii_lowercase)
        .collect()
}
