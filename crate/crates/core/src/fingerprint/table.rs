use std::io::{BufRead, Write};

use super::{Distances, FeatureVector, Fingerprint, FEATURE_COUNT, FEATURE_NAMES};
use crate::error::{Error, LineError, Result};
use crate::tsv::{parse_real, real};

pub const DISTANCE_NAMES: [&str; 4] = ["kl", "ks", "wd", "tv"];

fn header() -> String {
    let mut cols = vec!["id"];
    cols.extend(FEATURE_NAMES);
    cols.extend(DISTANCE_NAMES);
    cols.join("\t")
}

/// One row per sequence: id, 14 features, 4 distances. Undefined
/// distances are written as `NaN`.
pub fn write_feature_table<W: Write>(mut out: W, rows: &[Fingerprint]) -> std::io::Result<()> {
    writeln!(out, "{}", header())?;
    for fp in rows {
        write!(out, "{}", fp.id)?;
        for v in fp.features.0 {
            write!(out, "\t{}", real(v))?;
        }
        let d = &fp.distances;
        for v in [d.kl, d.ks, d.wd, Some(d.tv)] {
            write!(out, "\t{}", real(v.unwrap_or(f64::NAN)))?;
        }
        writeln!(out)?;
    }
    out.flush()
}

pub fn read_feature_table<R: BufRead>(input: R) -> Result<Vec<Fingerprint>> {
    let mut rows = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line.map_err(|e| Error::io("<feature table>", e))?;
        let lineno = i + 1;
        if i == 0 {
            if line != header() {
                return Err(Error::Parse {
                    line: lineno,
                    source: LineError::BadLayout("unexpected feature table header".into()),
                });
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let parse = || -> std::result::Result<Fingerprint, LineError> {
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() != 1 + FEATURE_COUNT + 4 {
                return Err(LineError::BadLayout(format!("{} columns", cols.len())));
            }
            let id = cols[0].parse()?;
            let mut values = [0.0; FEATURE_COUNT + 4];
            for (k, (v, text)) in values.iter_mut().zip(&cols[1..]).enumerate() {
                *v = parse_real(text).ok_or_else(|| LineError::BadTerm {
                    position: k + 2,
                    token: text.to_string(),
                })?;
            }
            let mut features = [0.0; FEATURE_COUNT];
            features.copy_from_slice(&values[..FEATURE_COUNT]);
            let defined = |v: f64| (!v.is_nan()).then_some(v);
            Ok(Fingerprint {
                id,
                features: FeatureVector(features),
                distances: Distances {
                    kl: defined(values[14]),
                    ks: defined(values[15]),
                    wd: defined(values[16]),
                    tv: values[17],
                },
            })
        };
        rows.push(parse().map_err(|source| Error::Parse {
            line: lineno,
            source,
        })?);
    }
    Ok(rows)
}
