use std::fs::File;
use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use flate2::read::GzDecoder;
use num_bigint::BigInt;
use serde::Deserialize;

use super::{keyword_tokens, OeisEntry, SequenceId};
use crate::error::{Error, LineError, Result};

fn is_comment(line: &str) -> bool {
    line.is_empty() || line.starts_with('#')
}

/// Optionally signed decimal integer, nothing else.
fn parse_integer(token: &str) -> Option<BigInt> {
    let digits = token.strip_prefix(['-', '+']).unwrap_or(token);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    token.parse().ok()
}

/// Parses one line of the OEIS `stripped` file, e.g. `A000045 ,0,1,1,2,3,`.
///
/// Returns `Ok(None)` for blank and `#` comment lines.
pub fn parse_stripped_line(line: &str) -> std::result::Result<Option<(SequenceId, Vec<BigInt>)>, LineError> {
    let line = line.trim();
    if is_comment(line) {
        return Ok(None);
    }
    let (id_text, rest) = line
        .split_once(|c: char| c.is_whitespace())
        .unwrap_or((line, ""));
    let id = SequenceId::parse_oeis(id_text)?;

    let rest = rest.trim();
    let rest = rest.strip_prefix(',').unwrap_or(rest);
    let rest = rest.strip_suffix(',').unwrap_or(rest);
    if rest.is_empty() {
        return Ok(Some((id, Vec::new())));
    }
    let terms = rest
        .split(',')
        .enumerate()
        .map(|(i, token)| {
            parse_integer(token.trim()).ok_or_else(|| LineError::BadTerm {
                position: i + 1,
                token: token.to_string(),
            })
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(Some((id, terms)))
}

/// Parses a whole stripped file, attaching line numbers to errors.
pub fn parse_stripped<R: BufRead>(reader: R) -> Result<Vec<(SequenceId, Vec<BigInt>)>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::io("<stripped>", e))?;
        if let Some(record) =
            parse_stripped_line(&line).map_err(|source| Error::Parse { line: i + 1, source })?
        {
            out.push(record);
        }
    }
    Ok(out)
}

/// Parses one line of the OEIS `names` file: `A000045 Fibonacci numbers: ...`.
pub fn parse_names_line(line: &str) -> std::result::Result<Option<(SequenceId, String)>, LineError> {
    let line = line.trim();
    if is_comment(line) {
        return Ok(None);
    }
    let (id_text, name) = line
        .split_once(|c: char| c.is_whitespace())
        .unwrap_or((line, ""));
    let id = SequenceId::parse_oeis(id_text)?;
    Ok(Some((id, name.trim().to_string())))
}

/// Parses a b-file body (`index term` per line) into terms in index order.
///
/// Indices must be consecutive; `#` lines are ignored.
pub fn parse_bfile(text: &str) -> Result<Vec<BigInt>> {
    let mut terms = Vec::new();
    let mut previous: Option<i64> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if is_comment(line) {
            continue;
        }
        let fail = |source| Error::Parse { line: i + 1, source };
        let mut fields = line.split_whitespace();
        let (Some(index), Some(term), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(fail(LineError::BadLayout(line.to_string())));
        };
        let index: i64 = index
            .parse()
            .map_err(|_| fail(LineError::BadLayout(line.to_string())))?;
        if let Some(prev) = previous {
            if index == prev {
                return Err(fail(LineError::DuplicateIndex(index)));
            }
            if index != prev + 1 {
                return Err(fail(LineError::IndexGap {
                    previous: prev,
                    found: index,
                }));
            }
        }
        previous = Some(index);
        let value = parse_integer(term).ok_or_else(|| {
            fail(LineError::BadTerm {
                position: terms.len() + 1,
                token: term.to_string(),
            })
        })?;
        terms.push(value);
    }
    Ok(terms)
}

/// Parses free-form terms separated by commas and/or whitespace.
pub fn parse_terms_text(text: &str) -> std::result::Result<Vec<BigInt>, LineError> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .enumerate()
        .map(|(i, token)| {
            parse_integer(token).ok_or_else(|| LineError::BadTerm {
                position: i + 1,
                token: token.to_string(),
            })
        })
        .collect()
}

#[derive(Deserialize)]
struct RawEntry {
    number: u32,
    #[serde(default)]
    data: String,
    #[serde(default)]
    name: String,
    #[serde(default)]
    comment: Vec<String>,
    #[serde(default)]
    keyword: String,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawResponse {
    // current layout: a bare array of entries
    List(Vec<RawEntry>),
    // older layout: {"greeting": ..., "count": n, "results": [...] | null}
    Wrapped { results: Option<Vec<RawEntry>> },
    // "no results" is sometimes a bare null
    Null(()),
}

/// Parses a JSON record in the OEIS machine-readable entry format
/// (`https://oeis.org/search?q=id:A000045&fmt=json`).
pub fn parse_entry_json(id: SequenceId, body: &str) -> Result<OeisEntry> {
    let malformed = |message: String| Error::MalformedRecord { id, message };
    let response: RawResponse =
        serde_json::from_str(body).map_err(|e| malformed(e.to_string()))?;
    let entries = match response {
        RawResponse::List(v) => v,
        RawResponse::Wrapped { results } => results.unwrap_or_default(),
        RawResponse::Null(()) => Vec::new(),
    };
    let raw = entries
        .into_iter()
        .find(|e| e.number == id.number())
        .ok_or(Error::NotFound(id))?;

    let name = raw.name.trim().to_string();
    if name.is_empty() {
        return Err(malformed("empty name".into()));
    }
    let data = raw.data.trim();
    let terms = if data.is_empty() {
        Vec::new()
    } else {
        parse_terms_text(data).map_err(|e| malformed(format!("data field: {e}")))?
    };
    Ok(OeisEntry {
        id,
        name,
        keywords: keyword_tokens(&raw.keyword),
        comments: raw.comment,
        terms,
    })
}

/// Reads a text file, transparently decompressing gzip content.
pub fn read_maybe_gzip(path: &Path) -> Result<String> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let mut reader = BufReader::new(file);
    let gz = reader
        .fill_buf()
        .map(|head| head.starts_with(&[0x1f, 0x8b]))
        .map_err(|e| Error::io(path, e))?;
    let mut text = String::new();
    if gz {
        GzDecoder::new(reader).read_to_string(&mut text)
    } else {
        reader.read_to_string(&mut text)
    }
    .map_err(|e| Error::io(path, e))?;
    Ok(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn stripped_line() {
        let (id, terms) = parse_stripped_line("A000045 ,0,1,1,2,3,5,8,13,")
            .unwrap()
            .unwrap();
        assert_eq!(id.to_string(), "A000045");
        assert_eq!(terms, ints(&[0, 1, 1, 2, 3, 5, 8, 13]));

        let (_, terms) = parse_stripped_line("A008683 ,1,-1,-1,0,-1,1,").unwrap().unwrap();
        assert_eq!(terms, ints(&[1, -1, -1, 0, -1, 1]));
    }

    #[test]
    fn stripped_comment_and_blank() {
        assert_eq!(parse_stripped_line("# OEIS archive header").unwrap(), None);
        assert_eq!(parse_stripped_line("   ").unwrap(), None);
    }

    #[test]
    fn stripped_errors_carry_position() {
        assert_eq!(
            parse_stripped_line("A000068 ,2,X,5,").unwrap_err(),
            LineError::BadTerm {
                position: 2,
                token: "X".into()
            }
        );
        assert!(matches!(
            parse_stripped_line("X000068 ,2,5,").unwrap_err(),
            LineError::BadId(_)
        ));
        assert!(parse_stripped_line("A000001 ,1,,2,").is_err());
        assert!(parse_stripped_line("A000001 ,1_000,").is_err());
    }

    #[test]
    fn stripped_file_reports_line_numbers() {
        let text = "# header\nA000001 ,1,2,\nA000002 ,1,?,\n";
        match parse_stripped(text.as_bytes()) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bfile_basic() {
        assert_eq!(parse_bfile("0 1\n1 2\n2 4\n").unwrap(), ints(&[1, 2, 4]));
        assert_eq!(parse_bfile("# author note\n1 5\n2 7\n").unwrap(), ints(&[5, 7]));
        assert_eq!(parse_bfile("1 5\n\n2 -7\n").unwrap(), ints(&[5, -7]));
    }

    #[test]
    fn bfile_index_errors() {
        assert!(matches!(
            parse_bfile("0 1\n2 3\n"),
            Err(Error::Parse {
                line: 2,
                source: LineError::IndexGap { .. }
            })
        ));
        assert!(matches!(
            parse_bfile("0 1\n0 3\n"),
            Err(Error::Parse {
                source: LineError::DuplicateIndex(0),
                ..
            })
        ));
        assert!(matches!(
            parse_bfile("0 1\n1 1.5\n"),
            Err(Error::Parse {
                source: LineError::BadTerm { .. },
                ..
            })
        ));
        assert!(parse_bfile("0\n").is_err());
    }

    #[test]
    fn bfile_thousand_digit_term() {
        // oracle: schoolbook accumulation of the digit string, independent of BigInt's parser
        let digits: String = (0..1000).map(|i| char::from(b'1' + (i * 7 % 9) as u8)).collect();
        let mut oracle = BigInt::from(0);
        for b in digits.bytes() {
            oracle = oracle * 10u32 + u32::from(b - b'0');
        }
        let terms = parse_bfile(&format!("1 {digits}\n2 -{digits}\n")).unwrap();
        assert_eq!(terms[0], oracle);
        assert_eq!(terms[1], -oracle);
    }

    #[test]
    fn names_line() {
        let (id, name) = parse_names_line("A000045 Fibonacci numbers.").unwrap().unwrap();
        assert_eq!(id.number(), 45);
        assert_eq!(name, "Fibonacci numbers.");
    }

    #[test]
    fn entry_json_layouts() {
        let id: SequenceId = "A000045".parse().unwrap();
        let current = r#"[{"number":45,"data":"0,1,1,2","name":"Fibonacci numbers.",
            "comment":["c1"],"keyword":"core,nonn,nice,easy"}]"#;
        let e = parse_entry_json(id, current).unwrap();
        assert_eq!(e.terms, ints(&[0, 1, 1, 2]));
        assert!(e.has_keyword("nice"));
        assert_eq!(e.comments, vec!["c1"]);

        let wrapped = r#"{"greeting":"hi","count":1,"results":[{"number":45,"data":"0,1",
            "name":"Fibonacci numbers.","keyword":"core"}]}"#;
        assert_eq!(parse_entry_json(id, wrapped).unwrap().terms, ints(&[0, 1]));

        let none = r#"{"greeting":"hi","count":0,"results":null}"#;
        assert!(matches!(parse_entry_json(id, none), Err(Error::NotFound(_))));
        assert!(matches!(parse_entry_json(id, "[]"), Err(Error::NotFound(_))));
        assert!(matches!(parse_entry_json(id, "null"), Err(Error::NotFound(_))));
        assert!(matches!(
            parse_entry_json(id, "<html>"),
            Err(Error::MalformedRecord { .. })
        ));
        assert!(matches!(
            parse_entry_json(id, r#"[{"number":45,"data":"1,x","name":"n"}]"#),
            Err(Error::MalformedRecord { .. })
        ));
    }

    #[test]
    fn free_form_terms() {
        assert_eq!(
            parse_terms_text("1 1 2, 3\n5,8").unwrap(),
            ints(&[1, 1, 2, 3, 5, 8])
        );
        assert!(parse_terms_text("1 two 3").is_err());
    }
}
