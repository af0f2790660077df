//! Corpus files: one datum string per line (SMILES for chemical worlds),
//! optional tab-separated numeric columns, full-line `#` comments, UTF-8,
//! LF line endings. `#` cannot start a trailing comment — it is the triple
//! bond symbol inside SMILES.

use std::fs;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read corpus {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("corpus line {line}: column {column} is not a number: {text:?}")]
    BadColumn {
        line: usize,
        column: usize,
        text: String,
    },
    #[error("corpus line {line}: empty datum field")]
    EmptyDatum { line: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusRecord {
    /// SMILES string (or latent tuple string for synthetic codecs).
    pub datum: String,
    /// Numeric columns in file order (property values, condition vectors).
    pub columns: Vec<f64>,
    /// 1-based source line, for error reporting downstream.
    pub line: usize,
}

pub fn read_corpus(path: &Path) -> Result<Vec<CorpusRecord>, CorpusError> {
    let text = fs::read_to_string(path).map_err(|source| CorpusError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_corpus_str(&text)
}

pub fn parse_corpus_str(text: &str) -> Result<Vec<CorpusRecord>, CorpusError> {
    let mut records = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = raw.split('\t');
        let datum = fields.next().unwrap_or("").trim().to_string();
        if datum.is_empty() {
            return Err(CorpusError::EmptyDatum { line });
        }
        let mut columns = Vec::new();
        for (c, field) in fields.enumerate() {
            let field = field.trim();
            let value: f64 = field.parse().map_err(|_| CorpusError::BadColumn {
                line,
                column: c + 1,
                text: field.to_string(),
            })?;
            columns.push(value);
        }
        records.push(CorpusRecord {
            datum,
            columns,
            line,
        });
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_columns_and_skips_comments() {
        let text = "# demo corpus\nCCO\t0.3\t1.0\n\nC#N\t-0.1\n";
        let recs = parse_corpus_str(text).unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[0].datum, "CCO");
        assert_eq!(recs[0].columns, vec![0.3, 1.0]);
        assert_eq!(recs[1].datum, "C#N"); // '#' inside a record is not a comment
        assert_eq!(recs[1].line, 4);
    }

    #[test]
    fn bad_column_reports_line() {
        let e = parse_corpus_str("CCO\tabc\n").unwrap_err();
        match e {
            CorpusError::BadColumn { line, column, .. } => {
                assert_eq!((line, column), (1, 1));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }
}
