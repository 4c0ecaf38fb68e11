use std::collections::HashMap;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use super::{CorpusError, LabeledDocument, Trait, TraitLabels};

/// How a label cell maps to a boolean.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum LabelTruth {
    /// `y` / `n`, any case.
    YesNo,
    /// `1` / `0`.
    OneZero,
    /// Numbers; at or above the threshold is true.
    Threshold(f64),
}

impl LabelTruth {
    fn parse(&self, cell: &str) -> Option<bool> {
        let cell = cell.trim();
        match self {
            LabelTruth::YesNo => match cell {
                "y" | "Y" => Some(true),
                "n" | "N" => Some(false),
                _ => None,
            },
            LabelTruth::OneZero => match cell {
                "1" => Some(true),
                "0" => Some(false),
                _ => None,
            },
            LabelTruth::Threshold(t) => cell.parse::<f64>().ok().filter(|v| v.is_finite()).map(|v| v >= *t),
        }
    }
}

impl FromStr for LabelTruth {
    type Err = String;

    /// `yn`, `10` or `threshold:<value>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "yn" => Ok(LabelTruth::YesNo),
            "10" => Ok(LabelTruth::OneZero),
            _ => s
                .strip_prefix("threshold:")
                .and_then(|v| v.parse().ok())
                .map(LabelTruth::Threshold)
                .ok_or_else(|| format!("unknown label convention {s:?} (expected yn, 10 or threshold:<value>)")),
        }
    }
}

/// Names the columns of a labeled CSV export.
#[derive(Clone, Debug, PartialEq)]
pub struct ColumnMap {
    pub id: String,
    pub text: String,
    /// Label column per trait, in [`Trait::ALL`] order.
    pub labels: [String; 5],
    pub truth: LabelTruth,
    pub source: String,
}

impl ColumnMap {
    fn with_columns(id: &str, text: &str, source: &str) -> Self {
        ColumnMap {
            id: id.to_string(),
            text: text.to_string(),
            labels: Trait::ALL.map(|t| t.code().to_string()),
            truth: LabelTruth::YesNo,
            source: source.to_string(),
        }
    }

    /// `#AUTHID,TEXT,cEXT,cNEU,cAGR,cCON,cOPN` with `y`/`n` labels.
    pub fn essays() -> Self {
        Self::with_columns("#AUTHID", "TEXT", "essays")
    }

    /// The myPersonality status export: one row per status update.
    pub fn mypersonality() -> Self {
        Self::with_columns("#AUTHID", "STATUS", "facebook")
    }

    /// Parses `key=value` lines. Keys: `id`, `text`, `source`, `truth` and
    /// one per trait (`cEXT` ... `cOPN`). Unset keys keep the essays layout.
    /// Blank lines and lines starting with `#` are ignored.
    pub fn from_config(text: &str) -> Result<Self, String> {
        let mut map = ColumnMap::essays();
        map.source = "custom".into();
        for (k, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key=value", k + 1))?;
            let (key, value) = (key.trim(), value.trim().to_string());
            match key {
                "id" => map.id = value,
                "text" => map.text = value,
                "source" => map.source = value,
                "truth" => map.truth = value.parse().map_err(|e| format!("line {}: {e}", k + 1))?,
                other => {
                    let t: Trait = other.parse().map_err(|_| format!("line {}: unknown key {other:?}", k + 1))?;
                    map.labels[t.index()] = value;
                }
            }
        }
        Ok(map)
    }
}

/// UTF-8 when valid, otherwise Latin-1; a leading byte-order mark is dropped.
fn decode(bytes: Vec<u8>) -> String {
    let text = match String::from_utf8(bytes) {
        Ok(s) => s,
        Err(e) => e.into_bytes().iter().map(|&b| char::from(b)).collect(),
    };
    match text.strip_prefix('\u{feff}') {
        Some(rest) => rest.to_string(),
        None => text,
    }
}

/// Loads the public essays CSV.
pub fn load_essays(path: &Path) -> Result<Vec<LabeledDocument>, CorpusError> {
    load_generic_csv(path, &ColumnMap::essays())
}

/// Loads a CSV through a column map. Rows sharing an id are joined into one
/// document in order of first appearance; their labels must agree.
pub fn load_generic_csv(path: &Path, map: &ColumnMap) -> Result<Vec<LabeledDocument>, CorpusError> {
    let bytes = fs::read(path).map_err(|source| CorpusError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_csv(&decode(bytes), map)
}

pub(crate) fn parse_csv(text: &str, map: &ColumnMap) -> Result<Vec<LabeledDocument>, CorpusError> {
    let mut reader = csv::ReaderBuilder::new().flexible(true).from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| CorpusError::Row { row: 0, message: e.to_string() })?
        .clone();
    let column = |name: &str| {
        headers
            .iter()
            .position(|h| h.trim() == name)
            .ok_or_else(|| CorpusError::MissingColumn(name.to_string()))
    };
    let id_col = column(&map.id)?;
    let text_col = column(&map.text)?;
    let label_cols = [0, 1, 2, 3, 4].map(|k| column(&map.labels[k]));
    let mut cols = [0usize; 5];
    for (slot, c) in cols.iter_mut().zip(label_cols) {
        *slot = c?;
    }

    let mut docs: Vec<LabeledDocument> = Vec::new();
    let mut by_author: HashMap<String, usize> = HashMap::new();
    for (k, record) in reader.records().enumerate() {
        let row = k + 1;
        let record = record.map_err(|e| CorpusError::Row { row, message: e.to_string() })?;
        let cell = |c: usize| {
            record.get(c).ok_or_else(|| CorpusError::Row {
                row,
                message: format!("has {} fields, column {:?} is missing", record.len(), &headers[c]),
            })
        };
        let author = cell(id_col)?.trim().to_string();
        if author.is_empty() {
            return Err(CorpusError::Row { row, message: "empty author id".into() });
        }
        let body = cell(text_col)?;
        let mut labels = TraitLabels::default();
        for t in Trait::ALL {
            let c = cols[t.index()];
            let value = cell(c)?;
            let b = map.truth.parse(value).ok_or_else(|| CorpusError::BadLabel {
                row,
                column: headers[c].to_string(),
                value: value.to_string(),
            })?;
            labels.set(t, b);
        }
        match by_author.get(&author) {
            Some(&at) => {
                let doc = &mut docs[at];
                if doc.labels != labels {
                    return Err(CorpusError::ConflictingLabels(author));
                }
                doc.text.push('\n');
                doc.text.push_str(body);
            }
            None => {
                by_author.insert(author.clone(), docs.len());
                docs.push(LabeledDocument {
                    author_id: author,
                    text: body.to_string(),
                    labels,
                    source: map.source.clone(),
                });
            }
        }
    }
    Ok(docs)
}
