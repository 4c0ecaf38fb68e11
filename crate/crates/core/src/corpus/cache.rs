//! Line-oriented corpus cache: `author_id<TAB>yn-labels<TAB>base64(text)`.

use std::io::{self, BufRead, Write};

use base64::engine::general_purpose::STANDARD;
use base64::Engine;

use super::{CorpusError, LabeledDocument, TraitLabels};

pub fn write_cache(corpus: &[LabeledDocument], mut out: impl Write) -> io::Result<()> {
    for d in corpus {
        writeln!(out, "{}\t{}\t{}", d.author_id, d.labels.to_yn(), STANDARD.encode(d.text.as_bytes()))?;
    }
    Ok(())
}

/// Reads a cache; every document gets `source` as its dataset tag.
pub fn read_cache(input: impl BufRead, source: &str) -> Result<Vec<LabeledDocument>, CorpusError> {
    let mut docs = Vec::new();
    for (k, line) in input.lines().enumerate() {
        let bad = |message: String| CorpusError::Cache { line: k + 1, message };
        let line = line.map_err(|e| bad(e.to_string()))?;
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split('\t');
        let (Some(id), Some(labels), Some(text), None) = (fields.next(), fields.next(), fields.next(), fields.next())
        else {
            return Err(bad("expected three tab-separated fields".into()));
        };
        let labels = TraitLabels::from_yn(labels).ok_or_else(|| bad(format!("bad labels {labels:?}")))?;
        let bytes = STANDARD.decode(text).map_err(|e| bad(format!("bad base64: {e}")))?;
        let text = String::from_utf8(bytes).map_err(|_| bad("text is not UTF-8".into()))?;
        docs.push(LabeledDocument {
            author_id: id.to_string(),
            text,
            labels,
            source: source.to_string(),
        });
    }
    Ok(docs)
}
