//! SentiWordNet 3.0 reader.
//!
//! Data lines are `POS<TAB>ID<TAB>PosScore<TAB>NegScore<TAB>SynsetTerms<TAB>Gloss`;
//! lines starting with `#` are comments.

use std::fs;
use std::path::Path;

use log::warn;

use super::builder::LexiconBuilder;
use super::{Lexicon, LexiconError, PartOfSpeech, SentimentScore, SynsetId};

const SUM_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SentimentLoadStats {
    /// Lines attached to a synset of the lexicon.
    pub entries: usize,
    /// Lines naming a synset the lexicon does not contain.
    pub skipped: usize,
}

pub fn load_sentiwordnet(path: &Path, lexicon: Lexicon) -> Result<(Lexicon, SentimentLoadStats), LexiconError> {
    let bytes = fs::read(path).map_err(|source| LexiconError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let text = String::from_utf8_lossy(&bytes);
    let file = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default();

    let mut stats = SentimentLoadStats::default();
    let mut builder = LexiconBuilder::from_lexicon(lexicon);
    for (k, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (id, score) = parse_line(line).map_err(|message| LexiconError::Malformed {
            file: file.clone(),
            line: k + 1,
            message,
        })?;
        if builder.has_synset(id) {
            builder.sentiment(id, score);
            stats.entries += 1;
        } else {
            stats.skipped += 1;
        }
    }
    if stats.skipped > 0 {
        warn!("{file}: {} line(s) name synsets absent from WordNet and were skipped", stats.skipped);
    }
    Ok((builder.build()?, stats))
}

fn parse_line(line: &str) -> Result<(SynsetId, SentimentScore), String> {
    let mut fields = line.split('\t');
    let mut next = |what: &str| fields.next().ok_or_else(|| format!("missing {what} column"));
    let pos_field = next("POS")?;
    let pos = match pos_field {
        "n" | "v" | "a" | "s" | "r" => PartOfSpeech::from_letter(pos_field.chars().next().unwrap()).unwrap(),
        other => return Err(format!("unknown POS {other:?}")),
    };
    let offset: u32 = next("ID")?
        .trim()
        .parse()
        .map_err(|_| "ID is not a number".to_string())?;
    let score = |s: &str, what: &str| -> Result<f64, String> {
        let v: f64 = s.trim().parse().map_err(|_| format!("{what} is not a number"))?;
        if !(0.0..=1.0).contains(&v) {
            return Err(format!("{what} {v} outside [0, 1]"));
        }
        Ok(v)
    };
    let p = score(next("PosScore")?, "PosScore")?;
    let n = score(next("NegScore")?, "NegScore")?;
    if p + n > 1.0 + SUM_TOLERANCE {
        return Err(format!("PosScore + NegScore = {} exceeds 1", p + n));
    }
    let mut s = SentimentScore::from_polarity(p, n);
    s.obj_score = s.obj_score.max(0.0);
    Ok((SynsetId::new(pos, offset), s))
}
