//! Labeled personality corpora and their statistics.

mod cache;
mod csv_load;

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::lexicon::Lexicon;
use crate::textproc::{non_standard_counts, tokenize};

pub use cache::{read_cache, write_cache};
pub use csv_load::{load_essays, load_generic_csv, ColumnMap, LabelTruth};

/// A Big Five trait.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Trait {
    Extraversion,
    Neuroticism,
    Agreeableness,
    Conscientiousness,
    Openness,
}

impl Trait {
    pub const ALL: [Trait; 5] = [
        Trait::Extraversion,
        Trait::Neuroticism,
        Trait::Agreeableness,
        Trait::Conscientiousness,
        Trait::Openness,
    ];

    /// Column code, e.g. `cEXT`.
    pub fn code(self) -> &'static str {
        match self {
            Trait::Extraversion => "cEXT",
            Trait::Neuroticism => "cNEU",
            Trait::Agreeableness => "cAGR",
            Trait::Conscientiousness => "cCON",
            Trait::Openness => "cOPN",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Trait {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown trait {0:?} (expected one of cEXT, cNEU, cAGR, cCON, cOPN)")]
pub struct UnknownTrait(pub String);

impl FromStr for Trait {
    type Err = UnknownTrait;

    /// Accepts `cEXT`, `EXT` or `ext`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let short = s.strip_prefix('c').filter(|r| r.len() == 3).unwrap_or(s);
        Trait::ALL
            .into_iter()
            .find(|t| t.code()[1..].eq_ignore_ascii_case(short))
            .ok_or_else(|| UnknownTrait(s.to_string()))
    }
}

/// One boolean per trait, in [`Trait::ALL`] order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct TraitLabels(pub [bool; 5]);

impl TraitLabels {
    pub fn get(&self, t: Trait) -> bool {
        self.0[t.index()]
    }

    pub fn set(&mut self, t: Trait, value: bool) {
        self.0[t.index()] = value;
    }

    /// Five `y`/`n` characters.
    pub fn to_yn(&self) -> String {
        self.0.iter().map(|&b| if b { 'y' } else { 'n' }).collect()
    }

    pub fn from_yn(s: &str) -> Option<TraitLabels> {
        let bytes = s.as_bytes();
        if bytes.len() != 5 {
            return None;
        }
        let mut out = [false; 5];
        for (slot, b) in out.iter_mut().zip(bytes) {
            *slot = match b {
                b'y' => true,
                b'n' => false,
                _ => return None,
            };
        }
        Some(TraitLabels(out))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledDocument {
    pub author_id: String,
    /// All of the author's texts, joined with `\n`.
    pub text: String,
    pub labels: TraitLabels,
    /// Dataset tag, e.g. `essays`.
    pub source: String,
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("failed to read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("row {row}: {message}")]
    Row { row: usize, message: String },
    #[error("row {row}, column {column}: unknown label {value:?}")]
    BadLabel { row: usize, column: String, value: String },
    #[error("missing column {0:?}")]
    MissingColumn(String),
    #[error("author {0:?} has conflicting labels across rows")]
    ConflictingLabels(String),
    #[error("corpus cache line {line}: {message}")]
    Cache { line: usize, message: String },
    #[error("corpus is empty")]
    Empty,
}

/// Per-user averages in the style of a dataset overview table.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CorpusStats {
    pub n_users: usize,
    pub sentences_per_user: f64,
    pub words_per_user: f64,
    /// Non-standard word tokens over all word tokens.
    pub non_standard_ratio: f64,
}

pub fn stats(corpus: &[LabeledDocument], lexicon: &Lexicon) -> Result<CorpusStats, CorpusError> {
    if corpus.is_empty() {
        return Err(CorpusError::Empty);
    }
    let (sentences, unknown, words) = corpus
        .par_iter()
        .map(|d| {
            let doc = tokenize(&d.text);
            let (unknown, words) = non_standard_counts(&doc, lexicon);
            (doc.sentence_count as u64, unknown as u64, words as u64)
        })
        .reduce(|| (0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2));
    let n = corpus.len() as f64;
    Ok(CorpusStats {
        n_users: corpus.len(),
        sentences_per_user: sentences as f64 / n,
        words_per_user: words as f64 / n,
        non_standard_ratio: if words == 0 { 0.0 } else { unknown as f64 / words as f64 },
    })
}

/// Label column of one trait, as booleans in corpus order.
pub fn labels_for(corpus: &[LabeledDocument], t: Trait) -> Vec<bool> {
    corpus.iter().map(|d| d.labels.get(t)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::{LexiconBuilder, PartOfSpeech};

    #[test]
    fn trait_codes() {
        assert_eq!("cOPN".parse::<Trait>().unwrap(), Trait::Openness);
        assert_eq!("ext".parse::<Trait>().unwrap(), Trait::Extraversion);
        assert_eq!("Neu".parse::<Trait>().unwrap(), Trait::Neuroticism);
        assert!("cXYZ".parse::<Trait>().is_err());
        assert!("c".parse::<Trait>().is_err());
        for t in Trait::ALL {
            assert_eq!(t.code().parse::<Trait>().unwrap(), t);
        }
    }

    #[test]
    fn yn_labels() {
        let l = TraitLabels([true, false, false, true, true]);
        assert_eq!(l.to_yn(), "ynnyy");
        assert_eq!(TraitLabels::from_yn("ynnyy"), Some(l));
        assert_eq!(TraitLabels::from_yn("ynny"), None);
        assert_eq!(TraitLabels::from_yn("ynnyx"), None);
    }

    #[test]
    fn single_user_stats() {
        let mut b = LexiconBuilder::new();
        for (k, w) in ["hello", "world"].iter().enumerate() {
            let id = b.synset(PartOfSpeech::Noun, k as u32 + 1, 10, &[w], "g");
            b.sense(w, PartOfSpeech::Noun, &[id]);
        }
        let lex = b.build().unwrap();
        let doc = LabeledDocument {
            author_id: "u".into(),
            text: "Hello world.".into(),
            labels: TraitLabels::default(),
            source: "test".into(),
        };
        let s = stats(&[doc], &lex).unwrap();
        assert_eq!(s.n_users, 1);
        assert_eq!(s.sentences_per_user, 1.0);
        assert_eq!(s.words_per_user, 2.0);
        assert_eq!(s.non_standard_ratio, 0.0);
        assert!(matches!(stats(&[], &lex), Err(CorpusError::Empty)));
    }
}
