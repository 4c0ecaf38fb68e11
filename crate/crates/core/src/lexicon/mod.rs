//! In-memory WordNet 3.0 and SentiWordNet 3.0.
//!
//! [`Lexicon::load_wordnet`] parses a raw `dict/` directory (no wrapper
//! library involved) and [`Lexicon::with_sentiwordnet`] attaches polarity
//! scores to the loaded synsets. After loading, the lexicon is immutable and
//! every query is a pure function, so a single `Lexicon` can be shared across
//! threads by reference.

mod builder;
mod closed_class;
mod morphy;
mod pos;
mod sentiwordnet;
mod wordnet;

use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::PathBuf;

use thiserror::Error;

pub use builder::{LexiconBuilder, STANDARD_LEXNAMES};
pub use closed_class::{is_closed_class, CLOSED_CLASS_WORDS};
pub use pos::PartOfSpeech;
pub use sentiwordnet::{load_sentiwordnet, SentimentLoadStats};
pub use wordnet::{load_wordnet, REQUIRED_FILES};

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("missing WordNet file(s) in {}: {}", dir.display(), files.join(", "))]
    MissingFiles { dir: PathBuf, files: Vec<String> },
    #[error("failed to read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{file}:{line}: {message}")]
    Malformed {
        file: String,
        line: usize,
        message: String,
    },
    #[error("unknown synset {0}")]
    UnknownSynset(SynsetId),
    #[error("no lexicographer file is named for number {0}")]
    UnknownLexfile(u8),
}

/// Address of a synset: its category plus its byte offset in `data.<pos>`.
///
/// The category is always normalized, so an adjective satellite and a head
/// adjective share the `a` space exactly as SentiWordNet addresses them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SynsetId {
    pos: PartOfSpeech,
    offset: u32,
}

impl SynsetId {
    pub fn new(pos: PartOfSpeech, offset: u32) -> Self {
        SynsetId {
            pos: pos.normalized(),
            offset,
        }
    }

    pub fn pos(&self) -> PartOfSpeech {
        self.pos
    }

    pub fn offset(&self) -> u32 {
        self.offset
    }
}

impl fmt::Display for SynsetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:08}-{}", self.offset, self.pos.letter())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Synset {
    pub id: SynsetId,
    /// Category as written in the data file; may be a satellite.
    pub ss_type: PartOfSpeech,
    /// Lowercased lemmas in file order, adjective markers such as `(p)` removed.
    pub lemmas: Vec<String>,
    /// Definition plus any example sentences.
    pub gloss: String,
    pub lexfile_num: u8,
}

/// One `index.<pos>` line: a lemma and its senses in WordNet order.
#[derive(Clone, Debug, PartialEq)]
pub struct SenseEntry {
    pub lemma: String,
    pub pos: PartOfSpeech,
    /// Most frequent first; sense number of `synsets[k]` is `k + 1`.
    pub synsets: Vec<SynsetId>,
    /// Number of senses ranked by tagged frequency (the index's `tagsense_cnt`).
    pub tagged_sense_count: u32,
    /// Semantic-concordance counts per sense, when `index.sense` was available.
    pub tag_counts: Option<Vec<u32>>,
}

impl SenseEntry {
    pub fn sense_number(&self, id: SynsetId) -> Option<usize> {
        self.synsets.iter().position(|s| *s == id).map(|k| k + 1)
    }

    /// Corpus evidence for the entry's first sense, used to choose between
    /// categories for an untagged token. Concordance counts when loaded,
    /// otherwise the index's count of tagged senses.
    pub fn frequency(&self) -> u32 {
        match &self.tag_counts {
            Some(counts) => counts.first().copied().unwrap_or(0),
            None => self.tagged_sense_count,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SentimentScore {
    pub pos_score: f64,
    pub neg_score: f64,
    pub obj_score: f64,
}

impl SentimentScore {
    pub const OBJECTIVE: SentimentScore = SentimentScore {
        pos_score: 0.0,
        neg_score: 0.0,
        obj_score: 1.0,
    };

    pub fn from_polarity(pos_score: f64, neg_score: f64) -> Self {
        SentimentScore {
            pos_score,
            neg_score,
            obj_score: 1.0 - pos_score - neg_score,
        }
    }

    pub fn is_polar(&self) -> bool {
        self.pos_score + self.neg_score > 0.0
    }
}

/// How a candidate lemma was obtained from a surface form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Evidence {
    Exception,
    Identity,
    Rule,
}

impl Evidence {
    fn is_direct(self) -> bool {
        !matches!(self, Evidence::Rule)
    }
}

/// A surface form resolved to an indexed lemma under one category.
#[derive(Clone, Debug)]
pub struct LemmaCandidate<'a> {
    pub lemma: String,
    pub pos: PartOfSpeech,
    pub evidence: Evidence,
    pub entry: &'a SenseEntry,
}

#[derive(Clone, Debug, Default)]
pub struct Lexicon {
    senses: [HashMap<String, SenseEntry>; 4],
    exceptions: [HashMap<String, Vec<String>>; 4],
    synsets: Vec<Synset>,
    synset_slots: HashMap<SynsetId, usize>,
    sentiment: Vec<Option<SentimentScore>>,
    lexnames: BTreeMap<u8, String>,
}

impl Lexicon {
    /// Parses a WordNet 3.0 `dict/` directory.
    pub fn load_wordnet(dir: impl Into<PathBuf>) -> Result<Lexicon, LexiconError> {
        load_wordnet(&dir.into())
    }

    /// Attaches SentiWordNet scores, consuming the sentiment-free lexicon.
    pub fn with_sentiwordnet(
        self,
        path: impl Into<PathBuf>,
    ) -> Result<(Lexicon, SentimentLoadStats), LexiconError> {
        load_sentiwordnet(&path.into(), self)
    }

    pub fn lookup(&self, lemma: &str, pos: PartOfSpeech) -> Option<&SenseEntry> {
        self.senses[pos.slot()].get(lemma)
    }

    pub fn synset(&self, id: SynsetId) -> Option<&Synset> {
        self.synset_slots.get(&id).map(|&k| &self.synsets[k])
    }

    pub fn synsets(&self) -> impl Iterator<Item = &Synset> {
        self.synsets.iter()
    }

    pub fn synset_count(&self) -> usize {
        self.synsets.len()
    }

    pub fn sense_entries(&self) -> impl Iterator<Item = &SenseEntry> {
        self.senses.iter().flat_map(|m| m.values())
    }

    pub fn sense_entry_count(&self) -> usize {
        self.senses.iter().map(HashMap::len).sum()
    }

    /// Dense position of a synset, stable for the lifetime of the lexicon.
    pub fn synset_slot(&self, id: SynsetId) -> Option<usize> {
        self.synset_slots.get(&id).copied()
    }

    pub fn lexname(&self, lexfile_num: u8) -> Option<&str> {
        self.lexnames.get(&lexfile_num).map(String::as_str)
    }

    /// Lexicographer-file label of a synset, e.g. `noun.animal`.
    pub fn supersense(&self, id: SynsetId) -> Result<&str, LexiconError> {
        let synset = self.synset(id).ok_or(LexiconError::UnknownSynset(id))?;
        self.lexname(synset.lexfile_num)
            .ok_or(LexiconError::UnknownLexfile(synset.lexfile_num))
    }

    /// Polarity of a synset; synsets without a SentiWordNet line are objective.
    pub fn sentiment(&self, id: SynsetId) -> SentimentScore {
        self.synset_slots
            .get(&id)
            .and_then(|&k| self.sentiment.get(k).copied().flatten())
            .unwrap_or(SentimentScore::OBJECTIVE)
    }

    /// Number of synsets carrying an explicit SentiWordNet score.
    pub fn sentiment_count(&self) -> usize {
        self.sentiment.iter().filter(|s| s.is_some()).count()
    }

    pub fn sentiment_scores(&self) -> impl Iterator<Item = (SynsetId, SentimentScore)> + '_ {
        self.synsets
            .iter()
            .zip(&self.sentiment)
            .filter_map(|(s, score)| score.map(|score| (s.id, score)))
    }

    /// Indexed base forms of `surface` under `pos`: exception-list hits, then
    /// suffix-rule detachments, then the surface itself. Duplicates removed.
    pub fn morphy(&self, surface: &str, pos: PartOfSpeech) -> Vec<String> {
        self.morphy_with_evidence(surface, pos)
            .into_iter()
            .map(|(lemma, _)| lemma)
            .collect()
    }

    pub(crate) fn morphy_with_evidence(
        &self,
        surface: &str,
        pos: PartOfSpeech,
    ) -> Vec<(String, Evidence)> {
        morphy::candidates(surface, pos, &self.exceptions[pos.slot()])
            .into_iter()
            .filter(|(lemma, _)| self.lookup(lemma, pos).is_some())
            .fold(Vec::new(), |mut acc, (lemma, ev)| {
                if !acc.iter().any(|(l, _)| *l == lemma) {
                    acc.push((lemma, ev));
                }
                acc
            })
    }

    /// Resolves an untagged token to at most one lemma per category, best first.
    ///
    /// Within a category an exception-list hit or the unchanged surface beats a
    /// suffix-rule detachment. Across categories candidates are ordered by
    /// direct evidence, then by first-sense corpus frequency (descending), then
    /// by the fixed priority noun > verb > adjective > adverb. Closed-class
    /// function words resolve to nothing.
    pub fn resolve(&self, surface: &str) -> Vec<LemmaCandidate<'_>> {
        if surface.is_empty() || is_closed_class(surface) {
            return Vec::new();
        }
        let mut out: Vec<LemmaCandidate<'_>> = Vec::with_capacity(4);
        for pos in PartOfSpeech::INDEXED {
            let forms = self.morphy_with_evidence(surface, pos);
            let best = forms
                .iter()
                .find(|(_, ev)| ev.is_direct())
                .or_else(|| forms.first());
            if let Some((lemma, evidence)) = best {
                let entry = self
                    .lookup(lemma, pos)
                    .expect("morphy only yields indexed lemmas");
                out.push(LemmaCandidate {
                    lemma: lemma.clone(),
                    pos,
                    evidence: *evidence,
                    entry,
                });
            }
        }
        // Stable sort keeps the category priority as the final tie-breaker.
        out.sort_by_key(|c| (!c.evidence.is_direct(), Reverse(c.entry.frequency())));
        out
    }

    /// True when morphy finds an indexed lemma under some category. Unlike
    /// [`resolve`](Self::resolve) this ignores the closed-class filter, so
    /// `i` (an indexed noun) is known.
    pub fn knows(&self, surface: &str) -> bool {
        !surface.is_empty()
            && PartOfSpeech::INDEXED
                .into_iter()
                .any(|pos| !self.morphy_with_evidence(surface, pos).is_empty())
    }
}
