//! Sense assignment.
//!
//! Tokens are resolved to WordNet senses either by the most-frequent-sense
//! baseline ([`mfs`]) or by Simplified Lesk ([`SimplifiedLesk`]). A sentence
//! annotation is a list of [`MixedFeature`]s: sense-level where a sense was
//! found, word-level otherwise. [`selective_wsd`] keeps the sense level only
//! for words on a χ²-ranked top-K list.

mod lesk;
mod selective;
mod stopwords;

use std::borrow::Cow;

use crate::lexicon::{Lexicon, PartOfSpeech, SynsetId};
use crate::textproc::{Token, TokenizedDocument};

pub use lesk::{simplified_lesk, SimplifiedLesk};
pub use selective::{demote, read_topk, selective_wsd, word_level_stream, write_topk, TopK};
pub use stopwords::{is_stopword, STOPWORDS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WsdAlgorithm {
    Mfs,
    SimplifiedLesk,
}

/// A token resolved to one synset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SenseAnnotation {
    pub token_index: usize,
    pub lemma: String,
    /// Index category of the lemma; never a satellite.
    pub pos: PartOfSpeech,
    pub synset: SynsetId,
    /// 1-based position of `synset` in the lemma's sense list.
    pub sense_number: usize,
}

impl SenseAnnotation {
    /// `lemma_<senseNumber><posLetter>`, e.g. `love_1v`.
    pub fn feature_name(&self) -> String {
        format_sense_feature(&self.lemma, self.sense_number, self.pos)
    }
}

pub fn format_sense_feature(lemma: &str, sense_number: usize, pos: PartOfSpeech) -> String {
    format!("{lemma}_{sense_number}{}", pos.feature_letter())
}

/// Inverse of [`format_sense_feature`]: `(lemma, sense number, pos letter)`.
pub fn parse_sense_feature(name: &str) -> Option<(&str, usize, char)> {
    let (lemma, suffix) = name.rsplit_once('_')?;
    let letter = suffix.chars().last()?;
    if !matches!(letter, 'n' | 'v' | 'a' | 'r') || lemma.is_empty() {
        return None;
    }
    let digits = &suffix[..suffix.len() - 1];
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
        return None;
    }
    Some((lemma, digits.parse().ok()?, letter))
}

/// One element of an annotated stream.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MixedFeature {
    /// A word-level feature. `lexical` is set when `name` is an indexed
    /// WordNet lemma (a demoted sense) rather than a raw token.
    Word { name: String, lexical: bool },
    Sense(SenseAnnotation),
}

impl MixedFeature {
    pub fn raw(name: impl Into<String>) -> Self {
        MixedFeature::Word {
            name: name.into(),
            lexical: false,
        }
    }

    pub fn name(&self) -> Cow<'_, str> {
        match self {
            MixedFeature::Word { name, .. } => Cow::Borrowed(name),
            MixedFeature::Sense(s) => Cow::Owned(s.feature_name()),
        }
    }

    /// The word-level form: the lemma of a sense, the name of a word.
    pub fn word_level_name(&self) -> &str {
        match self {
            MixedFeature::Word { name, .. } => name,
            MixedFeature::Sense(s) => &s.lemma,
        }
    }

    pub fn to_word_level(&self) -> MixedFeature {
        match self {
            MixedFeature::Word { .. } => self.clone(),
            MixedFeature::Sense(s) => MixedFeature::Word {
                name: s.lemma.clone(),
                lexical: true,
            },
        }
    }

    pub fn sense(&self) -> Option<&SenseAnnotation> {
        match self {
            MixedFeature::Sense(s) => Some(s),
            MixedFeature::Word { .. } => None,
        }
    }

    /// Backed by WordNet: a sense, or a word that is an indexed lemma.
    pub fn is_lexical(&self) -> bool {
        match self {
            MixedFeature::Word { lexical, .. } => *lexical,
            MixedFeature::Sense(_) => true,
        }
    }
}

/// Sense 1 of `lemma` under `pos`, or `None` if the pair is not indexed.
pub fn mfs(lemma: &str, pos: PartOfSpeech, lexicon: &Lexicon) -> Option<SenseAnnotation> {
    let entry = lexicon.lookup(lemma, pos)?;
    Some(SenseAnnotation {
        token_index: 0,
        lemma: entry.lemma.clone(),
        pos: entry.pos,
        synset: *entry.synsets.first()?,
        sense_number: 1,
    })
}

/// MFS for an untagged token: sense 1 of its best lexicon resolution.
pub fn mfs_token(token: &Token, lexicon: &Lexicon) -> Option<SenseAnnotation> {
    if !token.is_word {
        return None;
    }
    let best = lexicon.resolve(&token.normalized).into_iter().next()?;
    mfs(&best.lemma, best.pos, lexicon)
}

/// Runs one WSD algorithm over sentences.
pub struct SenseAnnotator<'a> {
    lexicon: &'a Lexicon,
    lesk: Option<SimplifiedLesk<'a>>,
}

impl<'a> SenseAnnotator<'a> {
    pub fn mfs(lexicon: &'a Lexicon) -> Self {
        SenseAnnotator { lexicon, lesk: None }
    }

    /// Simplified Lesk with a gloss index precomputed over the whole lexicon.
    pub fn lesk(lexicon: &'a Lexicon) -> Self {
        SenseAnnotator {
            lexicon,
            lesk: Some(SimplifiedLesk::indexed(lexicon)),
        }
    }

    pub fn with_lesk(lexicon: &'a Lexicon, lesk: SimplifiedLesk<'a>) -> Self {
        SenseAnnotator { lexicon, lesk: Some(lesk) }
    }

    pub fn for_algorithm(lexicon: &'a Lexicon, algorithm: WsdAlgorithm) -> Self {
        match algorithm {
            WsdAlgorithm::Mfs => Self::mfs(lexicon),
            WsdAlgorithm::SimplifiedLesk => Self::lesk(lexicon),
        }
    }

    pub fn lexicon(&self) -> &'a Lexicon {
        self.lexicon
    }

    pub fn algorithm(&self) -> WsdAlgorithm {
        if self.lesk.is_some() {
            WsdAlgorithm::SimplifiedLesk
        } else {
            WsdAlgorithm::Mfs
        }
    }

    /// One feature per token of `sentence`. `offset` is the document index
    /// of the sentence's first token.
    pub fn annotate_sentence(&self, sentence: &[Token], offset: usize) -> Vec<MixedFeature> {
        sentence
            .iter()
            .enumerate()
            .map(|(k, token)| {
                let sense = match &self.lesk {
                    Some(lesk) => lesk.disambiguate(sentence, k),
                    None => mfs_token(token, self.lexicon),
                };
                match sense {
                    Some(mut s) => {
                        s.token_index = offset + k;
                        MixedFeature::Sense(s)
                    }
                    None => MixedFeature::raw(token.normalized.clone()),
                }
            })
            .collect()
    }

    /// Annotates every sentence and concatenates the results.
    pub fn annotate_document(&self, doc: &TokenizedDocument) -> Vec<MixedFeature> {
        let mut out = Vec::with_capacity(doc.tokens.len());
        let mut offset = 0;
        for sentence in doc.sentences() {
            out.extend(self.annotate_sentence(sentence, offset));
            offset += sentence.len();
        }
        out
    }
}

/// Annotates one sentence. Building a Lesk annotator per call is costly;
/// reuse a [`SenseAnnotator`] for bulk work.
pub fn annotate_senses(sentence: &[Token], algorithm: WsdAlgorithm, lexicon: &Lexicon) -> Vec<MixedFeature> {
    let annotator = match algorithm {
        WsdAlgorithm::Mfs => SenseAnnotator::mfs(lexicon),
        WsdAlgorithm::SimplifiedLesk => SenseAnnotator::with_lesk(lexicon, SimplifiedLesk::new(lexicon)),
    };
    annotator.annotate_sentence(sentence, 0)
}
