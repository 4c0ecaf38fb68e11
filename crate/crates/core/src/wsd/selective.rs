//! Selective.WSD: keep sense-level features only for listed words.

use std::collections::HashSet;
use std::io::{self, BufRead, Write};

use super::{MixedFeature, SenseAnnotator};
use crate::textproc::TokenizedDocument;

/// An ordered list of word-level feature names (best first).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TopK {
    words: Vec<String>,
    set: HashSet<String>,
}

impl TopK {
    pub fn new<I, S>(words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out = TopK::default();
        for w in words {
            let w = w.into();
            if out.set.insert(w.clone()) {
                out.words.push(w);
            }
        }
        out
    }

    pub fn contains(&self, word: &str) -> bool {
        self.set.contains(word)
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// The first `k` words.
    pub fn truncated(&self, k: usize) -> TopK {
        TopK::new(self.words.iter().take(k).cloned())
    }
}

/// Demotes every sense whose lemma is not in `topk`.
pub fn demote(features: Vec<MixedFeature>, topk: &TopK) -> Vec<MixedFeature> {
    features
        .into_iter()
        .map(|f| match &f {
            MixedFeature::Sense(s) if !topk.contains(&s.lemma) => f.to_word_level(),
            _ => f,
        })
        .collect()
}

/// Annotates per sentence, then demotes unlisted senses.
pub fn selective_wsd(doc: &TokenizedDocument, topk: &TopK, annotator: &SenseAnnotator) -> Vec<MixedFeature> {
    demote(annotator.annotate_document(doc), topk)
}

/// The annotation with every sense demoted to its lemma.
pub fn word_level_stream(doc: &TokenizedDocument, annotator: &SenseAnnotator) -> Vec<MixedFeature> {
    annotator
        .annotate_document(doc)
        .iter()
        .map(MixedFeature::to_word_level)
        .collect()
}

/// Reads one name per line; blank lines are ignored.
pub fn read_topk(reader: impl BufRead) -> io::Result<TopK> {
    let mut words = Vec::new();
    for line in reader.lines() {
        let line = line?;
        let name = line.trim();
        if !name.is_empty() {
            words.push(name.to_string());
        }
    }
    Ok(TopK::new(words))
}

pub fn write_topk(topk: &TopK, mut writer: impl Write) -> io::Result<()> {
    for w in topk.words() {
        writeln!(writer, "{w}")?;
    }
    Ok(())
}
