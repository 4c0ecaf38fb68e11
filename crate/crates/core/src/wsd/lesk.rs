//! Simplified Lesk: pick the candidate sense whose gloss shares the most
//! words with the target's sentence.
//!
//! Gloss text includes the example sentences. Gloss and context words are
//! lowercased, stopwords are dropped and the rest are mapped to their best
//! lexicon lemma. Overlap counts gloss occurrences (multiset) that appear in
//! the context (set). Ties, including the all-zero case, go to the earliest
//! candidate in resolution order, so a tie always reproduces MFS.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use super::stopwords::is_stopword;
use super::SenseAnnotation;
use crate::lexicon::{Lexicon, Synset};
use crate::textproc::{tokenize, Token};

pub struct SimplifiedLesk<'a> {
    lexicon: &'a Lexicon,
    index: Option<GlossIndex>,
}

/// Normalized gloss bags for every synset, with words interned.
struct GlossIndex {
    words: HashMap<String, u32>,
    bags: Vec<Vec<u32>>,
}

/// Overlap form of a word, or `None` when it never counts.
fn overlap_form(word: &str, lexicon: &Lexicon) -> Option<String> {
    if word.is_empty() || !word.chars().all(char::is_alphabetic) {
        return None;
    }
    let lower = word.to_lowercase();
    if is_stopword(&lower) {
        return None;
    }
    match lexicon.resolve(&lower).into_iter().next() {
        Some(c) => Some(c.lemma),
        None => Some(lower),
    }
}

fn gloss_words(synset: &Synset) -> Vec<String> {
    tokenize(&synset.gloss)
        .tokens
        .into_iter()
        .filter(|t| t.is_word)
        .map(|t| t.normalized)
        .collect()
}

impl<'a> SimplifiedLesk<'a> {
    /// Computes gloss bags on demand.
    pub fn new(lexicon: &'a Lexicon) -> Self {
        SimplifiedLesk { lexicon, index: None }
    }

    /// Precomputes gloss bags for every synset of the lexicon.
    pub fn indexed(lexicon: &'a Lexicon) -> Self {
        let raw: Vec<Vec<String>> = lexicon
            .synsets()
            .collect::<Vec<_>>()
            .par_iter()
            .map(|s| gloss_words(s))
            .collect();
        let mut unique: Vec<&str> = raw.iter().flatten().map(String::as_str).collect();
        unique.par_sort_unstable();
        unique.dedup();
        let forms: Vec<Option<String>> = unique.par_iter().map(|w| overlap_form(w, lexicon)).collect();

        let mut words: HashMap<String, u32> = HashMap::new();
        let mut raw_to_id: HashMap<&str, u32> = HashMap::with_capacity(unique.len());
        for (w, form) in unique.iter().zip(forms) {
            if let Some(form) = form {
                let next = words.len() as u32;
                let id = *words.entry(form).or_insert(next);
                raw_to_id.insert(w, id);
            }
        }
        let bags = raw
            .iter()
            .map(|ws| ws.iter().filter_map(|w| raw_to_id.get(w.as_str()).copied()).collect())
            .collect();
        SimplifiedLesk {
            lexicon,
            index: Some(GlossIndex { words, bags }),
        }
    }

    pub fn lexicon(&self) -> &'a Lexicon {
        self.lexicon
    }

    /// Disambiguates `sentence[target]` against the rest of the sentence.
    pub fn disambiguate(&self, sentence: &[Token], target: usize) -> Option<SenseAnnotation> {
        let context = sentence
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != target)
            .map(|(_, t)| t);
        self.best_sense(&sentence[target], context)
    }

    /// Overlap between a synset's gloss and a set of context forms.
    pub fn overlap(&self, synset: &Synset, context: &HashSet<String>) -> usize {
        match &self.index {
            Some(index) => {
                let ids: HashSet<u32> = context.iter().filter_map(|w| index.words.get(w).copied()).collect();
                self.indexed_overlap(index, synset, &ids)
            }
            None => gloss_words(synset)
                .iter()
                .filter_map(|w| overlap_form(w, self.lexicon))
                .filter(|f| context.contains(f))
                .count(),
        }
    }

    fn indexed_overlap(&self, index: &GlossIndex, synset: &Synset, context: &HashSet<u32>) -> usize {
        let slot = self.lexicon.synset_slot(synset.id).expect("synset belongs to the lexicon");
        index.bags[slot].iter().filter(|id| context.contains(id)).count()
    }

    /// Context forms of the given tokens.
    pub fn context_forms<'t>(&self, context: impl IntoIterator<Item = &'t Token>) -> HashSet<String> {
        context
            .into_iter()
            .filter(|t| t.is_word)
            .filter_map(|t| overlap_form(&t.normalized, self.lexicon))
            .collect()
    }

    pub fn best_sense<'t>(
        &self,
        target: &Token,
        context: impl IntoIterator<Item = &'t Token>,
    ) -> Option<SenseAnnotation> {
        if !target.is_word {
            return None;
        }
        let candidates = self.lexicon.resolve(&target.normalized);
        if candidates.is_empty() {
            return None;
        }
        let forms = self.context_forms(context);
        let ids: Option<HashSet<u32>> = self
            .index
            .as_ref()
            .map(|index| forms.iter().filter_map(|w| index.words.get(w).copied()).collect());

        let mut best: Option<(usize, SenseAnnotation)> = None;
        for cand in &candidates {
            for (k, id) in cand.entry.synsets.iter().enumerate() {
                let synset = self.lexicon.synset(*id).expect("indexed synsets resolve");
                let score = match (&self.index, &ids) {
                    (Some(index), Some(ids)) => self.indexed_overlap(index, synset, ids),
                    _ => self.overlap(synset, &forms),
                };
                if best.as_ref().is_none_or(|(s, _)| score > *s) {
                    best = Some((
                        score,
                        SenseAnnotation {
                            token_index: 0,
                            lemma: cand.lemma.clone(),
                            pos: cand.pos,
                            synset: *id,
                            sense_number: k + 1,
                        },
                    ));
                }
            }
        }
        best.map(|(_, s)| s)
    }
}

/// Simplified Lesk for a single target; `context` should not contain it.
pub fn simplified_lesk(target: &Token, context: &[Token], lexicon: &Lexicon) -> Option<SenseAnnotation> {
    SimplifiedLesk::new(lexicon).best_sense(target, context)
}
