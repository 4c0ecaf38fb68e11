//! Lexicons of a few made-up lemmas with glosses drawn from a small
//! vocabulary.

#![allow(dead_code)]

use persona::lexicon::{Lexicon, LexiconBuilder, PartOfSpeech};

pub const GLOSS_WORDS: [&str; 12] = [
    "stone", "water", "light", "green", "sound", "cold", "fire", "road", "bird", "song", "salt", "wood",
];

/// Lemma names `lema`, `lemb`, ...
pub fn lemma(k: usize) -> String {
    format!("lem{}", char::from(b'a' + k as u8))
}

/// One entry per lemma: a category selector and one gloss per sense, each
/// gloss a list of indices into [`GLOSS_WORDS`].
pub type LexiconSpec = Vec<(u8, Vec<Vec<u8>>)>;

pub fn build(spec: &[(u8, Vec<Vec<u8>>)]) -> Lexicon {
    let mut b = LexiconBuilder::new();
    let mut offset = 1;
    for (k, (pos_sel, glosses)) in spec.iter().enumerate() {
        let lemma = lemma(k);
        let pos = PartOfSpeech::INDEXED[*pos_sel as usize % 4];
        let lexfile = match pos {
            PartOfSpeech::Noun => 3,
            PartOfSpeech::Verb => 29,
            PartOfSpeech::Adverb => 2,
            _ => 0,
        };
        let ids: Vec<_> = glosses
            .iter()
            .map(|g| {
                let words: Vec<&str> = g.iter().map(|&w| GLOSS_WORDS[w as usize % GLOSS_WORDS.len()]).collect();
                let id = b.synset(pos, offset, lexfile, &[&lemma], &format!("the {}", words.join(" ")));
                offset += 1;
                id
            })
            .collect();
        b.sense(&lemma, pos, &ids);
    }
    b.build().unwrap()
}
