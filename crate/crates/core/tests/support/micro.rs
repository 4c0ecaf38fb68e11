//! A 12-synset lexicon and a brute-force Simplified Lesk written without the
//! library's gloss handling.

#![allow(dead_code)]

use std::collections::HashSet;

use persona::lexicon::{Lexicon, LexiconBuilder, PartOfSpeech};
use persona::wsd::STOPWORDS;

pub struct MicroSense {
    pub lemma: &'static str,
    pub pos: PartOfSpeech,
    pub offset: u32,
    pub lexfile: u8,
    pub gloss: &'static str,
}

const N: PartOfSpeech = PartOfSpeech::Noun;
const V: PartOfSpeech = PartOfSpeech::Verb;

/// Sense order within each (lemma, pos) follows table order.
pub const SENSES: [MicroSense; 12] = [
    MicroSense { lemma: "bank", pos: N, offset: 1, lexfile: 14, gloss: "a financial institution that accepts deposits and channels the money into lending" },
    MicroSense { lemma: "bank", pos: N, offset: 2, lexfile: 17, gloss: "sloping land beside a body of water; \"they pulled the canoe up on the river bank\"" },
    MicroSense { lemma: "bank", pos: V, offset: 3, lexfile: 40, gloss: "do business with a bank or keep an account of money at a bank" },
    MicroSense { lemma: "plant", pos: N, offset: 4, lexfile: 6, gloss: "buildings where workers manufacture goods; \"they built a large plant to manufacture cars\"" },
    MicroSense { lemma: "plant", pos: N, offset: 5, lexfile: 20, gloss: "a living organism that grows in soil and lacks locomotion" },
    MicroSense { lemma: "plant", pos: V, offset: 6, lexfile: 35, gloss: "put seeds into the soil so they grow" },
    MicroSense { lemma: "bass", pos: N, offset: 7, lexfile: 10, gloss: "the lowest part of the music range sung by a voice" },
    MicroSense { lemma: "bass", pos: N, offset: 8, lexfile: 13, gloss: "the lean flesh of a saltwater fish caught on a river or sea" },
    MicroSense { lemma: "river", pos: N, offset: 9, lexfile: 17, gloss: "a large natural stream of water" },
    MicroSense { lemma: "money", pos: N, offset: 10, lexfile: 21, gloss: "the most common medium of exchange" },
    MicroSense { lemma: "fish", pos: V, offset: 11, lexfile: 35, gloss: "try to catch fish on a river" },
    MicroSense { lemma: "music", pos: N, offset: 12, lexfile: 10, gloss: "an artistic form of auditory communication using voice" },
];

/// First-sense concordance counts; they order the categories of a lemma.
pub const TAG_COUNTS: [(&str, PartOfSpeech, &[u32]); 9] = [
    ("bank", N, &[20, 10]),
    ("bank", V, &[2]),
    ("plant", N, &[5, 4]),
    ("plant", V, &[6]),
    ("bass", N, &[3, 2]),
    ("river", N, &[9]),
    ("money", N, &[9]),
    ("fish", V, &[4]),
    ("music", N, &[8]),
];

pub fn micro_lexicon() -> Lexicon {
    let mut b = LexiconBuilder::new();
    let ids: Vec<_> = SENSES
        .iter()
        .map(|s| b.synset(s.pos, s.offset, s.lexfile, &[s.lemma], s.gloss))
        .collect();
    for (lemma, pos, counts) in TAG_COUNTS {
        let synsets: Vec<_> = SENSES
            .iter()
            .zip(&ids)
            .filter(|(s, _)| s.lemma == lemma && s.pos == pos)
            .map(|(_, id)| *id)
            .collect();
        b.sense(lemma, pos, &synsets).tag_counts(counts);
    }
    b.build().unwrap()
}

/// Candidate senses of a micro lemma in tie-break order: categories by
/// descending first-sense count (noun first on equal counts), then senses in
/// table order. Returns indices into [`SENSES`] with their sense numbers.
pub fn candidates(lemma: &str) -> Vec<(usize, usize)> {
    let mut cats: Vec<(PartOfSpeech, u32)> = TAG_COUNTS
        .iter()
        .filter(|(l, _, _)| *l == lemma)
        .map(|(_, p, c)| (*p, c[0]))
        .collect();
    cats.sort_by_key(|(p, c)| (std::cmp::Reverse(*c), *p != N));
    let mut out = Vec::new();
    for (pos, _) in cats {
        let mut number = 0;
        for (k, s) in SENSES.iter().enumerate() {
            if s.lemma == lemma && s.pos == pos {
                number += 1;
                out.push((k, number));
            }
        }
    }
    out
}

const LEMMAS: [&str; 7] = ["bank", "plant", "bass", "river", "money", "fish", "music"];

/// Lowercase, letters only, stopwords dropped, plural `-s` folded onto a
/// micro lemma.
pub fn normalize(text: &str) -> Vec<String> {
    text.split(|c: char| !c.is_alphabetic())
        .filter(|w| !w.is_empty())
        .map(str::to_lowercase)
        .filter(|w| !STOPWORDS.contains(&w.as_str()))
        .map(|w| match w.strip_suffix('s') {
            Some(stem) if !LEMMAS.contains(&w.as_str()) && LEMMAS.contains(&stem) => stem.to_string(),
            _ => w,
        })
        .collect()
}

/// Overlap of every candidate of `lemma` with `context`; the winner is the
/// first strict maximum. Returns `(winner index into SENSES, sense number)`.
pub fn brute_force(lemma: &str, context: &[&str]) -> Option<(usize, usize)> {
    let words: HashSet<String> = context.iter().flat_map(|w| normalize(w)).collect();
    let mut best: Option<((usize, usize), usize)> = None;
    for (k, number) in candidates(lemma) {
        let overlap = normalize(SENSES[k].gloss).iter().filter(|w| words.contains(*w)).count();
        if best.is_none_or(|(_, o)| overlap > o) {
            best = Some(((k, number), overlap));
        }
    }
    best.map(|(c, _)| c)
}

/// Words the generated sentences draw from.
pub const CONTEXT_WORDS: [&str; 24] = [
    "money", "river", "water", "soil", "seeds", "grow", "music", "voice", "fish", "sea", "workers", "cars",
    "account", "business", "deposits", "lending", "canoe", "land", "flesh", "range", "the", "we", "yesterday",
    "happy",
];

/// Fifty (target position, sentence) cases from a fixed LCG.
pub fn cases() -> Vec<(usize, Vec<String>)> {
    let mut state: u64 = 0x2545_f491_4f6c_dd1d;
    let mut next = |m: usize| {
        state = state.wrapping_mul(6_364_136_223_846_793_005).wrapping_add(1_442_695_040_888_963_407);
        ((state >> 33) as usize) % m
    };
    let targets = ["bank", "plant", "bass", "bank", "plant", "bass", "river", "fish"];
    let mut out = Vec::new();
    for _ in 0..50 {
        let target = targets[next(targets.len())].to_string();
        let len = next(7);
        let mut sentence: Vec<String> = (0..len).map(|_| CONTEXT_WORDS[next(CONTEXT_WORDS.len())].to_string()).collect();
        let at = next(len + 1);
        sentence.insert(at, target);
        out.push((at, sentence));
    }
    out
}
