//! Tokenization, sentence splitting and the non-standard word statistic.

use std::sync::OnceLock;

use regex::Regex;

use crate::lexicon::Lexicon;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    /// Exactly as it appears in the input.
    pub surface: String,
    /// Lowercase of `surface`.
    pub normalized: String,
    pub sentence_index: usize,
    /// Alphabetic once apostrophes are removed. Punctuation, numbers, URLs,
    /// @mentions and #hashtags are not words.
    pub is_word: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TokenizedDocument {
    pub tokens: Vec<Token>,
    pub sentence_count: usize,
}

impl TokenizedDocument {
    /// Tokens grouped by sentence, in order.
    pub fn sentences(&self) -> impl Iterator<Item = &[Token]> {
        self.tokens
            .chunk_by(|a, b| a.sentence_index == b.sentence_index)
    }

    pub fn word_count(&self) -> usize {
        self.tokens.iter().filter(|t| t.is_word).count()
    }
}

const CLITICS: [&str; 6] = ["d", "s", "ll", "re", "ve", "m"];

fn token_regex() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| {
        Regex::new(
            r"(?x)
              (?P<url>(?:https?://|www\.)\S+)
            | (?P<mention>@\w+)
            | (?P<tag>\#\w+)
            | (?P<word>\p{L}+(?:['’]\p{L}+)*)
            | (?P<num>\p{N}+(?:[.,:]\p{N}+)*)
            | (?P<other>\S)",
        )
        .expect("token pattern compiles")
    })
}

fn is_apostrophe(c: char) -> bool {
    c == '\'' || c == '’'
}

/// Splits a word run at a trailing clitic: `I'd` → `I` + `'d`,
/// `don't` → `do` + `n't`. Other internal apostrophes stay intact.
fn split_clitic(word: &str) -> Vec<&str> {
    let lower = word.to_lowercase();
    if lower.len() == word.len() {
        // n't: the apostrophe is preceded by an n that is not the first letter.
        if let Some(apos) = word.rfind(is_apostrophe) {
            let tail = &lower[apos..];
            let after = tail.char_indices().nth(1).map(|(k, _)| &tail[k..]).unwrap_or("");
            if after == "t" && apos >= 2 && lower[..apos].ends_with('n') {
                return vec![&word[..apos - 1], &word[apos - 1..]];
            }
            if CLITICS.contains(&after) && apos > 0 {
                return vec![&word[..apos], &word[apos..]];
            }
        }
    }
    vec![word]
}

fn is_word(s: &str) -> bool {
    let mut any = false;
    for c in s.chars() {
        if is_apostrophe(c) {
            continue;
        }
        if !c.is_alphabetic() {
            return false;
        }
        any = true;
    }
    any
}

fn is_terminator(s: &str) -> bool {
    matches!(s, "." | "!" | "?" | "…")
}

/// Segments `text` into tokens and sentences.
///
/// Sentences end after a run of `.`, `!`, `?` or at a line break.
pub fn tokenize(text: &str) -> TokenizedDocument {
    let mut tokens: Vec<Token> = Vec::new();
    let mut sentence = 0usize;
    let mut last_end = 0usize;

    for caps in token_regex().captures_iter(text) {
        let m = caps.get(0).expect("whole match");
        let mut line_break = text[last_end..m.start()].contains('\n');
        last_end = m.end();

        let word_like = caps.name("word").is_some();
        let pieces = if word_like { split_clitic(m.as_str()) } else { vec![m.as_str()] };
        for piece in pieces {
            if let Some(last) = tokens.last() {
                // A new sentence starts after a line break, or after a run of
                // terminators once a non-terminator follows.
                if line_break || (is_terminator(&last.surface) && !is_terminator(piece)) {
                    sentence += 1;
                }
            }
            line_break = false;
            tokens.push(make_token(piece, sentence, word_like && is_word(piece)));
        }
    }

    let sentence_count = if tokens.is_empty() { 0 } else { sentence + 1 };
    TokenizedDocument { tokens, sentence_count }
}

fn make_token(surface: &str, sentence_index: usize, is_word: bool) -> Token {
    Token {
        surface: surface.to_string(),
        normalized: surface.to_lowercase(),
        sentence_index,
        is_word,
    }
}

/// Fraction of word tokens that resolve to no WordNet lemma under any
/// category; 0 when the document has no word tokens.
pub fn non_standard_ratio(doc: &TokenizedDocument, lexicon: &Lexicon) -> f64 {
    let (unknown, words) = non_standard_counts(doc, lexicon);
    if words == 0 {
        0.0
    } else {
        unknown as f64 / words as f64
    }
}

/// `(non-standard word tokens, word tokens)`.
pub fn non_standard_counts(doc: &TokenizedDocument, lexicon: &Lexicon) -> (usize, usize) {
    doc.tokens
        .iter()
        .filter(|t| t.is_word)
        .fold((0, 0), |(unknown, words), t| {
            (unknown + usize::from(!lexicon.knows(&t.normalized)), words + 1)
        })
}
