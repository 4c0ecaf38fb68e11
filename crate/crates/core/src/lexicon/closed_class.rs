//! Function words that a part-of-speech tagger would never route to WordNet.
//!
//! Several of them collide with unrelated WordNet entries (`i` as iodine,
//! `it` as information technology, `us`, `who`, `can`, `may`), so without a
//! tagger they are kept out of lexicon resolution altogether. Auxiliary
//! verbs are deliberately absent: `is`, `had`, `does` resolve to verbs.

pub const CLOSED_CLASS_WORDS: &[&str] = &[
    // personal, possessive and reflexive pronouns
    "i", "me", "my", "mine", "myself", "we", "us", "our", "ours", "ourselves", "you", "your",
    "yours", "yourself", "yourselves", "he", "him", "his", "himself", "she", "her", "hers",
    "herself", "it", "its", "itself", "they", "them", "their", "theirs", "themselves",
    // wh-words and demonstratives
    "who", "whom", "whose", "which", "what", "that", "this", "these", "those", "when", "where",
    "why", "how",
    // determiners and existential there
    "a", "an", "the", "some", "any", "no", "every", "each", "either", "neither", "another",
    "both", "all", "there",
    // prepositions and particles
    "about", "above", "across", "after", "against", "along", "among", "around", "at", "before",
    "behind", "below", "beneath", "beside", "between", "beyond", "by", "during", "except", "for",
    "from", "in", "inside", "into", "of", "off", "on", "onto", "out", "over", "since", "through",
    "throughout", "till", "to", "toward", "towards", "under", "underneath", "until", "up", "upon",
    "with", "within", "without",
    // conjunctions and subordinators
    "and", "or", "but", "nor", "if", "because", "although", "though", "whereas", "unless",
    "whether", "than", "as",
    // modals
    "can", "could", "may", "might", "must", "shall", "should", "will", "would",
];

pub fn is_closed_class(word: &str) -> bool {
    CLOSED_CLASS_WORDS.contains(&word)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_is_lowercase_and_unique() {
        let mut seen = std::collections::HashSet::new();
        for w in CLOSED_CLASS_WORDS {
            assert_eq!(*w, w.to_lowercase());
            assert!(seen.insert(*w), "duplicate {w}");
        }
        assert!(is_closed_class("i"));
        assert!(!is_closed_class("love"));
        assert!(!is_closed_class("is"));
    }
}
