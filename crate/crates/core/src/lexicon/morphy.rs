//! WordNet's morphological base-form rules.

use std::collections::HashMap;

use super::{Evidence, PartOfSpeech};

const NOUN_RULES: &[(&str, &str)] = &[
    ("s", ""),
    ("ses", "s"),
    ("xes", "x"),
    ("zes", "z"),
    ("ches", "ch"),
    ("shes", "sh"),
    ("men", "man"),
    ("ies", "y"),
];

const VERB_RULES: &[(&str, &str)] = &[
    ("s", ""),
    ("ies", "y"),
    ("es", "e"),
    ("es", ""),
    ("ed", "e"),
    ("ed", ""),
    ("ing", "e"),
    ("ing", ""),
];

const ADJ_RULES: &[(&str, &str)] = &[("er", ""), ("est", ""), ("er", "e"), ("est", "e")];

fn rules(pos: PartOfSpeech) -> &'static [(&'static str, &'static str)] {
    match pos.normalized() {
        PartOfSpeech::Noun => NOUN_RULES,
        PartOfSpeech::Verb => VERB_RULES,
        PartOfSpeech::Adjective => ADJ_RULES,
        _ => &[],
    }
}

/// Unfiltered candidates in order: exceptions, rule detachments, identity.
pub(super) fn candidates(
    surface: &str,
    pos: PartOfSpeech,
    exceptions: &HashMap<String, Vec<String>>,
) -> Vec<(String, Evidence)> {
    let mut out = Vec::new();
    if let Some(bases) = exceptions.get(surface) {
        out.extend(bases.iter().map(|b| (b.clone(), Evidence::Exception)));
    }
    // As in the reference morphy: short nouns and nouns in -ss are never detached.
    let detachable = !(pos.normalized() == PartOfSpeech::Noun
        && (surface.ends_with("ss") || surface.chars().count() <= 2));
    if detachable {
        for (suffix, ending) in rules(pos) {
            if let Some(stem) = surface.strip_suffix(suffix) {
                if !stem.is_empty() {
                    out.push((format!("{stem}{ending}"), Evidence::Rule));
                }
            }
        }
    }
    out.push((surface.to_string(), Evidence::Identity));
    out
}
