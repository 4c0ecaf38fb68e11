use std::fmt;
use std::str::FromStr;

/// WordNet syntactic category.
///
/// Adjective satellites (`s`) only appear inside `data.adj`; the sense index
/// and every feature name fold them into [`PartOfSpeech::Adjective`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PartOfSpeech {
    Noun,
    Verb,
    Adjective,
    AdjectiveSatellite,
    Adverb,
}

impl PartOfSpeech {
    /// The four index categories in resolution priority order.
    pub const INDEXED: [PartOfSpeech; 4] = [
        PartOfSpeech::Noun,
        PartOfSpeech::Verb,
        PartOfSpeech::Adjective,
        PartOfSpeech::Adverb,
    ];

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'n' => Some(PartOfSpeech::Noun),
            'v' => Some(PartOfSpeech::Verb),
            'a' => Some(PartOfSpeech::Adjective),
            's' => Some(PartOfSpeech::AdjectiveSatellite),
            'r' => Some(PartOfSpeech::Adverb),
            _ => None,
        }
    }

    pub fn letter(self) -> char {
        match self {
            PartOfSpeech::Noun => 'n',
            PartOfSpeech::Verb => 'v',
            PartOfSpeech::Adjective => 'a',
            PartOfSpeech::AdjectiveSatellite => 's',
            PartOfSpeech::Adverb => 'r',
        }
    }

    /// Satellites fold into adjectives; everything else is unchanged.
    pub fn normalized(self) -> Self {
        match self {
            PartOfSpeech::AdjectiveSatellite => PartOfSpeech::Adjective,
            other => other,
        }
    }

    /// Letter used in sense feature names (`love_1v`): never `s`.
    pub fn feature_letter(self) -> char {
        self.normalized().letter()
    }

    /// File suffix for `index.*` / `data.*` / `*.exc`.
    pub fn file_suffix(self) -> &'static str {
        match self.normalized() {
            PartOfSpeech::Noun => "noun",
            PartOfSpeech::Verb => "verb",
            PartOfSpeech::Adjective => "adj",
            PartOfSpeech::Adverb => "adv",
            PartOfSpeech::AdjectiveSatellite => unreachable!(),
        }
    }

    /// Prefix of lexicographer-file names for this category (`noun`, `adj`, ...).
    pub fn lexname_prefix(self) -> &'static str {
        self.file_suffix()
    }

    /// Position in [`PartOfSpeech::INDEXED`].
    pub(crate) fn slot(self) -> usize {
        match self.normalized() {
            PartOfSpeech::Noun => 0,
            PartOfSpeech::Verb => 1,
            PartOfSpeech::Adjective => 2,
            PartOfSpeech::Adverb => 3,
            PartOfSpeech::AdjectiveSatellite => unreachable!(),
        }
    }
}

impl fmt::Display for PartOfSpeech {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for PartOfSpeech {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => {
                PartOfSpeech::from_letter(c).ok_or_else(|| format!("unknown part of speech {s:?}"))
            }
            _ => match s {
                "noun" => Ok(PartOfSpeech::Noun),
                "verb" => Ok(PartOfSpeech::Verb),
                "adj" | "adjective" => Ok(PartOfSpeech::Adjective),
                "adv" | "adverb" => Ok(PartOfSpeech::Adverb),
                _ => Err(format!("unknown part of speech {s:?}")),
            },
        }
    }
}
