use std::collections::{BTreeMap, HashMap};

use super::{Lexicon, LexiconError, PartOfSpeech, SenseEntry, SentimentScore, Synset, SynsetId};

/// Lexicographer file names of WordNet 3.0, by file number.
pub const STANDARD_LEXNAMES: [(u8, &str); 45] = [
    (0, "adj.all"),
    (1, "adj.pert"),
    (2, "adv.all"),
    (3, "noun.Tops"),
    (4, "noun.act"),
    (5, "noun.animal"),
    (6, "noun.artifact"),
    (7, "noun.attribute"),
    (8, "noun.body"),
    (9, "noun.cognition"),
    (10, "noun.communication"),
    (11, "noun.event"),
    (12, "noun.feeling"),
    (13, "noun.food"),
    (14, "noun.group"),
    (15, "noun.location"),
    (16, "noun.motive"),
    (17, "noun.object"),
    (18, "noun.person"),
    (19, "noun.phenomenon"),
    (20, "noun.plant"),
    (21, "noun.possession"),
    (22, "noun.process"),
    (23, "noun.quantity"),
    (24, "noun.relation"),
    (25, "noun.shape"),
    (26, "noun.state"),
    (27, "noun.substance"),
    (28, "noun.time"),
    (29, "verb.body"),
    (30, "verb.change"),
    (31, "verb.cognition"),
    (32, "verb.communication"),
    (33, "verb.competition"),
    (34, "verb.consumption"),
    (35, "verb.contact"),
    (36, "verb.creation"),
    (37, "verb.emotion"),
    (38, "verb.motion"),
    (39, "verb.perception"),
    (40, "verb.possession"),
    (41, "verb.social"),
    (42, "verb.stative"),
    (43, "verb.weather"),
    (44, "adj.ppl"),
];

/// Assembles a [`Lexicon`] in memory. The file loaders use it too, so a
/// hand-built lexicon obeys exactly the same invariants as a parsed one.
#[derive(Debug)]
pub struct LexiconBuilder {
    senses: [HashMap<String, SenseEntry>; 4],
    exceptions: [HashMap<String, Vec<String>>; 4],
    synsets: Vec<Synset>,
    synset_slots: HashMap<SynsetId, usize>,
    sentiment: HashMap<SynsetId, SentimentScore>,
    lexnames: BTreeMap<u8, String>,
}

pub struct SenseHandle<'b>(&'b mut SenseEntry);

impl SenseHandle<'_> {
    pub fn tag_counts(self, counts: &[u32]) -> Self {
        self.0.tag_counts = Some(counts.to_vec());
        self.0.tagged_sense_count = counts.iter().filter(|&&c| c > 0).count() as u32;
        self
    }

    pub fn tagged_sense_count(self, count: u32) -> Self {
        self.0.tagged_sense_count = count;
        self
    }
}

impl Default for LexiconBuilder {
    fn default() -> Self {
        Self::new()
    }
}

impl LexiconBuilder {
    /// Empty builder preloaded with the WordNet 3.0 lexicographer names.
    pub fn new() -> Self {
        let mut b = Self::without_lexnames();
        for (num, name) in STANDARD_LEXNAMES {
            b.lexnames.insert(num, name.to_string());
        }
        b
    }

    pub(crate) fn without_lexnames() -> Self {
        LexiconBuilder {
            senses: Default::default(),
            exceptions: Default::default(),
            synsets: Vec::new(),
            synset_slots: HashMap::new(),
            sentiment: HashMap::new(),
            lexnames: BTreeMap::new(),
        }
    }

    pub(crate) fn from_lexicon(lex: Lexicon) -> Self {
        let sentiment = lex
            .synsets
            .iter()
            .zip(&lex.sentiment)
            .filter_map(|(s, score)| score.map(|score| (s.id, score)))
            .collect();
        LexiconBuilder {
            senses: lex.senses,
            exceptions: lex.exceptions,
            synsets: lex.synsets,
            synset_slots: lex.synset_slots,
            sentiment,
            lexnames: lex.lexnames,
        }
    }

    pub fn lexname(&mut self, num: u8, name: &str) -> &mut Self {
        self.lexnames.insert(num, name.to_string());
        self
    }

    /// Adds (or replaces) a synset and returns its id.
    pub fn synset(
        &mut self,
        pos: PartOfSpeech,
        offset: u32,
        lexfile_num: u8,
        lemmas: &[&str],
        gloss: &str,
    ) -> SynsetId {
        self.insert_synset(Synset {
            id: SynsetId::new(pos, offset),
            ss_type: pos,
            lemmas: lemmas.iter().map(|l| l.to_lowercase()).collect(),
            gloss: gloss.to_string(),
            lexfile_num,
        })
    }

    pub(crate) fn insert_synset(&mut self, synset: Synset) -> SynsetId {
        let id = synset.id;
        match self.synset_slots.get(&id) {
            Some(&k) => self.synsets[k] = synset,
            None => {
                self.synset_slots.insert(id, self.synsets.len());
                self.synsets.push(synset);
            }
        }
        id
    }

    pub fn has_synset(&self, id: SynsetId) -> bool {
        self.synset_slots.contains_key(&id)
    }

    /// Registers `lemma` under `pos` with senses in the given order.
    pub fn sense(&mut self, lemma: &str, pos: PartOfSpeech, synsets: &[SynsetId]) -> SenseHandle<'_> {
        let pos = pos.normalized();
        let entry = SenseEntry {
            lemma: lemma.to_string(),
            pos,
            synsets: synsets.to_vec(),
            tagged_sense_count: 0,
            tag_counts: None,
        };
        let map = &mut self.senses[pos.slot()];
        map.insert(lemma.to_string(), entry);
        SenseHandle(map.get_mut(lemma).expect("just inserted"))
    }

    pub(crate) fn sense_entry_mut(&mut self, lemma: &str, pos: PartOfSpeech) -> Option<&mut SenseEntry> {
        self.senses[pos.slot()].get_mut(lemma)
    }

    pub fn exception(&mut self, pos: PartOfSpeech, surface: &str, bases: &[&str]) -> &mut Self {
        self.exceptions[pos.slot()]
            .entry(surface.to_string())
            .or_default()
            .extend(bases.iter().map(|b| b.to_string()));
        self
    }

    pub fn sentiment(&mut self, id: SynsetId, score: SentimentScore) -> &mut Self {
        self.sentiment.insert(id, score);
        self
    }

    /// Checks cross-references and freezes the lexicon.
    pub fn build(self) -> Result<Lexicon, LexiconError> {
        for map in &self.senses {
            for entry in map.values() {
                for id in &entry.synsets {
                    if !self.synset_slots.contains_key(id) {
                        return Err(LexiconError::UnknownSynset(*id));
                    }
                }
            }
        }
        for s in &self.synsets {
            if !self.lexnames.contains_key(&s.lexfile_num) {
                return Err(LexiconError::UnknownLexfile(s.lexfile_num));
            }
        }
        let sentiment = self
            .synsets
            .iter()
            .map(|s| self.sentiment.get(&s.id).copied())
            .collect();
        Ok(Lexicon {
            senses: self.senses,
            exceptions: self.exceptions,
            synsets: self.synsets,
            synset_slots: self.synset_slots,
            sentiment,
            lexnames: self.lexnames,
        })
    }
}
