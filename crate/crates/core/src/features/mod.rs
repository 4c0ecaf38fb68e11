//! Pipeline configurations, feature extraction and TF-IDF weighting.
//!
//! Extraction happens in two steps. [`FeatureExtractor::annotate`] turns a
//! tokenized document into the stream of items the pipeline counts; this is
//! where WSD runs and it does not depend on any training data.
//! [`FeatureExtractor::count`] then applies Selective.WSD demotion (when a
//! top-K list is given), counts feature names, adds supersense labels and
//! averages sentiment. Cross-validation annotates each document once and
//! re-counts it per fold.

mod config;
mod sparse;
mod tfidf;

use std::collections::BTreeMap;

use crate::lexicon::Lexicon;
use crate::textproc::TokenizedDocument;
use crate::wsd::{demote, MixedFeature, SenseAnnotator, TopK};

pub use config::{BasePipeline, ConfigError, PipelineConfig, SentimentDenominator, DEFAULT_FEATURE_CAP};
pub use sparse::{FeatureMatrix, FeatureVocabulary, SparseFormatError, SparseVector};
pub use tfidf::{tfidf_apply, tfidf_fit, IdfTable};

/// Names of the three sentiment scalars, in vector order.
pub const SENTIMENT_FEATURES: [&str; 3] = ["posscore", "negscore", "neuscore"];

/// The countable items of one document under one pipeline.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AnnotatedDocument {
    pub items: Vec<MixedFeature>,
}

impl AnnotatedDocument {
    /// Distinct word-level names; the input of Selective.WSD's χ² ranking.
    pub fn word_level_names(&self) -> Vec<&str> {
        let mut names: Vec<&str> = self.items.iter().map(MixedFeature::word_level_name).collect();
        names.sort_unstable();
        names.dedup();
        names
    }
}

/// Raw counts of one document plus its optional sentiment triple.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct DocumentFeatures {
    pub counts: BTreeMap<String, u32>,
    /// `(posscore, negscore, neuscore)` when sentiment is enabled.
    pub sentiment: Option<[f64; 3]>,
}

impl DocumentFeatures {
    pub fn count(&self, name: &str) -> u32 {
        self.counts.get(name).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().map(|&c| u64::from(c)).sum()
    }
}

pub struct FeatureExtractor<'a> {
    lexicon: &'a Lexicon,
    config: PipelineConfig,
    annotator: Option<SenseAnnotator<'a>>,
}

impl<'a> FeatureExtractor<'a> {
    /// Builds the WSD machinery the configuration needs. The configuration
    /// must already be valid.
    pub fn new(lexicon: &'a Lexicon, config: PipelineConfig) -> Result<Self, ConfigError> {
        config.validate()?;
        let annotator = config
            .base
            .algorithm()
            .map(|algorithm| SenseAnnotator::for_algorithm(lexicon, algorithm));
        Ok(FeatureExtractor {
            lexicon,
            config,
            annotator,
        })
    }

    /// Shares an existing annotator (its algorithm must match the base).
    pub fn with_annotator(config: PipelineConfig, annotator: SenseAnnotator<'a>) -> Result<Self, ConfigError> {
        config.validate()?;
        if config.base.algorithm() != Some(annotator.algorithm()) {
            return Err(ConfigError::AnnotatorMismatch);
        }
        Ok(FeatureExtractor {
            lexicon: annotator.lexicon(),
            config,
            annotator: Some(annotator),
        })
    }

    pub fn config(&self) -> &PipelineConfig {
        &self.config
    }

    pub fn lexicon(&self) -> &'a Lexicon {
        self.lexicon
    }

    pub fn annotate(&self, doc: &TokenizedDocument) -> AnnotatedDocument {
        let items = match self.config.base {
            BasePipeline::Word => doc
                .tokens
                .iter()
                .map(|t| MixedFeature::raw(t.normalized.clone()))
                .collect(),
            BasePipeline::WnWord => doc
                .tokens
                .iter()
                .filter(|t| t.is_word)
                .filter_map(|t| self.lexicon.resolve(&t.normalized).into_iter().next())
                .map(|c| MixedFeature::Word {
                    name: c.lemma,
                    lexical: true,
                })
                .collect(),
            BasePipeline::WnMfs | BasePipeline::WnSLesk => {
                let annotator = self.annotator.as_ref().expect("sense pipelines carry an annotator");
                annotator
                    .annotate_document(doc)
                    .into_iter()
                    .filter(MixedFeature::is_lexical)
                    .collect()
            }
        };
        AnnotatedDocument { items }
    }

    /// Counts an annotated document. `topk` is applied only when the
    /// configuration is selective.
    pub fn count(&self, doc: &AnnotatedDocument, topk: Option<&TopK>) -> DocumentFeatures {
        let items = match (self.config.selective_topk, topk) {
            (Some(_), Some(topk)) => demote(doc.items.clone(), topk),
            _ => doc.items.clone(),
        };
        let mut counts: BTreeMap<String, u32> = BTreeMap::new();
        let mut sums = [0.0f64; 3];
        let mut senses = 0usize;
        for item in &items {
            *counts.entry(item.name().into_owned()).or_insert(0) += 1;
            let Some(sense) = item.sense() else { continue };
            if self.config.with_supersense {
                let label = self
                    .lexicon
                    .supersense(sense.synset)
                    .expect("annotated synsets have a lexicographer file");
                *counts.entry(label.to_string()).or_insert(0) += 1;
            }
            if self.config.with_sentiment {
                let s = self.lexicon.sentiment(sense.synset);
                if self.config.sentiment_denominator == SentimentDenominator::AllSenses || s.is_polar() {
                    sums[0] += s.pos_score;
                    sums[1] += s.neg_score;
                    sums[2] += s.obj_score;
                    senses += 1;
                }
            }
        }
        let sentiment = self.config.with_sentiment.then(|| {
            if senses == 0 {
                [0.0; 3]
            } else {
                sums.map(|v| v / senses as f64)
            }
        });
        DocumentFeatures { counts, sentiment }
    }

    /// `annotate` then `count`.
    pub fn extract(&self, doc: &TokenizedDocument, topk: Option<&TopK>) -> DocumentFeatures {
        self.count(&self.annotate(doc), topk)
    }
}
