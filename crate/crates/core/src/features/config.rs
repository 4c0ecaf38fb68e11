use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::wsd::WsdAlgorithm;

pub const DEFAULT_FEATURE_CAP: usize = 5000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasePipeline {
    /// Every normalized token.
    Word,
    /// Tokens that resolve to a WordNet lemma, counted as that lemma.
    WnWord,
    /// Most-frequent-sense annotation.
    WnMfs,
    /// Simplified Lesk annotation.
    WnSLesk,
}

impl BasePipeline {
    pub const ALL: [BasePipeline; 4] = [
        BasePipeline::Word,
        BasePipeline::WnWord,
        BasePipeline::WnMfs,
        BasePipeline::WnSLesk,
    ];

    /// Report label, e.g. `WN-S-LESK`.
    pub fn label(self) -> &'static str {
        match self {
            BasePipeline::Word => "WORD",
            BasePipeline::WnWord => "WN-WORD",
            BasePipeline::WnMfs => "WN-MFS",
            BasePipeline::WnSLesk => "WN-S-LESK",
        }
    }

    /// Command-line spelling, e.g. `wn-s-lesk`.
    pub fn flag(self) -> &'static str {
        match self {
            BasePipeline::Word => "word",
            BasePipeline::WnWord => "wn-word",
            BasePipeline::WnMfs => "wn-mfs",
            BasePipeline::WnSLesk => "wn-s-lesk",
        }
    }

    pub fn algorithm(self) -> Option<WsdAlgorithm> {
        match self {
            BasePipeline::WnMfs => Some(WsdAlgorithm::Mfs),
            BasePipeline::WnSLesk => Some(WsdAlgorithm::SimplifiedLesk),
            _ => None,
        }
    }

    pub fn is_sense_bearing(self) -> bool {
        self.algorithm().is_some()
    }
}

impl fmt::Display for BasePipeline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for BasePipeline {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase().replace('_', "-");
        BasePipeline::ALL
            .into_iter()
            .find(|p| p.flag() == lower)
            .ok_or_else(|| ConfigError::UnknownPipeline(s.to_string()))
    }
}

/// Which senses the sentiment means are taken over.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SentimentDenominator {
    /// Every disambiguated sense.
    #[default]
    AllSenses,
    /// Only senses with a non-zero positive or negative score.
    Polar,
}

impl SentimentDenominator {
    pub fn name(self) -> &'static str {
        match self {
            SentimentDenominator::AllSenses => "all",
            SentimentDenominator::Polar => "polar",
        }
    }
}

impl FromStr for SentimentDenominator {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(SentimentDenominator::AllSenses),
            "polar" => Ok(SentimentDenominator::Polar),
            other => Err(ConfigError::UnknownDenominator(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("unknown pipeline {0:?} (expected word, wn-word, wn-mfs or wn-s-lesk)")]
    UnknownPipeline(String),
    #[error("unknown sentiment denominator {0:?} (expected all or polar)")]
    UnknownDenominator(String),
    #[error("supersense features need a sense-bearing pipeline (wn-mfs or wn-s-lesk), not {0}")]
    SupersenseWithoutSenses(BasePipeline),
    #[error("sentiment features attach to disambiguated senses and need wn-mfs or wn-s-lesk, not {0}")]
    SentimentWithoutSenses(BasePipeline),
    #[error("Selective.WSD needs a sense-bearing pipeline (wn-mfs or wn-s-lesk), not {0}")]
    SelectiveWithoutSenses(BasePipeline),
    #[error("feature cap must be positive")]
    ZeroFeatureCap,
    #[error("annotator algorithm does not match the pipeline")]
    AnnotatorMismatch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PipelineConfig {
    pub base: BasePipeline,
    pub with_supersense: bool,
    pub with_sentiment: bool,
    /// Selective.WSD list length. `Some(0)` demotes every sense.
    pub selective_topk: Option<usize>,
    /// χ² top features kept per trait and fold.
    pub feature_cap: usize,
    pub sentiment_denominator: SentimentDenominator,
}

impl PipelineConfig {
    pub fn new(base: BasePipeline) -> Self {
        PipelineConfig {
            base,
            with_supersense: false,
            with_sentiment: false,
            selective_topk: None,
            feature_cap: DEFAULT_FEATURE_CAP,
            sentiment_denominator: SentimentDenominator::AllSenses,
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let senses = self.base.is_sense_bearing();
        if self.with_supersense && !senses {
            return Err(ConfigError::SupersenseWithoutSenses(self.base));
        }
        if self.with_sentiment && !senses {
            return Err(ConfigError::SentimentWithoutSenses(self.base));
        }
        if self.selective_topk.is_some() && !senses {
            return Err(ConfigError::SelectiveWithoutSenses(self.base));
        }
        if self.feature_cap == 0 {
            return Err(ConfigError::ZeroFeatureCap);
        }
        Ok(())
    }

    /// Report name, e.g. `WN-MFS-S_SENSE-SENTI` or `WN-S-LESK-SEL100`.
    pub fn name(&self) -> String {
        let mut name = self.base.label().to_string();
        if self.with_supersense {
            name.push_str("-S_SENSE");
        }
        if self.with_sentiment {
            name.push_str("-SENTI");
            if self.sentiment_denominator == SentimentDenominator::Polar {
                name.push_str("_POLAR");
            }
        }
        if let Some(k) = self.selective_topk {
            name.push_str(&format!("-SEL{k}"));
        }
        name
    }

    /// The name plus the feature cap; two runs with equal fingerprints
    /// differ only in corpus, seed or resources.
    pub fn fingerprint(&self) -> String {
        format!("{}/cap{}", self.name(), self.feature_cap)
    }
}
