//! The `key=value` sidecar written next to every report. It records the
//! resolved configuration and the checksums of everything the report
//! depends on, so `run --manifest` can regenerate the report.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context as _};
use persona::corpus::Trait;
use persona::features::{BasePipeline, PipelineConfig, SentimentDenominator};

use crate::args::CorpusFormat;

#[derive(Clone, Debug, PartialEq)]
pub struct RunManifest {
    pub toolkit_version: String,
    pub config: PipelineConfig,
    pub traits: Vec<Trait>,
    pub seed: u64,
    pub folds: u64,
    pub svm_c: f64,
    pub corpus: PathBuf,
    pub corpus_format: CorpusFormat,
    pub columns: Option<PathBuf>,
    /// Corpus file digest, with the column map's appended after a `+`.
    pub corpus_sha256: String,
    pub wordnet_dir: PathBuf,
    pub wordnet_sha256: String,
    pub sentiwordnet: Option<PathBuf>,
    pub sentiwordnet_sha256: Option<String>,
    pub report_sha256: String,
    /// Seconds since the Unix epoch; the only field a replay never checks.
    pub timestamp: u64,
}

impl RunManifest {
    /// Label grouping reports over the same corpus.
    pub fn dataset(&self) -> String {
        let stem = self
            .corpus
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        format!("{stem}@{}", &self.corpus_sha256[..self.corpus_sha256.len().min(8)])
    }

    pub fn to_text(&self) -> String {
        let c = &self.config;
        let mut out = String::new();
        let mut put = |k: &str, v: String| {
            let _ = writeln!(out, "{k}={v}");
        };
        put("toolkit_version", self.toolkit_version.clone());
        put("config", c.name());
        put("pipeline", c.base.flag().to_string());
        put("supersense", c.with_supersense.to_string());
        put("sentiment", c.with_sentiment.to_string());
        put("sentiment_denominator", c.sentiment_denominator.name().to_string());
        put(
            "selective_topk",
            c.selective_topk.map_or_else(|| "none".to_string(), |k| k.to_string()),
        );
        put("feature_cap", c.feature_cap.to_string());
        put(
            "traits",
            self.traits.iter().map(|t| t.code()).collect::<Vec<_>>().join(","),
        );
        put("seed", self.seed.to_string());
        put("folds", self.folds.to_string());
        put("svm_c", format!("{:?}", self.svm_c));
        put("corpus", self.corpus.display().to_string());
        put("corpus_format", self.corpus_format.name().to_string());
        put("columns", opt_path(&self.columns));
        put("corpus_sha256", self.corpus_sha256.clone());
        put("wordnet_dir", self.wordnet_dir.display().to_string());
        put("wordnet_sha256", self.wordnet_sha256.clone());
        put("sentiwordnet", opt_path(&self.sentiwordnet));
        put("sentiwordnet_sha256", self.sentiwordnet_sha256.clone().unwrap_or_default());
        put("report_sha256", self.report_sha256.clone());
        put("timestamp", self.timestamp.to_string());
        out
    }

    pub fn parse(text: &str) -> anyhow::Result<RunManifest> {
        let mut fields = BTreeMap::new();
        for (k, line) in text.lines().enumerate() {
            let line = line.trim_end_matches('\r');
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| anyhow!("manifest line {}: expected key=value", k + 1))?;
            fields.insert(key.trim().to_string(), value.to_string());
        }
        let get = |k: &str| fields.get(k).map(String::as_str).ok_or_else(|| anyhow!("manifest has no {k}"));
        let opt = |k: &str| fields.get(k).filter(|v| !v.is_empty()).cloned();

        let base: BasePipeline = get("pipeline")?.parse()?;
        let config = PipelineConfig {
            base,
            with_supersense: parse_field("supersense", get("supersense")?)?,
            with_sentiment: parse_field("sentiment", get("sentiment")?)?,
            selective_topk: match get("selective_topk")? {
                "none" => None,
                k => Some(parse_field("selective_topk", k)?),
            },
            feature_cap: parse_field("feature_cap", get("feature_cap")?)?,
            sentiment_denominator: get("sentiment_denominator")?.parse::<SentimentDenominator>()?,
        };
        config.validate()?;
        if let Some(name) = fields.get("config") {
            if *name != config.name() {
                bail!("manifest config {name} does not match its pipeline fields ({})", config.name());
            }
        }
        let traits = get("traits")?
            .split(',')
            .map(|t| t.parse::<Trait>().map_err(anyhow::Error::from))
            .collect::<anyhow::Result<Vec<_>>>()?;
        let corpus_format = match get("corpus_format")? {
            "essays" => CorpusFormat::Essays,
            "mypersonality" => CorpusFormat::Mypersonality,
            "columns" => CorpusFormat::Columns,
            "cache" => CorpusFormat::Cache,
            other => bail!("unknown corpus_format {other:?}"),
        };
        Ok(RunManifest {
            toolkit_version: get("toolkit_version")?.to_string(),
            config,
            traits,
            seed: parse_field("seed", get("seed")?)?,
            folds: parse_field("folds", get("folds")?)?,
            svm_c: parse_field("svm_c", get("svm_c")?)?,
            corpus: get("corpus")?.into(),
            corpus_format,
            columns: opt("columns").map(PathBuf::from),
            corpus_sha256: get("corpus_sha256")?.to_string(),
            wordnet_dir: get("wordnet_dir")?.into(),
            wordnet_sha256: get("wordnet_sha256")?.to_string(),
            sentiwordnet: opt("sentiwordnet").map(PathBuf::from),
            sentiwordnet_sha256: opt("sentiwordnet_sha256"),
            report_sha256: get("report_sha256")?.to_string(),
            timestamp: parse_field("timestamp", get("timestamp")?)?,
        })
    }
}

fn opt_path(p: &Option<PathBuf>) -> String {
    p.as_ref().map(|p| p.display().to_string()).unwrap_or_default()
}

fn parse_field<T: FromStr>(key: &str, value: &str) -> anyhow::Result<T>
where
    T::Err: std::error::Error + Send + Sync + 'static,
{
    value.parse().with_context(|| format!("manifest field {key}={value}"))
}
