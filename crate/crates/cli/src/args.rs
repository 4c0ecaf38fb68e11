use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use persona::corpus::Trait;
use persona::features::{BasePipeline, PipelineConfig, SentimentDenominator, DEFAULT_FEATURE_CAP};
use persona::ml::{CvOptions, SvmParams};

use crate::failure::{usage, CmdResult};

#[derive(Parser, Debug)]
#[command(name = "persona", version, about = "Big-Five personality classification over WordNet features")]
pub struct Cli {
    #[command(flatten)]
    pub resources: ResourceArgs,

    /// Only print warnings and errors on stderr.
    #[arg(long, short, global = true)]
    pub quiet: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct ResourceArgs {
    /// WordNet 3.0 database directory (index.* and data.* files).
    #[arg(long, env = "PERSONA_WORDNET_DIR", global = true, value_name = "DIR")]
    pub wordnet_dir: Option<PathBuf>,

    /// SentiWordNet 3.0 file; needed by --sentiment.
    #[arg(long, env = "PERSONA_SWN_PATH", global = true, value_name = "FILE")]
    pub sentiwordnet: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Users, sentences and words per user, and the non-standard word ratio.
    Stats(StatsArgs),
    /// Cross-validate one pipeline on one or more traits.
    Run(RunArgs),
    /// χ² ranking of features averaged over the training folds.
    TopFeatures(TopArgs),
    /// Accuracy of Selective.WSD for a list of top-K sizes.
    SweepSelective(SweepArgs),
    /// Best configuration per corpus and trait, and win counts.
    Compare(CompareArgs),
    /// Write a corpus feature matrix in sparse text form.
    Extract(ExtractArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CorpusFormat {
    /// `#AUTHID,TEXT,cEXT..cOPN` with y/n labels.
    Essays,
    /// `#AUTHID,STATUS,...,cEXT..cOPN`; statuses are joined per author.
    Mypersonality,
    /// Any CSV, described by a key=value file given with --columns.
    Columns,
    /// The tab-separated cache written by `extract --write-cache`.
    Cache,
}

impl CorpusFormat {
    pub fn name(self) -> &'static str {
        match self {
            CorpusFormat::Essays => "essays",
            CorpusFormat::Mypersonality => "mypersonality",
            CorpusFormat::Columns => "columns",
            CorpusFormat::Cache => "cache",
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct CorpusArgs {
    /// Corpus file, read as --corpus-format.
    #[arg(long, value_name = "FILE")]
    pub corpus: PathBuf,

    #[arg(long, value_enum, default_value = "essays")]
    pub corpus_format: CorpusFormat,

    /// Column map for --corpus-format columns.
    #[arg(long, value_name = "FILE")]
    pub columns: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct PipelineArgs {
    /// Base pipeline: word, wn-word, wn-mfs or wn-s-lesk.
    #[arg(long, value_parser = parse_pipeline, default_value = "word")]
    pub pipeline: BasePipeline,

    /// Add supersense counts of the chosen senses.
    #[arg(long)]
    pub supersense: bool,

    /// Add mean SentiWordNet scores of the chosen senses.
    #[arg(long)]
    pub sentiment: bool,

    /// Senses averaged for --sentiment: all of them or only polar ones.
    #[arg(long, value_parser = parse_denominator, default_value = "all")]
    pub sentiment_denominator: SentimentDenominator,

    /// Disambiguate only words among the K best χ² word features.
    #[arg(long, value_name = "K")]
    pub selective_topk: Option<usize>,

    /// χ² features kept per fold.
    #[arg(long, default_value_t = DEFAULT_FEATURE_CAP)]
    pub feature_cap: usize,
}

impl PipelineArgs {
    pub fn config(&self) -> CmdResult<PipelineConfig> {
        let config = PipelineConfig {
            base: self.pipeline,
            with_supersense: self.supersense,
            with_sentiment: self.sentiment,
            selective_topk: self.selective_topk,
            feature_cap: self.feature_cap,
            sentiment_denominator: self.sentiment_denominator,
        };
        config.validate().map_err(usage)?;
        Ok(config)
    }
}

#[derive(Args, Debug, Clone)]
pub struct CvArgs {
    /// Seeds the fold assignment and the SVM example order.
    #[arg(long, default_value_t = 42)]
    pub seed: u64,

    /// Cross-validation folds, stratified by label.
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(2..))]
    pub folds: u64,

    /// SVM regularization constant.
    #[arg(long, default_value_t = 1.0)]
    pub svm_c: f64,
}

impl CvArgs {
    pub fn options(&self) -> CvOptions {
        CvOptions {
            folds: self.folds as usize,
            seed: self.seed,
            svm: SvmParams {
                c: self.svm_c,
                seed: self.seed,
                ..SvmParams::default()
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Tsv,
}

#[derive(Args, Debug)]
pub struct StatsArgs {
    /// One or more corpus files, all in --corpus-format.
    #[arg(long, required = true, num_args = 1.., value_name = "FILE")]
    pub corpus: Vec<PathBuf>,

    #[arg(long, value_enum, default_value = "essays")]
    pub corpus_format: CorpusFormat,

    /// Column map for --corpus-format columns.
    #[arg(long, value_name = "FILE")]
    pub columns: Option<PathBuf>,

    #[arg(long, value_enum, default_value = "text")]
    pub format: TableFormat,
}

#[derive(Args, Debug)]
pub struct RunArgs {
    /// Corpus file, read as --corpus-format.
    #[arg(long, value_name = "FILE", required_unless_present = "manifest")]
    pub corpus: Option<PathBuf>,

    #[arg(long, value_enum, default_value = "essays")]
    pub corpus_format: CorpusFormat,

    /// Column map for --corpus-format columns.
    #[arg(long, value_name = "FILE")]
    pub columns: Option<PathBuf>,

    #[command(flatten)]
    pub pipeline: PipelineArgs,

    /// Comma-separated traits, e.g. cEXT,cOPN.
    #[arg(long, value_delimiter = ',', value_parser = parse_trait, default_value = "cEXT,cNEU,cAGR,cCON,cOPN")]
    pub traits: Vec<Trait>,

    #[command(flatten)]
    pub cv: CvArgs,

    /// Report file; the manifest is written next to it as `<FILE>.manifest`.
    #[arg(long, value_name = "FILE")]
    pub out: PathBuf,

    /// Re-run the configuration recorded in a manifest, checking resource
    /// and corpus checksums; other run flags are ignored.
    #[arg(long, value_name = "FILE")]
    pub manifest: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct TopArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,

    #[command(flatten)]
    pub pipeline: PipelineArgs,

    #[arg(long, value_parser = parse_trait)]
    pub r#trait: Trait,

    /// Rows to print.
    #[arg(long, default_value_t = 20)]
    pub n: usize,

    #[command(flatten)]
    pub cv: CvArgs,

    #[arg(long, value_enum, default_value = "text")]
    pub format: TableFormat,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,

    #[command(flatten)]
    pub pipeline: PipelineArgs,

    #[arg(long, value_parser = parse_trait)]
    pub r#trait: Trait,

    /// Comma-separated list of K values; `all` disambiguates every word.
    #[arg(long, default_value = "0,10,50,100,500,1000,all")]
    pub topk_list: String,

    #[command(flatten)]
    pub cv: CvArgs,

    /// CSV destination; stdout when absent.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    /// Directory of `*.tsv` reports, each optionally with its manifest.
    #[arg(long, value_name = "DIR")]
    pub reports: PathBuf,

    #[arg(long, value_enum, default_value = "text")]
    pub format: TableFormat,
}

#[derive(Args, Debug)]
pub struct ExtractArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,

    #[command(flatten)]
    pub pipeline: PipelineArgs,

    /// Trait whose labels rank words for --selective-topk.
    #[arg(long, value_parser = parse_trait)]
    pub r#trait: Option<Trait>,

    #[arg(long, value_enum, default_value = "tfidf")]
    pub weighting: Weighting,

    /// Sparse matrix destination.
    #[arg(long, value_name = "FILE")]
    pub out: PathBuf,

    /// Also write feature names, one per line in id order.
    #[arg(long, value_name = "FILE")]
    pub vocab: Option<PathBuf>,

    /// Also write the loaded corpus as a cache file.
    #[arg(long, value_name = "FILE")]
    pub write_cache: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Weighting {
    /// Raw counts.
    Counts,
    /// L2-normalized tf-idf fit on the whole corpus.
    Tfidf,
}

fn parse_pipeline(s: &str) -> Result<BasePipeline, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_denominator(s: &str) -> Result<SentimentDenominator, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_trait(s: &str) -> Result<Trait, String> {
    s.trim().parse().map_err(|e| format!("{e}"))
}
