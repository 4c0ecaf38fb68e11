use std::fs;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use log::{info, warn};
use persona::corpus::labels_for;
use persona::features::FeatureExtractor;
use persona::ml::{cross_validate, write_report, CvOptions, EvalRow, SvmParams};
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use super::{aligned, pct};
use crate::args::{ResourceArgs, RunArgs};
use crate::failure::{computation, usage, usage_msg, CmdResult, Context};
use crate::load;
use crate::manifest::RunManifest;

pub fn run(resources: &ResourceArgs, args: &RunArgs) -> CmdResult {
    let (manifest, expected_report) = match &args.manifest {
        Some(path) => {
            let m = replay_manifest(path)?;
            let expected = m.report_sha256.clone();
            (m, Some(expected))
        }
        None => (manifest_from_args(resources, args)?, None),
    };
    let mut manifest = manifest;
    let evaluated = evaluate(&manifest)?;
    let rows: Vec<EvalRow> = evaluated.iter().map(|(r, _)| r.clone()).collect();

    let mut report = Vec::new();
    write_report(&rows, &mut report).map_err(usage)?;
    manifest.report_sha256 = hex::encode(Sha256::digest(&report));
    manifest.timestamp = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs());
    fs::write(&args.out, &report).io_context(|| format!("writing {}", args.out.display()))?;
    let sidecar = manifest_path(&args.out);
    fs::write(&sidecar, manifest.to_text()).io_context(|| format!("writing {}", sidecar.display()))?;
    info!("wrote {} and {}", args.out.display(), sidecar.display());

    print_summary(&evaluated);
    match expected_report {
        Some(expected) if expected != manifest.report_sha256 => Err(computation(anyhow::anyhow!(
            "regenerated report {} differs from the one recorded in the manifest",
            args.out.display()
        ))),
        Some(_) => {
            info!("report matches the manifest");
            Ok(())
        }
        None => Ok(()),
    }
}

pub fn manifest_path(report: &Path) -> PathBuf {
    let mut name = report.as_os_str().to_owned();
    name.push(".manifest");
    PathBuf::from(name)
}

fn manifest_from_args(resources: &ResourceArgs, args: &RunArgs) -> CmdResult<RunManifest> {
    let config = args.pipeline.config()?;
    let corpus = args.corpus.clone().expect("clap requires --corpus without --manifest");
    load::require_file(&corpus)?;
    let wordnet_dir = load::wordnet_dir(resources)?.to_path_buf();
    let sentiwordnet = if config.with_sentiment {
        Some(load::sentiwordnet_path(resources)?.to_path_buf())
    } else {
        None
    };
    let mut m = RunManifest {
        toolkit_version: env!("CARGO_PKG_VERSION").to_string(),
        config,
        traits: args.traits.clone(),
        seed: args.cv.seed,
        folds: args.cv.folds,
        svm_c: args.cv.svm_c,
        corpus,
        corpus_format: args.corpus_format,
        columns: args.columns.clone(),
        corpus_sha256: String::new(),
        wordnet_dir,
        wordnet_sha256: String::new(),
        sentiwordnet,
        sentiwordnet_sha256: None,
        report_sha256: String::new(),
        timestamp: 0,
    };
    let (corpus_sha, wordnet_sha, swn_sha) = checksums(&m)?;
    m.corpus_sha256 = corpus_sha;
    m.wordnet_sha256 = wordnet_sha;
    m.sentiwordnet_sha256 = swn_sha;
    Ok(m)
}

fn replay_manifest(path: &Path) -> CmdResult<RunManifest> {
    load::require_file(path)?;
    let text = fs::read_to_string(path).io_context(|| format!("reading {}", path.display()))?;
    let m = RunManifest::parse(&text).map_err(|e| usage(e.context(format!("parsing {}", path.display()))))?;
    if m.toolkit_version != env!("CARGO_PKG_VERSION") {
        warn!(
            "manifest was written by version {}, this is {}",
            m.toolkit_version,
            env!("CARGO_PKG_VERSION")
        );
    }
    let (corpus_sha, wordnet_sha, swn_sha) = checksums(&m)?;
    let mut changed = Vec::new();
    if corpus_sha != m.corpus_sha256 {
        changed.push(m.corpus.display().to_string());
    }
    if wordnet_sha != m.wordnet_sha256 {
        changed.push(m.wordnet_dir.display().to_string());
    }
    if swn_sha != m.sentiwordnet_sha256 {
        changed.push(m.sentiwordnet.as_ref().map_or_else(String::new, |p| p.display().to_string()));
    }
    if !changed.is_empty() {
        return Err(usage_msg(format!(
            "checksum mismatch against {}: {}",
            path.display(),
            changed.join(", ")
        )));
    }
    Ok(m)
}

fn checksums(m: &RunManifest) -> CmdResult<(String, String, Option<String>)> {
    load::require_file(&m.corpus)?;
    let mut corpus = load::sha256_file(&m.corpus)?;
    if let Some(columns) = &m.columns {
        load::require_file(columns)?;
        corpus = format!("{corpus}+{}", load::sha256_file(columns)?);
    }
    if !m.wordnet_dir.is_dir() {
        return Err(usage_msg(format!("WordNet directory {} does not exist", m.wordnet_dir.display())));
    }
    let wordnet = load::sha256_dir(&m.wordnet_dir)?;
    let swn = match &m.sentiwordnet {
        Some(p) => {
            load::require_file(p)?;
            Some(load::sha256_file(p)?)
        }
        None => None,
    };
    Ok((corpus, wordnet, swn))
}

pub fn cv_options(m: &RunManifest) -> CvOptions {
    CvOptions {
        folds: m.folds as usize,
        seed: m.seed,
        svm: SvmParams {
            c: m.svm_c,
            seed: m.seed,
            ..SvmParams::default()
        },
    }
}

/// Report rows with the positive-label rate of each trait.
fn evaluate(m: &RunManifest) -> CmdResult<Vec<(EvalRow, f64)>> {
    let resources = ResourceArgs {
        wordnet_dir: Some(m.wordnet_dir.clone()),
        sentiwordnet: m.sentiwordnet.clone(),
    };
    let lexicon = load::lexicon(&resources, m.config.with_sentiment)?;
    let corpus = load::corpus(&m.corpus, m.corpus_format, m.columns.as_deref())?;
    let extractor = FeatureExtractor::new(&lexicon, m.config).map_err(usage)?;
    let docs = load::annotate(&corpus, &extractor);
    let options = cv_options(m);
    m.traits
        .par_iter()
        .map(|&t| {
            let labels = labels_for(&corpus, t);
            let e = cross_validate(&docs, &labels, &extractor, &options).map_err(computation)?;
            info!(
                "{t} {}: accuracy {} (majority {})",
                m.config.name(),
                pct(e.accuracy),
                pct(e.majority_accuracy)
            );
            let row = EvalRow {
                personality_trait: t,
                config: m.config.name(),
                accuracy: e.accuracy,
                majority: e.majority_accuracy,
                fold_accuracies: e.fold_accuracies(),
                seed: m.seed,
                feature_cap: m.config.feature_cap,
            };
            Ok((row, e.positive_rate))
        })
        .collect()
}

fn print_summary(evaluated: &[(EvalRow, f64)]) {
    let mut table = vec![vec![
        "trait".to_string(),
        "config".to_string(),
        "accuracy (majority)".to_string(),
        "positive%".to_string(),
    ]];
    for (r, positive) in evaluated {
        table.push(vec![
            r.personality_trait.to_string(),
            r.config.clone(),
            format!("{} ({})", pct(r.accuracy), pct(r.majority)),
            pct(*positive),
        ]);
    }
    print!("{}", aligned(&table));
}
