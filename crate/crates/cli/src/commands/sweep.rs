use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;

use log::{info, warn};
use persona::corpus::labels_for;
use persona::features::FeatureExtractor;
use persona::ml::cross_validate;
use rayon::prelude::*;

use super::pct;
use crate::args::{ResourceArgs, SweepArgs};
use crate::failure::{computation, usage, usage_msg, CmdResult, Context};
use crate::load;

/// One point of the sweep; `None` is the All.WSD endpoint.
type TopK = Option<usize>;

pub fn parse_topk_list(list: &str) -> CmdResult<Vec<TopK>> {
    let mut out = Vec::new();
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if item.eq_ignore_ascii_case("all") {
            out.push(None);
        } else {
            let k = item
                .parse::<usize>()
                .map_err(|_| usage_msg(format!("--topk-list: {item:?} is neither a number nor \"all\"")))?;
            out.push(Some(k));
        }
    }
    if out.is_empty() {
        return Err(usage_msg("--topk-list is empty"));
    }
    Ok(out)
}

pub fn run(resources: &ResourceArgs, args: &SweepArgs) -> CmdResult {
    let mut config = args.pipeline.config()?;
    if !config.base.is_sense_bearing() {
        return Err(usage_msg(format!(
            "sweep-selective needs a sense-bearing pipeline (wn-mfs or wn-s-lesk), not {}",
            config.base
        )));
    }
    if config.selective_topk.is_some() {
        warn!("--selective-topk is ignored; the sweep sets K from --topk-list");
        config.selective_topk = None;
    }
    let requested = parse_topk_list(&args.topk_list)?;
    load::require_file(&args.corpus.corpus)?;
    let lexicon = load::lexicon(resources, config.with_sentiment)?;
    let corpus = load::corpus_from_args(&args.corpus)?;
    let extractor = FeatureExtractor::new(&lexicon, config).map_err(usage)?;
    let docs = load::annotate(&corpus, &extractor);
    let labels = labels_for(&corpus, args.r#trait);

    let vocabulary: BTreeSet<&str> = docs.iter().flat_map(|d| d.word_level_names()).collect();
    let points: Vec<TopK> = requested
        .iter()
        .map(|&k| match k {
            Some(k) if k > vocabulary.len() => {
                warn!("K = {k} exceeds the {} word-level features; using all", vocabulary.len());
                None
            }
            k => k,
        })
        .collect();

    let options = args.cv.options();
    let accuracies: Vec<f64> = points
        .par_iter()
        .map(|&k| {
            let point = FeatureExtractor::new(
                &lexicon,
                persona::features::PipelineConfig {
                    selective_topk: k,
                    ..config
                },
            )
            .map_err(usage)?;
            let e = cross_validate(&docs, &labels, &point, &options).map_err(computation)?;
            info!("K = {}: accuracy {}", label(k), pct(e.accuracy));
            Ok(e.accuracy)
        })
        .collect::<CmdResult<_>>()?;

    let mut csv = String::from("K,accuracy\n");
    for (k, a) in points.iter().zip(&accuracies) {
        let _ = writeln!(csv, "{},{a:.6}", label(*k));
    }
    match &args.out {
        Some(path) => fs::write(path, &csv).io_context(|| format!("writing {}", path.display()))?,
        None => print!("{csv}"),
    }

    let all = points.iter().position(Option::is_none).map(|i| accuracies[i]);
    let best = points
        .iter()
        .zip(&accuracies)
        .filter(|(k, _)| k.is_some())
        .max_by(|a, b| a.1.total_cmp(b.1));
    if let (Some(all), Some((k, a))) = (all, best) {
        eprintln!(
            "{} {}: best selective K = {} at {} vs all {}: selective {} all",
            args.r#trait,
            config.name(),
            label(*k),
            pct(*a),
            pct(all),
            if a >= &all { "matches or beats" } else { "trails" }
        );
    }
    Ok(())
}

fn label(k: TopK) -> String {
    k.map_or_else(|| "all".to_string(), |k| k.to_string())
}
