use std::fs::{self, File};
use std::io::{BufWriter, Write};

use log::info;
use persona::corpus::{labels_for, write_cache};
use persona::features::{tfidf_apply, tfidf_fit, FeatureExtractor, FeatureMatrix, FeatureVocabulary, SparseVector, SENTIMENT_FEATURES};
use persona::ml::fold_topk;
use rayon::prelude::*;

use crate::args::{ExtractArgs, ResourceArgs, Weighting};
use crate::failure::{usage, usage_msg, CmdResult, Context};
use crate::load;

pub fn run(resources: &ResourceArgs, args: &ExtractArgs) -> CmdResult {
    let config = args.pipeline.config()?;
    if config.selective_topk.is_some() && args.r#trait.is_none() {
        return Err(usage_msg("--selective-topk ranks words by a trait's labels; pass --trait"));
    }
    load::require_file(&args.corpus.corpus)?;
    let lexicon = load::lexicon(resources, config.with_sentiment)?;
    let corpus = load::corpus_from_args(&args.corpus)?;
    if let Some(path) = &args.write_cache {
        let file = File::create(path).io_context(|| format!("creating {}", path.display()))?;
        let mut out = BufWriter::new(file);
        write_cache(&corpus, &mut out)
            .and_then(|_| out.flush())
            .io_context(|| format!("writing {}", path.display()))?;
    }
    let extractor = FeatureExtractor::new(&lexicon, config).map_err(usage)?;
    let docs = load::annotate(&corpus, &extractor);
    let topk = args.r#trait.and_then(|t| {
        let labels = labels_for(&corpus, t);
        let all: Vec<usize> = (0..docs.len()).collect();
        fold_topk(&docs, &labels, &all, config.selective_topk)
    });
    let features: Vec<_> = docs.par_iter().map(|d| extractor.count(d, topk.as_ref())).collect();

    let names: std::collections::BTreeSet<&str> =
        features.iter().flat_map(|f| f.counts.keys().map(String::as_str)).collect();
    let mut vocabulary = FeatureVocabulary::from_names(names);
    let base = vocabulary.len() as u32;
    let counts: Vec<SparseVector> = features
        .iter()
        .map(|f| {
            SparseVector::from_entries(
                f.counts
                    .iter()
                    .map(|(n, &c)| (vocabulary.id(n).expect("name in vocabulary"), f64::from(c)))
                    .collect(),
            )
        })
        .collect();
    let idf = (args.weighting == Weighting::Tfidf).then(|| tfidf_fit(&counts, vocabulary.len()));
    if config.with_sentiment {
        for name in SENTIMENT_FEATURES {
            vocabulary.insert(name);
        }
    }

    let mut matrix = FeatureMatrix {
        vocabulary,
        ..FeatureMatrix::default()
    };
    for ((doc, f), raw) in corpus.iter().zip(&features).zip(counts) {
        let mut row = match &idf {
            Some(idf) => tfidf_apply(&raw, idf),
            None => raw,
        };
        if let Some(s) = f.sentiment {
            row.extend_tail(s.iter().enumerate().map(|(j, &x)| (base + j as u32, x)));
        }
        matrix.push(doc.author_id.clone(), row);
    }

    let file = File::create(&args.out).io_context(|| format!("creating {}", args.out.display()))?;
    let mut out = BufWriter::new(file);
    matrix
        .write_sparse_text(&mut out)
        .and_then(|_| out.flush())
        .io_context(|| format!("writing {}", args.out.display()))?;
    if let Some(path) = &args.vocab {
        let text: String = matrix.vocabulary.names().iter().map(|n| format!("{n}\n")).collect();
        fs::write(path, text).io_context(|| format!("writing {}", path.display()))?;
    }
    info!(
        "wrote {} documents over {} features to {}",
        matrix.len(),
        matrix.vocabulary.len(),
        args.out.display()
    );
    Ok(())
}
