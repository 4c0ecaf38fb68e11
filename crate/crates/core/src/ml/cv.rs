//! Stratified k-fold cross-validation of one pipeline on one trait.
//!
//! Every learned component is fit on the training folds only: the
//! Selective.WSD top-K list, the χ² feature ranking and cap, the IDF table
//! and the SVM. Folds run in parallel; their results are merged in fold
//! order, so the outcome does not depend on scheduling.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use super::chi2::{rank_features, sort_ranked, RankedFeature};
use super::svm::{train_svm, SvmError, SvmParams};
use crate::features::{
    tfidf_apply, tfidf_fit, AnnotatedDocument, DocumentFeatures, FeatureExtractor, FeatureVocabulary, SparseVector,
};
use crate::wsd::TopK;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CvOptions {
    pub folds: usize,
    pub seed: u64,
    pub svm: SvmParams,
}

impl Default for CvOptions {
    fn default() -> Self {
        CvOptions {
            folds: 10,
            seed: 42,
            svm: SvmParams::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CvError {
    #[error("{documents} documents cannot form {folds} folds")]
    TooFewDocuments { documents: usize, folds: usize },
    #[error("{documents} documents but {labels} labels")]
    LengthMismatch { documents: usize, labels: usize },
    #[error(transparent)]
    Svm(#[from] SvmError),
}

/// Fold number of every document. Documents are shuffled once by `seed`,
/// then positives followed by negatives are dealt round-robin, so fold sizes
/// differ by at most one and each class is spread as evenly as possible.
pub fn stratified_folds(labels: &[bool], folds: usize, seed: u64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..labels.len()).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let (pos, neg): (Vec<usize>, Vec<usize>) = order.into_iter().partition(|&k| labels[k]);
    let mut assignment = vec![0usize; labels.len()];
    for (position, doc) in pos.into_iter().chain(neg).enumerate() {
        assignment[doc] = position % folds;
    }
    assignment
}

#[derive(Clone, Debug, PartialEq)]
pub struct FoldResult {
    /// Held-out documents, ascending.
    pub test: Vec<usize>,
    pub predictions: Vec<bool>,
    /// Most frequent training class; ties go to negative.
    pub majority_class: bool,
    pub correct: usize,
    pub majority_correct: usize,
}

impl FoldResult {
    pub fn accuracy(&self) -> f64 {
        ratio(self.correct, self.test.len())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Evaluation {
    /// Correct predictions over all held-out documents.
    pub accuracy: f64,
    /// Pooled accuracy of predicting each fold's training majority class.
    pub majority_accuracy: f64,
    /// Share of positive labels in the corpus.
    pub positive_rate: f64,
    pub folds: Vec<FoldResult>,
}

impl Evaluation {
    pub fn fold_accuracies(&self) -> Vec<f64> {
        self.folds.iter().map(FoldResult::accuracy).collect()
    }
}

fn ratio(a: usize, b: usize) -> f64 {
    if b == 0 {
        0.0
    } else {
        a as f64 / b as f64
    }
}

fn check(docs: usize, labels: usize, folds: usize) -> Result<(), CvError> {
    if docs != labels {
        return Err(CvError::LengthMismatch { documents: docs, labels });
    }
    if docs < folds || folds < 2 {
        return Err(CvError::TooFewDocuments { documents: docs, folds });
    }
    Ok(())
}

fn split(assignment: &[usize], fold: usize) -> (Vec<usize>, Vec<usize>) {
    (0..assignment.len()).partition(|&k| assignment[k] != fold)
}

/// The Selective.WSD list for one training split, or `None` when the
/// configuration is not selective.
pub fn fold_topk(docs: &[AnnotatedDocument], labels: &[bool], train: &[usize], k: Option<usize>) -> Option<TopK> {
    let k = k?;
    let names: Vec<Vec<&str>> = train.iter().map(|&i| docs[i].word_level_names()).collect();
    let y: Vec<bool> = train.iter().map(|&i| labels[i]).collect();
    let ranked = rank_features(&names, &y);
    Some(TopK::new(ranked.into_iter().take(k).map(|f| f.name)))
}

/// Counts every document against one training split.
fn fold_features(
    docs: &[AnnotatedDocument],
    labels: &[bool],
    train: &[usize],
    extractor: &FeatureExtractor,
    shared: Option<&[DocumentFeatures]>,
) -> Option<Vec<DocumentFeatures>> {
    if shared.is_some() {
        return None;
    }
    let topk = fold_topk(docs, labels, train, extractor.config().selective_topk);
    Some(docs.par_iter().map(|d| extractor.count(d, topk.as_ref())).collect())
}

/// χ² ranking of count features over one training split.
fn rank_split(features: &[DocumentFeatures], labels: &[bool], train: &[usize]) -> Vec<RankedFeature> {
    let names: Vec<Vec<&str>> = train
        .iter()
        .map(|&i| features[i].counts.keys().map(String::as_str).collect())
        .collect();
    let y: Vec<bool> = train.iter().map(|&i| labels[i]).collect();
    rank_features(&names, &y)
}

fn evaluate_fold(
    features: &[DocumentFeatures],
    labels: &[bool],
    train: &[usize],
    test: Vec<usize>,
    cap: usize,
    svm: &SvmParams,
) -> Result<FoldResult, CvError> {
    let ranked = rank_split(features, labels, train);
    let vocab = FeatureVocabulary::from_names(ranked.into_iter().take(cap).map(|f| f.name));
    let base = vocab.len() as u32;
    let raw = |k: usize| {
        SparseVector::from_entries(
            features[k]
                .counts
                .iter()
                .filter_map(|(name, &c)| vocab.id(name).map(|id| (id, f64::from(c))))
                .collect(),
        )
    };
    let train_raw: Vec<SparseVector> = train.iter().map(|&k| raw(k)).collect();
    let idf = tfidf_fit(&train_raw, vocab.len());
    let weigh = |k: usize, v: &SparseVector| {
        let mut w = tfidf_apply(v, &idf);
        if let Some(s) = features[k].sentiment {
            w.extend_tail(s.iter().enumerate().map(|(j, &x)| (base + j as u32, x)));
        }
        w
    };
    let x_train: Vec<SparseVector> = train.iter().zip(&train_raw).map(|(&k, v)| weigh(k, v)).collect();
    let y_train: Vec<bool> = train.iter().map(|&k| labels[k]).collect();
    let positives = y_train.iter().filter(|&&l| l).count();
    let majority_class = positives * 2 > y_train.len();

    let predictions: Vec<bool> = if positives == 0 || positives == y_train.len() {
        vec![y_train.first().copied().unwrap_or(false); test.len()]
    } else {
        let model = train_svm(&x_train, &y_train, base as usize + 3, svm)?;
        test.iter().map(|&k| model.predict(&weigh(k, &raw(k)))).collect()
    };
    let correct = test.iter().zip(&predictions).filter(|(&k, &p)| labels[k] == p).count();
    let majority_correct = test.iter().filter(|&&k| labels[k] == majority_class).count();
    Ok(FoldResult {
        test,
        predictions,
        majority_class,
        correct,
        majority_correct,
    })
}

/// Cross-validates `extractor`'s pipeline; `docs` are annotated with it.
pub fn cross_validate(
    docs: &[AnnotatedDocument],
    labels: &[bool],
    extractor: &FeatureExtractor,
    options: &CvOptions,
) -> Result<Evaluation, CvError> {
    check(docs.len(), labels.len(), options.folds)?;
    let config = extractor.config();
    let shared: Option<Vec<DocumentFeatures>> = match config.selective_topk {
        Some(_) => None,
        None => Some(docs.par_iter().map(|d| extractor.count(d, None)).collect()),
    };
    let assignment = stratified_folds(labels, options.folds, options.seed);
    let folds: Vec<FoldResult> = (0..options.folds)
        .into_par_iter()
        .map(|fold| {
            let (train, test) = split(&assignment, fold);
            let own = fold_features(docs, labels, &train, extractor, shared.as_deref());
            let features = own.as_deref().or(shared.as_deref()).expect("features for the fold");
            let svm = SvmParams {
                seed: options.svm.seed.wrapping_add(fold as u64),
                ..options.svm
            };
            evaluate_fold(features, labels, &train, test, config.feature_cap, &svm)
        })
        .collect::<Result<_, _>>()?;
    let n = labels.len();
    Ok(Evaluation {
        accuracy: ratio(folds.iter().map(|f| f.correct).sum(), n),
        majority_accuracy: ratio(folds.iter().map(|f| f.majority_correct).sum(), n),
        positive_rate: ratio(labels.iter().filter(|&&l| l).count(), n),
        folds,
    })
}

/// χ² of one feature averaged over the training splits of every fold.
#[derive(Clone, Debug, PartialEq)]
pub struct AveragedFeature {
    pub name: String,
    pub mean_chi2: f64,
    /// Mean of the signed statistic; its sign gives the class direction.
    pub mean_signed: f64,
    /// Mean of χ² / N, with N the training split size.
    pub mean_normalized: f64,
}

/// Ranks features per training split and averages over folds; a feature
/// absent from a split counts as 0 there. Sorted like [`rank_features`].
pub fn averaged_ranking(
    docs: &[AnnotatedDocument],
    labels: &[bool],
    extractor: &FeatureExtractor,
    options: &CvOptions,
) -> Result<Vec<AveragedFeature>, CvError> {
    check(docs.len(), labels.len(), options.folds)?;
    let shared: Option<Vec<DocumentFeatures>> = match extractor.config().selective_topk {
        Some(_) => None,
        None => Some(docs.par_iter().map(|d| extractor.count(d, None)).collect()),
    };
    let assignment = stratified_folds(labels, options.folds, options.seed);
    let per_fold: Vec<(usize, Vec<RankedFeature>)> = (0..options.folds)
        .into_par_iter()
        .map(|fold| {
            let (train, _) = split(&assignment, fold);
            let own = fold_features(docs, labels, &train, extractor, shared.as_deref());
            let features = own.as_deref().or(shared.as_deref()).expect("features for the fold");
            (train.len(), rank_split(features, labels, &train))
        })
        .collect();
    let mut sums: BTreeMap<String, [f64; 3]> = BTreeMap::new();
    for (n, ranked) in &per_fold {
        for f in ranked {
            let s = sums.entry(f.name.clone()).or_insert([0.0; 3]);
            s[0] += f.score;
            s[1] += f.signed();
            s[2] += f.score / *n as f64;
        }
    }
    let k = options.folds as f64;
    let mut ranked: Vec<RankedFeature> = sums
        .iter()
        .map(|(name, s)| RankedFeature {
            name: name.clone(),
            score: s[0] / k,
            positive: s[1] > 0.0,
        })
        .collect();
    sort_ranked(&mut ranked);
    Ok(ranked
        .into_iter()
        .map(|f| {
            let s = sums[&f.name];
            AveragedFeature {
                name: f.name,
                mean_chi2: s[0] / k,
                mean_signed: s[1] / k,
                mean_normalized: s[2] / k,
            }
        })
        .collect())
}
