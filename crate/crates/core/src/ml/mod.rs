//! χ² feature ranking, the linear SVM, cross-validation and reports.

mod chi2;
mod cv;
mod report;
mod svm;

pub use chi2::{chi2, rank_features, sort_ranked, ContingencyTable, RankedFeature};
pub use cv::{
    averaged_ranking, cross_validate, fold_topk, stratified_folds, AveragedFeature, CvError, CvOptions, Evaluation,
    FoldResult,
};
pub use report::{compare, read_report, write_report, Comparison, EvalRow, ReportError, REPORT_HEADER};
pub use svm::{optimal_bias, primal_objective, train_svm, LinearModel, SvmError, SvmParams, TrainingSummary};
