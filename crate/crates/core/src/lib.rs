//! Lexical-semantic personality classification.
//!
//! The crate turns user texts into bags of WordNet-grounded features (words,
//! senses, supersenses, SentiWordNet polarity), ranks them with χ², weights
//! them with TF-IDF and classifies each Big Five trait with a linear SVM under
//! 10-fold cross-validation.
//!
//! Modules, bottom-up:
//!
//! - [`lexicon`]: WordNet 3.0 and SentiWordNet 3.0 parsing and queries.
//! - [`textproc`]: tokenization and the non-standard word ratio.
//! - [`wsd`]: most-frequent-sense, Simplified Lesk and Selective.WSD.
//! - [`features`]: pipeline configurations, feature extraction, TF-IDF.
//! - [`ml`]: χ² ranking, linear SVM, cross-validation and reports.
//! - [`corpus`]: labeled corpus loading and corpus statistics.

pub mod lexicon;
pub mod textproc;
pub mod wsd;
pub mod features;
pub mod ml;
pub mod corpus;
