//! Financial news sentiment toolkit.
//!
//! The crate covers the full batch pipeline for headline-level sentiment of
//! company news:
//!
//! - [`corpus`]: document ingestion (JSONL/CSV) and the deterministic text
//!   normalization chain (tokenize, contractions, stopwords, rule-based
//!   lemmatizer).
//! - [`vectorizer`]: TF-IDF vocabulary fitting and sparse document vectors.
//! - [`topics`]: NMF topic model over the document-term matrix, used to
//!   filter a corpus down to finance-related documents.
//! - [`lexicon`]: categorized sentiment dictionary with unigram/bigram
//!   entries, synonym expansion, and the hinge-split headline predictor.
//! - [`boost`]: gradient-boosted decision trees (binary logistic) over
//!   sparse TF-IDF headline features, with feature-importance reporting.
//! - [`annotations`]: human label ingestion, majority-vote ground truth,
//!   and Fleiss' kappa inter-annotator agreement.
//! - [`eval`]: confusion matrices, accuracy/recall/F1, the neutral-band
//!   adapter for external continuous scores, and method comparison.
//! - [`market`]: daily sentiment aggregation, share-price alignment, the
//!   directional report, and SVG chart emission.
//!
//! Numeric kernels are generic over the scalar type via [`Real`]; the
//! aliases below fix `f64` for ordinary use.

pub mod annotations;
pub mod boost;
pub mod corpus;
pub mod eval;
pub mod lexicon;
pub mod market;
pub mod scalar;
pub mod topics;
pub mod vectorizer;

pub use scalar::Real;

/// `f64` instantiations of the scalar-generic core types.
pub type SparseVector64 = vectorizer::SparseVector<f64>;
pub type TfidfModel64 = vectorizer::TfidfModel<f64>;
pub type TopicModel64 = topics::TopicModel<f64>;
pub type BoostParams64 = boost::BoostParams<f64>;
pub type Ensemble64 = boost::Ensemble<f64>;
pub type Metrics64 = eval::Metrics<f64>;
pub type PriceSeries64 = market::PriceSeries<f64>;
