//! Error type shared across the library.

use std::path::PathBuf;

/// Errors produced by corpus loading, feature extraction, model training
/// and persistence.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("file not found: {0}")]
    FileNotFound(PathBuf),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("manifest is missing required column `{0}`")]
    MissingColumn(String),

    #[error("empty document")]
    EmptyDocument,

    #[error("empty record list")]
    EmptyRecordList,

    #[error("split fractions must sum to 1 (got {0})")]
    BadFractions(f64),

    #[error("empty corpus")]
    EmptyCorpus,

    #[error("n-gram order must be in 1..=5 (got {0})")]
    BadNgramOrder(usize),

    #[error("smoothing constant must be > 0 (got {0})")]
    BadSmoothing(f64),

    #[error("token `{0}` absent from vocabulary and smoothing is disabled")]
    UnknownToken(String),

    #[error("token count mismatch for doc `{doc_id}`: {expected} log-probs, {actual} tokens")]
    TokenCountMismatch {
        doc_id: String,
        expected: usize,
        actual: usize,
    },

    #[error("no log-probabilities recorded for doc `{0}`")]
    UnknownDocId(String),

    #[error("image {path}: {reason}")]
    BadImage { path: PathBuf, reason: String },

    #[error("image decode failed for {path}: {source}")]
    ImageDecode {
        path: PathBuf,
        #[source]
        source: image::ImageError,
    },

    #[error("no salient region (degenerate saliency map)")]
    DegenerateSaliency,

    #[error("figure or ground region is empty")]
    EmptyRegion,

    #[error("feature matrix: {0}")]
    BadMatrix(String),

    #[error("labels must be binary (found {0})")]
    NonBinaryLabel(f64),

    #[error("training diverged (loss is not finite); try a smaller step size")]
    Diverged,

    #[error("schema mismatch at column {index}: model expects `{expected}`, got `{actual}`")]
    SchemaMismatch {
        index: usize,
        expected: String,
        actual: String,
    },

    #[error("prediction/truth length mismatch: {predictions} vs {truth}")]
    LengthMismatch { predictions: usize, truth: usize },

    #[error("model file {path}: {reason}")]
    BadModelFile { path: PathBuf, reason: String },

    #[error("unsupported model format version {found} (supported: {supported})")]
    ModelVersion { found: u32, supported: u32 },

    #[error("anova requires >= 2 groups with >= 2 samples each")]
    BadAnovaInput,

    #[error("class summary requires both classes present")]
    SingleClass,

    #[error("samples_per_feature must be >= 10 (got {0})")]
    TooFewShapSamples(usize),

    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
