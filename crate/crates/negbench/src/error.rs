//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("caption is empty or whitespace-only")]
    EmptyCaption,

    #[error("caption has no negatable verb, auxiliary, or 'with' site")]
    NoNegatableSite,

    #[error("negation cue '{cue}' has no safe affirmative rewrite: {reason}")]
    UnresolvableCue { cue: String, reason: String },

    #[error("composed query matched no videos after set difference")]
    EmptyMatch,

    #[error("duplicate caption id '{0}'")]
    DuplicateId(String),

    #[error("captions file contains no captions")]
    EmptyCorpus,

    #[error("video '{0}' has no frame rows to pool")]
    MissingFrames(String),

    #[error("zero-norm vector has no direction")]
    ZeroNorm,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },

    #[error("query '{0}' contains no negation cue")]
    NoCue(String),

    #[error("query '{0}' has an empty relevant set")]
    NoGroundTruth(String),

    #[error("negated query '{qid}' references unknown origin '{origin}'")]
    MissingOrigin { qid: String, origin: String },

    #[error("no ranking found for {} quer{}: {}", .0.len(), if .0.len() == 1 { "y" } else { "ies" }, .0.join(", "))]
    MissingRanking(Vec<String>),

    #[error("triplet loss needs at least 2 samples per batch")]
    NoNegatives,

    #[error("invalid margins: require {0}")]
    InvalidMargins(String),

    #[error("training diverged at epoch {epoch}: {what}")]
    TrainDiverged { epoch: usize, what: String },

    #[error("unknown POS tag '{0}'")]
    UnknownTag(String),

    #[error("bad chunk grammar: {0}")]
    BadGrammar(String),

    #[error("malformed {format} input at line {line}: {msg}")]
    Format {
        format: &'static str,
        line: usize,
        msg: String,
    },

    #[error("bad feature file: {0}")]
    BadFeatureFile(String),

    #[error("invalid config: {0}")]
    BadConfig(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
