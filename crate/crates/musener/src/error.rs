//! Crate-wide error type.

use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by corpus I/O, model I/O, training and matching.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// Malformed line in a corpus, model or schedule file.
    #[error("{path}:{line}: {message}")]
    Format {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("unknown label `{label}`")]
    UnknownLabel { label: String },

    #[error("unknown gazetteer name `{name}`")]
    UnknownGazetteer { name: String },

    #[error("gazetteer set incomplete: missing `{name}`")]
    MissingGazetteer { name: String },

    #[error("model file version mismatch: expected `{expected}`, found `{found}`")]
    VersionMismatch { expected: String, found: String },

    #[error("invalid split ratios: {reason}")]
    InvalidRatios { reason: String },

    #[error("corpus is empty")]
    EmptyCorpus,

    #[error("tweet `{id}` has no labels")]
    UnlabeledTweet { id: String },

    #[error("tweet `{id}` has no timestamp")]
    MissingTimestamp { id: String },

    #[error("invalid configuration: {reason}")]
    InvalidConfig { reason: String },

    #[error("bot tweet parse failed: {reason}")]
    BotParse { reason: String },

    #[error("span {start}..{end} out of range for {n_tokens} tokens")]
    SpanOutOfRange {
        start: usize,
        end: usize,
        n_tokens: usize,
    },

    #[error("spans {a_start}..{a_end} and {b_start}..{b_end} overlap")]
    SpanOverlap {
        a_start: usize,
        a_end: usize,
        b_start: usize,
        b_end: usize,
    },

    #[error("sequence length mismatch: {left} labels vs {right} tokens")]
    LengthMismatch { left: usize, right: usize },

    #[error("corpora do not align: {reason}")]
    CorpusMismatch { reason: String },

    #[error("timestamp delta {delta}s outside window t={window}s")]
    OutsideWindow { delta: i64, window: i64 },

    #[error("sample is empty")]
    EmptySample,

    #[error("non-finite weight for `{key}`")]
    NonFiniteWeight { key: String },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn format(path: impl Into<PathBuf>, line: usize, message: impl Into<String>) -> Self {
        Error::Format {
            path: path.into(),
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
