//! Tokenization, the IOB data model, corpus file I/O, deterministic splits,
//! and reconstruction of a broadcast schedule from "Now Playing" bot messages.

mod bot;
mod io;
mod iob;
mod split;
mod stats;
mod tokenize;

pub use bot::{build_schedule, parse_bot_tweet, read_schedule_jsonl, write_schedule_jsonl};
pub use io::{read_corpus, read_corpus_from, write_corpus, write_corpus_to};
pub use iob::{iob_from_spans, spans_from_iob};
pub use split::split_corpus;
pub use stats::{corpus_stats, CorpusStats};
pub use tokenize::{normalize_token, tokenize};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sentinel used in the POS and chunk columns when no tagger output is available.
pub const UNKNOWN_TAG: &str = "UNK";

/// A single token: original surface form plus POS and chunk tags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    pub pos: String,
    pub chunk: String,
}

impl Token {
    /// Token with `UNK` POS/chunk tags.
    pub fn untagged(surface: impl Into<String>) -> Self {
        Token {
            surface: surface.into(),
            pos: UNKNOWN_TAG.to_string(),
            chunk: UNKNOWN_TAG.to_string(),
        }
    }
}

/// The two entity classes recognized by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EntityType {
    #[serde(rename = "CONTRIBUTOR")]
    Contributor,
    #[serde(rename = "MUSICAL_WORK")]
    MusicalWork,
}

impl EntityType {
    pub const ALL: [EntityType; 2] = [EntityType::Contributor, EntityType::MusicalWork];

    pub fn as_str(&self) -> &'static str {
        match self {
            EntityType::Contributor => "CONTRIBUTOR",
            EntityType::MusicalWork => "MUSICAL_WORK",
        }
    }

    /// Short name used in report tables.
    pub fn short(&self) -> &'static str {
        match self {
            EntityType::Contributor => "C",
            EntityType::MusicalWork => "MW",
        }
    }
}

impl std::fmt::Display for EntityType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// IOB label. The declaration order is load-bearing: it drives tie-breaking
/// in both decoders, with `O` preferred first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Outside,
    BeginContributor,
    InsideContributor,
    BeginWork,
    InsideWork,
}

impl Label {
    pub const ALL: [Label; 5] = [
        Label::Outside,
        Label::BeginContributor,
        Label::InsideContributor,
        Label::BeginWork,
        Label::InsideWork,
    ];

    pub const COUNT: usize = 5;

    pub fn as_str(&self) -> &'static str {
        match self {
            Label::Outside => "O",
            Label::BeginContributor => "B-CONTR",
            Label::InsideContributor => "I-CONTR",
            Label::BeginWork => "B-WORK",
            Label::InsideWork => "I-WORK",
        }
    }

    pub fn parse(s: &str) -> Result<Label> {
        match s {
            "O" => Ok(Label::Outside),
            "B-CONTR" => Ok(Label::BeginContributor),
            "I-CONTR" => Ok(Label::InsideContributor),
            "B-WORK" => Ok(Label::BeginWork),
            "I-WORK" => Ok(Label::InsideWork),
            other => Err(Error::UnknownLabel {
                label: other.to_string(),
            }),
        }
    }

    /// Index into [`Label::ALL`].
    pub fn index(&self) -> usize {
        *self as usize
    }

    /// Entity type carried by a B-/I- label, `None` for `O`.
    pub fn entity_type(&self) -> Option<EntityType> {
        match self {
            Label::Outside => None,
            Label::BeginContributor | Label::InsideContributor => Some(EntityType::Contributor),
            Label::BeginWork | Label::InsideWork => Some(EntityType::MusicalWork),
        }
    }

    pub fn is_begin(&self) -> bool {
        matches!(self, Label::BeginContributor | Label::BeginWork)
    }

    pub fn begin(etype: EntityType) -> Label {
        match etype {
            EntityType::Contributor => Label::BeginContributor,
            EntityType::MusicalWork => Label::BeginWork,
        }
    }

    pub fn inside(etype: EntityType) -> Label {
        match etype {
            EntityType::Contributor => Label::InsideContributor,
            EntityType::MusicalWork => Label::InsideWork,
        }
    }
}

impl std::fmt::Display for Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A tokenized message with optional gold or predicted IOB labels.
///
/// Immutable by convention once constructed; all pipeline stages produce new
/// tweets rather than mutating shared ones.
#[derive(Debug, Clone, PartialEq)]
pub struct TaggedTweet {
    pub id: String,
    /// Posting time, seconds since the Unix epoch (UTC). Absent for corpora
    /// that never carried headers.
    pub timestamp: Option<i64>,
    pub tokens: Vec<Token>,
    /// When present, `labels.len() == tokens.len()`.
    pub labels: Option<Vec<Label>>,
}

impl TaggedTweet {
    pub fn new(id: impl Into<String>, timestamp: Option<i64>, tokens: Vec<Token>) -> Self {
        TaggedTweet {
            id: id.into(),
            timestamp,
            tokens,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<Label>) -> Self {
        debug_assert_eq!(labels.len(), self.tokens.len());
        self.labels = Some(labels);
        self
    }

    /// Tokenizes `text` and builds an unlabeled tweet.
    pub fn from_text(id: impl Into<String>, timestamp: Option<i64>, text: &str) -> Self {
        let tokens = tokenize(text).into_iter().map(Token::untagged).collect();
        TaggedTweet::new(id, timestamp, tokens)
    }

    pub fn surfaces(&self) -> Vec<&str> {
        self.tokens.iter().map(|t| t.surface.as_str()).collect()
    }

    /// Entity spans decoded from the tweet's labels.
    pub fn spans(&self) -> Result<Vec<EntitySpan>> {
        let labels = self.labels.as_ref().ok_or_else(|| Error::UnlabeledTweet {
            id: self.id.clone(),
        })?;
        Ok(spans_from_iob(labels, &self.tokens))
    }
}

/// A typed token range within one tweet; `start` inclusive, `end` exclusive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntitySpan {
    pub etype: EntityType,
    pub start: usize,
    pub end: usize,
    /// Space-joined surfaces of the covered tokens.
    pub surface: String,
}

impl EntitySpan {
    pub fn new(etype: EntityType, start: usize, end: usize, tokens: &[Token]) -> Self {
        debug_assert!(start < end && end <= tokens.len());
        let surface = tokens[start..end]
            .iter()
            .map(|t| t.surface.as_str())
            .collect::<Vec<_>>()
            .join(" ");
        EntitySpan {
            etype,
            start,
            end,
            surface,
        }
    }

    pub fn overlaps(&self, other: &EntitySpan) -> bool {
        self.start < other.end && other.start < self.end
    }
}

/// One parsed "Now Playing" record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScheduleEntry {
    /// Broadcast time, seconds since the Unix epoch (UTC).
    pub timestamp: i64,
    pub contributors: Vec<String>,
    pub work: String,
    /// Original message text.
    pub raw: String,
}

/// Time-ordered broadcast schedule.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Schedule {
    entries: Vec<ScheduleEntry>,
}

impl Schedule {
    /// Sorts by timestamp; ties keep input order.
    pub fn from_entries(mut entries: Vec<ScheduleEntry>) -> Self {
        entries.sort_by_key(|e| e.timestamp);
        Schedule { entries }
    }

    pub fn entries(&self) -> &[ScheduleEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries with `|entry.timestamp - ts| <= window_secs`, in schedule order.
    pub fn in_window(&self, ts: i64, window_secs: i64) -> &[ScheduleEntry] {
        let lo = self
            .entries
            .partition_point(|e| e.timestamp < ts - window_secs);
        let hi = self
            .entries
            .partition_point(|e| e.timestamp <= ts + window_secs);
        &self.entries[lo..hi]
    }
}

/// Formats a Unix timestamp as `YYYY-MM-DDTHH:MM:SSZ`.
pub fn format_timestamp(ts: i64) -> String {
    use chrono::{TimeZone, Utc};
    match Utc.timestamp_opt(ts, 0).single() {
        Some(dt) => dt.format("%Y-%m-%dT%H:%M:%SZ").to_string(),
        None => ts.to_string(),
    }
}

/// Parses an ISO-8601 / RFC 3339 timestamp into Unix seconds.
pub fn parse_timestamp(s: &str) -> std::result::Result<i64, String> {
    chrono::DateTime::parse_from_rfc3339(s)
        .map(|dt| dt.timestamp())
        .map_err(|e| format!("invalid timestamp `{s}`: {e}"))
}
