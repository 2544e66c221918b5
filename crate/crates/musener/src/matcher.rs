//! Schedule matching: candidate generation over a time window, token-overlap
//! string similarity with stop-word exclusion, time-proximity weighting,
//! threshold filtering, and projection onto tweet token spans.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::corpus::{normalize_token, tokenize, EntitySpan, EntityType, Schedule, ScheduleEntry, TaggedTweet};
use crate::error::{Error, Result};

/// Default weight of the string score in the final combination.
pub const DEFAULT_ALPHA: f64 = 0.7;

/// Bundled stop list. `no`, `op` and single letters are kept out of it:
/// they carry opus/number/key information in classical titles.
pub fn default_stopwords() -> BTreeSet<String> {
    [
        "the", "a", "an", "in", "of", "for", "and", "to", "on", "at", "by", "with", "from", "is",
        "it", "his", "her",
    ]
    .into_iter()
    .map(str::to_string)
    .collect()
}

/// Matching thresholds: `window_secs` is the CLI's `t`, `work_threshold`
/// is `w`, `contributor_threshold` is `c`.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchConfig {
    pub window_secs: i64,
    pub work_threshold: f64,
    pub contributor_threshold: f64,
    pub alpha: f64,
    pub stopwords: BTreeSet<String>,
}

impl Default for MatchConfig {
    fn default() -> Self {
        MatchConfig {
            window_secs: 1200,
            work_threshold: 0.5,
            contributor_threshold: 0.5,
            alpha: DEFAULT_ALPHA,
            stopwords: default_stopwords(),
        }
    }
}

impl MatchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.window_secs <= 0 {
            return Err(Error::InvalidConfig {
                reason: format!("time window t must be positive, got {}", self.window_secs),
            });
        }
        for (name, v) in [
            ("w", self.work_threshold),
            ("c", self.contributor_threshold),
            ("alpha", self.alpha),
        ] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::InvalidConfig {
                    reason: format!("{name} must be in [0, 1], got {v}"),
                });
            }
        }
        Ok(())
    }

    fn threshold(&self, etype: EntityType) -> f64 {
        match etype {
            EntityType::Contributor => self.contributor_threshold,
            EntityType::MusicalWork => self.work_threshold,
        }
    }
}

/// A schedule-derived entity considered for one tweet, with its scores.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Candidate {
    pub etype: EntityType,
    pub entity_text: String,
    /// Normalized non-stopword entity tokens (the denominator set).
    pub entity_tokens: BTreeSet<String>,
    /// Timestamp of the schedule entry this candidate came from.
    pub entry_timestamp: i64,
    pub s_string: f64,
    pub s_time: f64,
    pub s_final: f64,
}

/// Schedule entries whose timestamp lies within `t` seconds of `tweet_ts`,
/// on either side, in schedule order.
pub fn candidate_tracks(schedule: &Schedule, tweet_ts: i64, t: i64) -> Vec<&ScheduleEntry> {
    schedule.in_window(tweet_ts, t).iter().collect()
}

/// Token-overlap similarity: the share of the entity's non-stopword tokens
/// that occur in the tweet's token set. An entity with no tokens left after
/// stop-word removal scores 0.
pub fn string_match_score(
    entity_tokens: &BTreeSet<String>,
    tweet_tokens: &BTreeSet<String>,
    stopwords: &BTreeSet<String>,
) -> f64 {
    let kept: Vec<&String> = entity_tokens.iter().filter(|t| !stopwords.contains(*t)).collect();
    if kept.is_empty() {
        return 0.0;
    }
    let shared = kept.iter().filter(|t| tweet_tokens.contains(**t)).count();
    shared as f64 / kept.len() as f64
}

/// Linear time decay: 1 at zero offset, 0 at the window edge.
pub fn time_proximity(entry_ts: i64, tweet_ts: i64, t: i64) -> Result<f64> {
    let delta = (entry_ts - tweet_ts).abs();
    if delta > t {
        return Err(Error::OutsideWindow { delta, window: t });
    }
    Ok(1.0 - delta as f64 / t as f64)
}

/// Spans plus the retained candidates that produced them, for diagnostics.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatchOutcome {
    pub spans: Vec<EntitySpan>,
    pub candidates: Vec<Candidate>,
}

/// Normalized token set of an entity string (dedup, empties dropped).
pub fn entity_token_set(text: &str) -> BTreeSet<String> {
    tokenize(text)
        .iter()
        .map(|t| normalize_token(t))
        .filter(|t| !t.is_empty())
        .collect()
}

/// Runs the full matching algorithm for one tweet:
/// window filter, per-candidate string score, threshold filter on the string
/// score (`c` for contributors, `w` for works), final score combination, and
/// projection of surviving candidates onto non-overlapping token spans.
pub fn match_tweet(
    tweet: &TaggedTweet,
    schedule: &Schedule,
    config: &MatchConfig,
) -> Result<MatchOutcome> {
    config.validate()?;
    let tweet_ts = tweet.timestamp.ok_or_else(|| Error::MissingTimestamp {
        id: tweet.id.clone(),
    })?;

    let normalized: Vec<String> = tweet
        .tokens
        .iter()
        .map(|t| normalize_token(&t.surface))
        .collect();
    let tweet_set: BTreeSet<String> = normalized.iter().filter(|t| !t.is_empty()).cloned().collect();

    let mut candidates = Vec::new();
    for entry in candidate_tracks(schedule, tweet_ts, config.window_secs) {
        let mut texts: Vec<(EntityType, &str)> = entry
            .contributors
            .iter()
            .map(|name| (EntityType::Contributor, name.as_str()))
            .collect();
        texts.push((EntityType::MusicalWork, entry.work.as_str()));
        for (etype, text) in texts {
            let entity_tokens: BTreeSet<String> = entity_token_set(text)
                .into_iter()
                .filter(|t| !config.stopwords.contains(t))
                .collect();
            let s_string = string_match_score(&entity_tokens, &tweet_set, &config.stopwords);
            if s_string < config.threshold(etype) {
                continue;
            }
            let s_time = time_proximity(entry.timestamp, tweet_ts, config.window_secs)?;
            candidates.push(Candidate {
                etype,
                entity_text: text.to_string(),
                entity_tokens,
                entry_timestamp: entry.timestamp,
                s_string,
                s_time,
                s_final: config.alpha * s_string + (1.0 - config.alpha) * s_time,
            });
        }
    }

    let spans = project_spans(tweet, &normalized, &candidates, config);
    Ok(MatchOutcome { spans, candidates })
}

/// Maximal contiguous runs of tweet tokens drawn from a candidate's token
/// set, each anchored by at least one non-stopword token. Overlaps between
/// candidates are resolved by higher final score, then earlier entry
/// timestamp, then Contributor before Musical Work.
fn project_spans(
    tweet: &TaggedTweet,
    normalized: &[String],
    candidates: &[Candidate],
    config: &MatchConfig,
) -> Vec<EntitySpan> {
    let mut proposals: Vec<(EntitySpan, &Candidate)> = Vec::new();
    for candidate in candidates {
        let mut start = None;
        for i in 0..=normalized.len() {
            let inside = i < normalized.len()
                && !normalized[i].is_empty()
                && candidate.entity_tokens.contains(&normalized[i]);
            match (inside, start) {
                (true, None) => start = Some(i),
                (false, Some(s)) => {
                    let anchored = normalized[s..i]
                        .iter()
                        .any(|t| !config.stopwords.contains(t));
                    if anchored {
                        proposals
                            .push((EntitySpan::new(candidate.etype, s, i, &tweet.tokens), candidate));
                    }
                    start = None;
                }
                _ => {}
            }
        }
    }

    proposals.sort_by(|(a, ca), (b, cb)| {
        cb.s_final
            .total_cmp(&ca.s_final)
            .then(ca.entry_timestamp.cmp(&cb.entry_timestamp))
            .then(a.etype.cmp(&b.etype))
            .then(a.start.cmp(&b.start))
            .then(a.end.cmp(&b.end))
    });
    let mut kept: Vec<EntitySpan> = Vec::new();
    for (span, _) in proposals {
        if kept.iter().all(|k| !k.overlaps(&span)) {
            kept.push(span);
        }
    }
    kept.sort_by_key(|s| (s.start, s.end));
    kept
}
