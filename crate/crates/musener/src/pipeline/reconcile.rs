//! Merging model predictions with schedule-derived predictions.

use crate::corpus::{iob_from_spans, EntitySpan, EntityType, TaggedTweet};
use crate::error::{Error, Result};

/// How the "model first, schedule as fallback" rule is applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Granularity {
    /// Schedule spans are used only when the model produced no span at all.
    Tweet,
    /// Decided independently per entity type; schedule spans that overlap a
    /// kept model span are dropped.
    #[default]
    Type,
}

impl Granularity {
    pub fn as_str(&self) -> &'static str {
        match self {
            Granularity::Tweet => "tweet",
            Granularity::Type => "type",
        }
    }
}

impl std::str::FromStr for Granularity {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "tweet" => Ok(Granularity::Tweet),
            "type" => Ok(Granularity::Type),
            other => Err(format!("unknown granularity `{other}` (expected tweet|type)")),
        }
    }
}

/// Reconciles the two span lists of one tweet, model taking priority.
/// Output is sorted by start and non-overlapping (given non-overlapping
/// inputs).
pub fn reconcile(
    model_spans: &[EntitySpan],
    schedule_spans: &[EntitySpan],
    granularity: Granularity,
) -> Vec<EntitySpan> {
    let mut merged: Vec<EntitySpan> = match granularity {
        Granularity::Tweet => {
            if model_spans.is_empty() {
                schedule_spans.to_vec()
            } else {
                model_spans.to_vec()
            }
        }
        Granularity::Type => {
            let mut out: Vec<EntitySpan> = model_spans.to_vec();
            for etype in EntityType::ALL {
                if model_spans.iter().any(|s| s.etype == etype) {
                    continue;
                }
                for span in schedule_spans.iter().filter(|s| s.etype == etype) {
                    if model_spans.iter().all(|m| !m.overlaps(span)) {
                        out.push(span.clone());
                    }
                }
            }
            out
        }
    };
    merged.sort_by_key(|s| (s.start, s.end));
    merged
}

/// Reconciles two predicted corpora tweet by tweet, returning a new corpus
/// with the merged labels. Inputs must align on count, ids (where present)
/// and token counts.
pub fn reconcile_corpora(
    model_pred: &[TaggedTweet],
    schedule_pred: &[TaggedTweet],
    granularity: Granularity,
) -> Result<Vec<TaggedTweet>> {
    if model_pred.len() != schedule_pred.len() {
        return Err(Error::CorpusMismatch {
            reason: format!(
                "{} model tweets vs {} schedule tweets",
                model_pred.len(),
                schedule_pred.len()
            ),
        });
    }
    let mut out = Vec::with_capacity(model_pred.len());
    for (i, (m, s)) in model_pred.iter().zip(schedule_pred).enumerate() {
        if !m.id.is_empty() && !s.id.is_empty() && m.id != s.id {
            return Err(Error::CorpusMismatch {
                reason: format!("tweet {i}: model id `{}` vs schedule id `{}`", m.id, s.id),
            });
        }
        if m.tokens.len() != s.tokens.len() {
            return Err(Error::CorpusMismatch {
                reason: format!(
                    "tweet {i}: {} model tokens vs {} schedule tokens",
                    m.tokens.len(),
                    s.tokens.len()
                ),
            });
        }
        let merged = reconcile(&m.spans()?, &s.spans()?, granularity);
        let labels = iob_from_spans(&merged, m.tokens.len())?;
        out.push(m.clone().with_labels(labels));
    }
    Ok(out)
}
