//! Entity-level evaluation with exact span matching.

use serde::Serialize;

use crate::corpus::{EntitySpan, EntityType, TaggedTweet};
use crate::error::{Error, Result};

/// Counts and derived scores for one entity type (or the micro-average).
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct TypeReport {
    #[serde(rename = "tp")]
    pub true_positives: usize,
    #[serde(rename = "fp")]
    pub false_positives: usize,
    #[serde(rename = "fn")]
    pub false_negatives: usize,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

impl TypeReport {
    pub fn from_counts(tp: usize, fp: usize, fn_: usize) -> TypeReport {
        let ratio = |num: usize, den: usize| if den == 0 { 0.0 } else { num as f64 / den as f64 };
        let precision = ratio(tp, tp + fp);
        let recall = ratio(tp, tp + fn_);
        let f1 = if precision + recall == 0.0 {
            0.0
        } else {
            2.0 * precision * recall / (precision + recall)
        };
        TypeReport {
            true_positives: tp,
            false_positives: fp,
            false_negatives: fn_,
            precision,
            recall,
            f1,
        }
    }
}

/// Per-type reports plus the micro-averaged overall row.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalReport {
    pub contributor: TypeReport,
    pub musical_work: TypeReport,
    pub overall: TypeReport,
}

impl EvalReport {
    pub fn of(&self, etype: EntityType) -> &TypeReport {
        match etype {
            EntityType::Contributor => &self.contributor,
            EntityType::MusicalWork => &self.musical_work,
        }
    }
}

/// Scores aligned per-tweet span lists. A predicted span is a true positive
/// iff a gold span has the same type, start and end.
pub fn evaluate_spans(gold: &[Vec<EntitySpan>], predicted: &[Vec<EntitySpan>]) -> Result<EvalReport> {
    if gold.len() != predicted.len() {
        return Err(Error::CorpusMismatch {
            reason: format!("{} gold tweets vs {} predicted", gold.len(), predicted.len()),
        });
    }
    let mut counts = [(0usize, 0usize, 0usize); 2]; // (tp, fp, fn) per type
    for (gold_spans, pred_spans) in gold.iter().zip(predicted) {
        for (ti, etype) in EntityType::ALL.iter().enumerate() {
            let g: Vec<(usize, usize)> = gold_spans
                .iter()
                .filter(|s| s.etype == *etype)
                .map(|s| (s.start, s.end))
                .collect();
            let p: Vec<(usize, usize)> = pred_spans
                .iter()
                .filter(|s| s.etype == *etype)
                .map(|s| (s.start, s.end))
                .collect();
            let tp = p.iter().filter(|span| g.contains(span)).count();
            counts[ti].0 += tp;
            counts[ti].1 += p.len() - tp;
            counts[ti].2 += g.len() - tp;
        }
    }
    let contributor = TypeReport::from_counts(counts[0].0, counts[0].1, counts[0].2);
    let musical_work = TypeReport::from_counts(counts[1].0, counts[1].1, counts[1].2);
    let overall = TypeReport::from_counts(
        counts[0].0 + counts[1].0,
        counts[0].1 + counts[1].1,
        counts[0].2 + counts[1].2,
    );
    Ok(EvalReport {
        contributor,
        musical_work,
        overall,
    })
}

/// Evaluates a predicted corpus against gold. Both must be fully labeled,
/// tweet-aligned, and agree on ids where both sides carry them.
pub fn evaluate(gold: &[TaggedTweet], predicted: &[TaggedTweet]) -> Result<EvalReport> {
    if gold.len() != predicted.len() {
        return Err(Error::CorpusMismatch {
            reason: format!("{} gold tweets vs {} predicted", gold.len(), predicted.len()),
        });
    }
    let mut gold_spans = Vec::with_capacity(gold.len());
    let mut pred_spans = Vec::with_capacity(predicted.len());
    for (i, (g, p)) in gold.iter().zip(predicted).enumerate() {
        if !g.id.is_empty() && !p.id.is_empty() && g.id != p.id {
            return Err(Error::CorpusMismatch {
                reason: format!("tweet {i}: gold id `{}` vs predicted id `{}`", g.id, p.id),
            });
        }
        if g.tokens.len() != p.tokens.len() {
            return Err(Error::CorpusMismatch {
                reason: format!(
                    "tweet {i}: {} gold tokens vs {} predicted",
                    g.tokens.len(),
                    p.tokens.len()
                ),
            });
        }
        gold_spans.push(g.spans()?);
        pred_spans.push(p.spans()?);
    }
    evaluate_spans(&gold_spans, &pred_spans)
}
