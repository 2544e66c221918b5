//! Threshold grid sweeps over the schedule matcher.

use serde::Serialize;

use super::{evaluate_spans, EvalReport};
use crate::corpus::{Schedule, TaggedTweet};
use crate::error::Result;
use crate::matcher::{match_tweet, MatchConfig};

/// One grid point and its evaluation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub t: i64,
    pub w: f64,
    pub c: f64,
    pub report: EvalReport,
}

/// Runs the matcher at every `(t, w, c)` grid point (Cartesian product, in
/// the given list order) and evaluates against gold. The conventional grid is
/// `t in {800, 1000, 1200}`, `w in {0.33, 0.5}`, `c in {0.33, 0.5}`.
pub fn sweep(
    gold: &[TaggedTweet],
    schedule: &Schedule,
    t_list: &[i64],
    w_list: &[f64],
    c_list: &[f64],
    alpha: f64,
    stopwords: &std::collections::BTreeSet<String>,
) -> Result<Vec<SweepRow>> {
    let gold_spans: Vec<_> = gold.iter().map(|t| t.spans()).collect::<Result<_>>()?;
    let mut rows = Vec::with_capacity(t_list.len() * w_list.len() * c_list.len());
    for &t in t_list {
        for &w in w_list {
            for &c in c_list {
                let config = MatchConfig {
                    window_secs: t,
                    work_threshold: w,
                    contributor_threshold: c,
                    alpha,
                    stopwords: stopwords.clone(),
                };
                let mut predicted = Vec::with_capacity(gold.len());
                for tweet in gold {
                    predicted.push(match_tweet(tweet, schedule, &config)?.spans);
                }
                let report = evaluate_spans(&gold_spans, &predicted)?;
                rows.push(SweepRow { t, w, c, report });
            }
        }
    }
    Ok(rows)
}
