//! Token-level corpus statistics.

use serde::Serialize;

use super::{EntityType, TaggedTweet};
use crate::error::{Error, Result};

/// Entity-token counts and shares for one corpus.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusStats {
    pub tweets: usize,
    pub total_tokens: usize,
    pub contributor_tokens: usize,
    pub musical_work_tokens: usize,
    /// Fraction of all tokens labeled with a Contributor tag.
    pub contributor_share: f64,
    pub musical_work_share: f64,
}

impl CorpusStats {
    pub fn tokens_of(&self, etype: EntityType) -> usize {
        match etype {
            EntityType::Contributor => self.contributor_tokens,
            EntityType::MusicalWork => self.musical_work_tokens,
        }
    }

    pub fn share_of(&self, etype: EntityType) -> f64 {
        match etype {
            EntityType::Contributor => self.contributor_share,
            EntityType::MusicalWork => self.musical_work_share,
        }
    }
}

/// Counts non-`O` tokens per entity type. Requires a fully labeled corpus.
pub fn corpus_stats(corpus: &[TaggedTweet]) -> Result<CorpusStats> {
    let mut total = 0usize;
    let mut contr = 0usize;
    let mut work = 0usize;
    for tweet in corpus {
        let labels = tweet.labels.as_ref().ok_or_else(|| Error::UnlabeledTweet {
            id: tweet.id.clone(),
        })?;
        total += labels.len();
        for label in labels {
            match label.entity_type() {
                Some(EntityType::Contributor) => contr += 1,
                Some(EntityType::MusicalWork) => work += 1,
                None => {}
            }
        }
    }
    let share = |count: usize| if total == 0 { 0.0 } else { count as f64 / total as f64 };
    Ok(CorpusStats {
        tweets: corpus.len(),
        total_tokens: total,
        contributor_tokens: contr,
        musical_work_tokens: work,
        contributor_share: share(contr),
        musical_work_share: share(work),
    })
}
