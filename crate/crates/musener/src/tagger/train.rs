//! Averaged structured perceptron training.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{LinearModel, TrainConfig, N_LABELS};
use crate::corpus::{Label, TaggedTweet};
use crate::error::{Error, Result};
use crate::features::{tweet_features, FeatureVector, GazetteerSet};

/// Trains a [`LinearModel`] on a labeled corpus.
///
/// Per tweet: decode with the current weights using the configured decoder;
/// on a mismatch add +1 to every gold `(feature, label)` emission and gold
/// transition and -1 to the predicted ones (learning rate fixed at 1). With
/// `average` set, the returned weights are the mean of the weight snapshots
/// taken after each update. Deterministic for a given `(corpus, config)`.
///
/// POS/chunk columns are used as found; fill `UNK` columns with
/// [`crate::features::fill_missing_pos_chunk`] beforehand if desired.
pub fn train(
    corpus: &[TaggedTweet],
    gazetteers: &GazetteerSet,
    config: &TrainConfig,
) -> Result<LinearModel> {
    if corpus.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    if config.epochs == 0 {
        return Err(Error::InvalidConfig {
            reason: "epochs must be >= 1".to_string(),
        });
    }

    let mut examples: Vec<(Vec<FeatureVector>, &[Label])> = Vec::with_capacity(corpus.len());
    for tweet in corpus {
        let labels = tweet.labels.as_deref().ok_or_else(|| Error::UnlabeledTweet {
            id: tweet.id.clone(),
        })?;
        examples.push((tweet_features(tweet, gazetteers)?, labels));
    }

    let mut learner = Learner::default();
    let mut order: Vec<usize> = (0..examples.len()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..config.epochs {
        if config.shuffle {
            order.shuffle(&mut rng);
        }
        for &idx in &order {
            let (features, gold) = &examples[idx];
            if features.is_empty() {
                continue;
            }
            learner.steps += 1;
            let predicted = learner.current.decode(config.decoder, features);
            if predicted != *gold {
                learner.update(features, gold, &predicted);
            }
        }
    }
    Ok(learner.finish(config.average))
}

/// Current weights plus the accumulator needed to recover the snapshot mean
/// lazily. One snapshot is taken per example visit (step `t = 1..=T`); with
/// `u[k] = sum over updates of t * delta_t[k]`, the mean of the T snapshots
/// is `((T + 1) * w - u) / T`.
#[derive(Default)]
struct Learner {
    current: LinearModel,
    emission_acc: HashMap<String, [f64; N_LABELS]>,
    transition_acc: [[f64; N_LABELS]; N_LABELS + 1],
    steps: u64,
}

impl Learner {
    fn update(&mut self, features: &[FeatureVector], gold: &[Label], predicted: &[Label]) {
        let step = self.steps as f64;
        for (i, fv) in features.iter().enumerate() {
            for feature in fv.features() {
                self.bump_emission(feature, gold[i], 1.0, step);
                self.bump_emission(feature, predicted[i], -1.0, step);
            }
            let gold_prev = if i == 0 { None } else { Some(gold[i - 1]) };
            let pred_prev = if i == 0 { None } else { Some(predicted[i - 1]) };
            self.current.add_transition(gold_prev, gold[i], 1.0);
            self.transition_acc[LinearModel::prev_row(gold_prev)][gold[i].index()] += step;
            self.current.add_transition(pred_prev, predicted[i], -1.0);
            self.transition_acc[LinearModel::prev_row(pred_prev)][predicted[i].index()] -= step;
        }
    }

    fn bump_emission(&mut self, feature: &str, label: Label, delta: f64, step: f64) {
        self.current.add_emission(feature, label, delta);
        if !self.emission_acc.contains_key(feature) {
            self.emission_acc.insert(feature.to_string(), [0.0; N_LABELS]);
        }
        self.emission_acc.get_mut(feature).unwrap()[label.index()] += step * delta;
    }

    fn finish(self, average: bool) -> LinearModel {
        if !average || self.steps == 0 {
            return self.current;
        }
        let t = self.steps as f64;
        let mut model = self.current;
        for (feature, acc) in &self.emission_acc {
            if let Some(row) = model.emissions.get_mut(feature) {
                for (w, a) in row.iter_mut().zip(acc) {
                    *w = ((t + 1.0) * *w - a) / t;
                }
            }
        }
        for (row, acc_row) in model.transitions.iter_mut().zip(&self.transition_acc) {
            for (w, a) in row.iter_mut().zip(acc_row) {
                *w = ((t + 1.0) * *w - a) / t;
            }
        }
        model
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{read_corpus_from, EntityType};
    use crate::features::fill_missing_pos_chunk;
    use crate::tagger::DecoderKind;

    /// Tiny corpus where the label is fully determined by one gazetteer flag:
    /// surnames are B-CONTR, work types are B-WORK, everything else O.
    fn toy_corpus() -> Vec<TaggedTweet> {
        let text = "\
Beethoven\tUNK\tUNK\tB-CONTR
wrote\tUNK\tUNK\tO
tonight\tUNK\tUNK\tO

heard\tUNK\tUNK\tO
a\tUNK\tUNK\tO
symphony\tUNK\tUNK\tB-WORK

Mozart\tUNK\tUNK\tB-CONTR
then\tUNK\tUNK\tO
some\tUNK\tUNK\tO
overture\tUNK\tUNK\tB-WORK

what\tUNK\tUNK\tO
about\tUNK\tUNK\tO
Brahms\tUNK\tUNK\tB-CONTR

that\tUNK\tUNK\tO
concerto\tUNK\tUNK\tB-WORK
again\tUNK\tUNK\tO

";
        let mut corpus = read_corpus_from(text.as_bytes(), "mem").unwrap();
        for tweet in &mut corpus {
            fill_missing_pos_chunk(tweet);
        }
        corpus
    }

    fn training_accuracy(model: &LinearModel, corpus: &[TaggedTweet], decoder: DecoderKind) -> bool {
        let gaz = GazetteerSet::bundled();
        corpus.iter().all(|tweet| {
            let fvs = tweet_features(tweet, &gaz).unwrap();
            model.decode(decoder, &fvs) == *tweet.labels.as_ref().unwrap()
        })
    }

    #[test]
    fn separable_toy_corpus_is_learned_perfectly() {
        let corpus = toy_corpus();
        let gaz = GazetteerSet::bundled();
        for decoder in [DecoderKind::Token, DecoderKind::Viterbi] {
            let config = TrainConfig {
                decoder,
                ..TrainConfig::default()
            };
            let model = train(&corpus, &gaz, &config).unwrap();
            assert!(
                training_accuracy(&model, &corpus, decoder),
                "decoder {decoder:?} failed to fit the separable corpus"
            );
            // the gazetteer flags carry the signal
            assert!(
                model.emission("gaz.lastname=1", Label::BeginContributor)
                    > model.emission("gaz.lastname=1", Label::Outside)
            );
            assert_eq!(
                corpus
                    .iter()
                    .flat_map(|t| t.spans().unwrap())
                    .filter(|s| s.etype == EntityType::Contributor)
                    .count(),
                3
            );
        }
    }

    #[test]
    fn training_is_deterministic() {
        let corpus = toy_corpus();
        let gaz = GazetteerSet::bundled();
        let config = TrainConfig::default();
        let a = train(&corpus, &gaz, &config).unwrap();
        let b = train(&corpus, &gaz, &config).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_bad_input() {
        let gaz = GazetteerSet::bundled();
        assert!(matches!(
            train(&[], &gaz, &TrainConfig::default()),
            Err(Error::EmptyCorpus)
        ));
        let corpus = toy_corpus();
        let config = TrainConfig {
            epochs: 0,
            ..TrainConfig::default()
        };
        assert!(matches!(
            train(&corpus, &gaz, &config),
            Err(Error::InvalidConfig { .. })
        ));
        let mut unlabeled = corpus;
        unlabeled[0].labels = None;
        assert!(matches!(
            train(&unlabeled, &gaz, &TrainConfig::default()),
            Err(Error::UnlabeledTweet { .. })
        ));
    }

    #[test]
    fn plain_perceptron_also_supported() {
        let corpus = toy_corpus();
        let gaz = GazetteerSet::bundled();
        let config = TrainConfig {
            average: false,
            ..TrainConfig::default()
        };
        let model = train(&corpus, &gaz, &config).unwrap();
        assert!(training_accuracy(&model, &corpus, DecoderKind::Viterbi));
    }
}
