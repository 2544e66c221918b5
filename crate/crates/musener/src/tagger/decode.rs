//! Decoding and sequence scoring.
//!
//! Ties are always broken toward the lower label index, so the all-zero model
//! predicts `O` everywhere. Score accumulation follows one fixed order
//! (transition, then emission, token by token) so that Viterbi totals are
//! bit-identical to [`LinearModel::sequence_score`] of the returned path.

use super::{DecoderKind, LinearModel, N_LABELS};
use crate::corpus::Label;
use crate::error::{Error, Result};
use crate::features::FeatureVector;

impl LinearModel {
    /// Emission score of every label for one token.
    fn token_scores(&self, fv: &FeatureVector) -> [f64; N_LABELS] {
        let mut scores = [0.0; N_LABELS];
        for feature in fv.features() {
            if let Some(row) = self.emissions.get(feature.as_str()) {
                for (score, w) in scores.iter_mut().zip(row) {
                    *score += w;
                }
            }
        }
        scores
    }

    /// Per-token argmax over emission scores.
    pub fn decode_token(&self, features: &[FeatureVector]) -> Vec<Label> {
        features
            .iter()
            .map(|fv| {
                let scores = self.token_scores(fv);
                argmax(&scores)
            })
            .collect()
    }

    /// Highest-scoring label sequence under emissions plus transitions
    /// (including the begin-of-sequence transition).
    pub fn decode_viterbi(&self, features: &[FeatureVector]) -> Vec<Label> {
        let n = features.len();
        if n == 0 {
            return Vec::new();
        }
        let mut delta = vec![[0.0f64; N_LABELS]; n];
        let mut back = vec![[0usize; N_LABELS]; n];

        let first = self.token_scores(&features[0]);
        for (l, label) in Label::ALL.iter().enumerate() {
            delta[0][l] = self.transition(None, *label) + first[l];
        }
        for i in 1..n {
            let emit = self.token_scores(&features[i]);
            for (l, label) in Label::ALL.iter().enumerate() {
                let mut best_prev = 0usize;
                let mut best = f64::NEG_INFINITY;
                for (p, prev) in Label::ALL.iter().enumerate() {
                    let cand = delta[i - 1][p] + self.transition(Some(*prev), *label);
                    if cand > best {
                        best = cand;
                        best_prev = p;
                    }
                }
                delta[i][l] = best + emit[l];
                back[i][l] = best_prev;
            }
        }

        let mut labels = vec![Label::Outside; n];
        let mut cur = argmax(&delta[n - 1]).index();
        labels[n - 1] = Label::ALL[cur];
        for i in (1..n).rev() {
            cur = back[i][cur];
            labels[i - 1] = Label::ALL[cur];
        }
        labels
    }

    pub fn decode(&self, decoder: DecoderKind, features: &[FeatureVector]) -> Vec<Label> {
        match decoder {
            DecoderKind::Token => self.decode_token(features),
            DecoderKind::Viterbi => self.decode_viterbi(features),
        }
    }

    /// Total score of a given label sequence: all emission weights of active
    /// features plus the BOS transition and every label-to-label transition.
    pub fn sequence_score(&self, features: &[FeatureVector], labels: &[Label]) -> Result<f64> {
        if features.len() != labels.len() {
            return Err(Error::LengthMismatch {
                left: labels.len(),
                right: features.len(),
            });
        }
        let mut score = 0.0;
        for (i, (fv, label)) in features.iter().zip(labels).enumerate() {
            let prev = if i == 0 { None } else { Some(labels[i - 1]) };
            score += self.transition(prev, *label);
            score += self.token_scores(fv)[label.index()];
        }
        Ok(score)
    }
}

fn argmax(scores: &[f64; N_LABELS]) -> Label {
    let mut best = 0usize;
    for (i, score) in scores.iter().enumerate().skip(1) {
        if *score > scores[best] {
            best = i;
        }
    }
    Label::ALL[best]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::TaggedTweet;
    use crate::features::{fill_missing_pos_chunk, tweet_features, GazetteerSet};
    use itertools::Itertools;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn features_of(text: &str) -> Vec<FeatureVector> {
        let mut tweet = TaggedTweet::from_text("t", None, text);
        fill_missing_pos_chunk(&mut tweet);
        tweet_features(&tweet, &GazetteerSet::bundled()).unwrap()
    }

    #[test]
    fn zero_model_predicts_outside() {
        let model = LinearModel::new();
        let fvs = features_of("Beethoven is there");
        assert_eq!(model.decode_token(&fvs), vec![Label::Outside; 3]);
        assert_eq!(model.decode_viterbi(&fvs), vec![Label::Outside; 3]);
    }

    #[test]
    fn single_gazetteer_weight_drives_token_decode() {
        let mut model = LinearModel::new();
        model.set_emission("gaz.lastname=1", Label::BeginContributor, 1.0);
        let fvs = features_of("Beethoven is there but not his pno sonata op. 101");
        let labels = model.decode_token(&fvs);
        assert_eq!(labels[0], Label::BeginContributor);
        assert!(labels[1..].iter().all(|l| *l == Label::Outside));
    }

    #[test]
    fn empty_tweet_decodes_empty() {
        let model = LinearModel::new();
        assert!(model.decode_token(&[]).is_empty());
        assert!(model.decode_viterbi(&[]).is_empty());
    }

    #[test]
    fn strong_transition_prefers_contiguous_span() {
        // Two tokens. Emissions weakly favor B-WORK then O; the transition
        // bonus outweighs the second token's emission preference:
        //   B-WORK O      : 0.5 + 0.2       = 0.7
        //   B-WORK I-WORK : 0.5 + 0.0 + 10  = 10.5
        // The context-word features are unique to each token.
        let mut model = LinearModel::new();
        let fvs = features_of("pno sonata");
        model.set_emission("w[+1]=sonata", Label::BeginWork, 0.5);
        model.set_emission("w[-1]=pno", Label::Outside, 0.2);
        model.set_transition(Some(Label::BeginWork), Label::InsideWork, 10.0);
        let labels = model.decode_viterbi(&fvs);
        assert_eq!(labels, vec![Label::BeginWork, Label::InsideWork]);
        // token decoder has no access to the transition
        let token_labels = model.decode_token(&fvs);
        assert_eq!(token_labels, vec![Label::BeginWork, Label::Outside]);
    }

    #[test]
    fn sequence_score_arithmetic() {
        let model = LinearModel::new();
        let fvs = features_of("x");
        assert_eq!(model.sequence_score(&fvs, &[Label::Outside]).unwrap(), 0.0);

        let mut model = LinearModel::new();
        let feature = fvs[0].features()[0].clone();
        model.set_emission(&feature, Label::BeginWork, 2.5);
        model.set_transition(None, Label::BeginWork, 0.5);
        assert_eq!(
            model.sequence_score(&fvs, &[Label::BeginWork]).unwrap(),
            3.0
        );
    }

    #[test]
    fn sequence_score_rejects_length_mismatch() {
        let model = LinearModel::new();
        let fvs = features_of("a b");
        assert!(model.sequence_score(&fvs, &[Label::Outside]).is_err());
    }

    fn random_model(rng: &mut impl Rng, fvs: &[FeatureVector]) -> LinearModel {
        let mut model = LinearModel::new();
        for fv in fvs {
            for feature in fv.features() {
                for label in Label::ALL {
                    model.set_emission(feature, label, rng.gen_range(-2.0..2.0));
                }
            }
        }
        for prev in std::iter::once(None).chain(Label::ALL.map(Some)) {
            for label in Label::ALL {
                model.set_transition(prev, label, rng.gen_range(-2.0..2.0));
            }
        }
        model
    }

    #[test]
    fn viterbi_matches_exhaustive_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let texts = ["Beethoven", "pno sonata", "not his pno", "sonata op. 101 tonight"];
        for text in texts {
            let fvs = features_of(text);
            for _ in 0..50 {
                let model = random_model(&mut rng, &fvs);
                let decoded = model.decode_viterbi(&fvs);
                let decoded_score = model.sequence_score(&fvs, &decoded).unwrap();
                let best = (0..fvs.len())
                    .map(|_| Label::ALL)
                    .multi_cartesian_product()
                    .map(|seq| model.sequence_score(&fvs, &seq).unwrap())
                    .fold(f64::NEG_INFINITY, f64::max);
                assert_eq!(decoded_score, best, "text={text}");
            }
        }
    }

    #[test]
    fn zero_transitions_reduce_viterbi_to_token_decode() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let fvs = features_of("Beethoven wrote his sonata");
            let mut model = random_model(&mut rng, &fvs);
            for prev in std::iter::once(None).chain(Label::ALL.map(Some)) {
                for label in Label::ALL {
                    model.set_transition(prev, label, 0.0);
                }
            }
            assert_eq!(model.decode_token(&fvs), model.decode_viterbi(&fvs));
        }
    }

    #[test]
    fn constant_emission_shift_leaves_decoders_unchanged() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let fvs = features_of("his pno sonata op. 101");
        for trial in 0..20 {
            let model = random_model(&mut rng, &fvs);
            let mut shifted = model.clone();
            let shift = rng.gen_range(-3.0..3.0);
            for fv in &fvs {
                for feature in fv.features() {
                    for label in Label::ALL {
                        let w = shifted.emission(feature, label);
                        shifted.set_emission(feature, label, w + shift);
                    }
                }
            }
            assert_eq!(
                model.decode_token(&fvs),
                shifted.decode_token(&fvs),
                "trial={trial}"
            );
            assert_eq!(
                model.decode_viterbi(&fvs),
                shifted.decode_viterbi(&fvs),
                "trial={trial}"
            );
        }
    }
}
