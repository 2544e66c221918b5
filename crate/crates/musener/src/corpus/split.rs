//! Seed-deterministic train/testA/testB corpus splitting.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::TaggedTweet;
use crate::error::{Error, Result};

/// Partitions a corpus at tweet granularity.
///
/// Test sizes are `floor(ratio * n)`; the remainder goes to the training
/// split. The same `(corpus, seed, ratios)` always yields the same partition;
/// within each split, tweets keep their original corpus order.
pub fn split_corpus(
    corpus: &[TaggedTweet],
    seed: u64,
    ratios: (f64, f64, f64),
) -> Result<(Vec<TaggedTweet>, Vec<TaggedTweet>, Vec<TaggedTweet>)> {
    if corpus.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let (r_train, r_a, r_b) = ratios;
    for r in [r_train, r_a, r_b] {
        if !(0.0..=1.0).contains(&r) {
            return Err(Error::InvalidRatios {
                reason: format!("ratio {r} outside [0, 1]"),
            });
        }
    }
    if (r_train + r_a + r_b - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidRatios {
            reason: format!("ratios sum to {}, expected 1", r_train + r_a + r_b),
        });
    }

    let n = corpus.len();
    let n_a = (r_a * n as f64).floor() as usize;
    let n_b = (r_b * n as f64).floor() as usize;
    let n_train = n - n_a - n_b;

    let mut order: Vec<usize> = (0..n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    order.shuffle(&mut rng);

    let pick = |count: usize, from: &mut Vec<usize>| -> Vec<TaggedTweet> {
        let mut idx: Vec<usize> = from.drain(..count).collect();
        idx.sort_unstable();
        idx.into_iter().map(|i| corpus[i].clone()).collect()
    };
    let mut remaining = order;
    let train = pick(n_train, &mut remaining);
    let test_a = pick(n_a, &mut remaining);
    let test_b = pick(n_b, &mut remaining);
    Ok((train, test_a, test_b))
}
