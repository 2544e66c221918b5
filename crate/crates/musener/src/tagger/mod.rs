//! Trainable linear sequence model with two decoders.
//!
//! One weight table serves both decoding regimes: per-token argmax over
//! emission scores ([`LinearModel::decode_token`]) and Viterbi search over
//! emissions plus transitions ([`LinearModel::decode_viterbi`]). Training is
//! an averaged structured perceptron ([`train`]).

mod decode;
mod io;
mod train;

pub use io::MODEL_HEADER;
pub use train::train;

use std::collections::HashMap;

use crate::corpus::Label;
use crate::error::{Error, Result};

const N_LABELS: usize = Label::COUNT;

/// Sparse linear model: emission weights keyed by literal `name=value`
/// feature strings, plus a dense transition table over `{BOS} x labels`.
/// Missing entries read as weight 0.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct LinearModel {
    emissions: HashMap<String, [f64; N_LABELS]>,
    /// Rows 0..5 are previous labels in `Label::ALL` order; row 5 is BOS.
    transitions: [[f64; N_LABELS]; N_LABELS + 1],
}

impl LinearModel {
    pub fn new() -> Self {
        Self::default()
    }

    fn prev_row(prev: Option<Label>) -> usize {
        match prev {
            Some(label) => label.index(),
            None => N_LABELS,
        }
    }

    pub fn emission(&self, feature: &str, label: Label) -> f64 {
        self.emissions
            .get(feature)
            .map_or(0.0, |row| row[label.index()])
    }

    pub fn set_emission(&mut self, feature: &str, label: Label, weight: f64) {
        self.emissions.entry(feature.to_string()).or_default()[label.index()] = weight;
    }

    pub fn add_emission(&mut self, feature: &str, label: Label, delta: f64) {
        self.emissions.entry(feature.to_string()).or_default()[label.index()] += delta;
    }

    /// Transition weight; `prev = None` is the begin-of-sequence row.
    pub fn transition(&self, prev: Option<Label>, next: Label) -> f64 {
        self.transitions[Self::prev_row(prev)][next.index()]
    }

    pub fn set_transition(&mut self, prev: Option<Label>, next: Label, weight: f64) {
        self.transitions[Self::prev_row(prev)][next.index()] = weight;
    }

    pub fn add_transition(&mut self, prev: Option<Label>, next: Label, delta: f64) {
        self.transitions[Self::prev_row(prev)][next.index()] += delta;
    }

    /// Number of stored emission feature rows.
    pub fn n_features(&self) -> usize {
        self.emissions.len()
    }

    fn check_finite(&self) -> Result<()> {
        for (feature, row) in &self.emissions {
            if row.iter().any(|w| !w.is_finite()) {
                return Err(Error::NonFiniteWeight {
                    key: feature.clone(),
                });
            }
        }
        if self
            .transitions
            .iter()
            .flatten()
            .any(|w| !w.is_finite())
        {
            return Err(Error::NonFiniteWeight {
                key: "transition".to_string(),
            });
        }
        Ok(())
    }
}

/// Which decoder drives prediction (and mistake detection during training).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecoderKind {
    /// Independent per-token argmax; transitions are ignored.
    Token,
    /// Highest-scoring label sequence under emissions plus transitions.
    Viterbi,
}

impl DecoderKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            DecoderKind::Token => "token",
            DecoderKind::Viterbi => "viterbi",
        }
    }
}

impl std::str::FromStr for DecoderKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "token" => Ok(DecoderKind::Token),
            "viterbi" => Ok(DecoderKind::Viterbi),
            other => Err(format!("unknown decoder `{other}` (expected token|viterbi)")),
        }
    }
}

/// Training hyperparameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrainConfig {
    pub epochs: u32,
    pub seed: u64,
    pub decoder: DecoderKind,
    pub shuffle: bool,
    /// Average all per-update weight snapshots into the final model.
    pub average: bool,
}

impl Default for TrainConfig {
    fn default() -> Self {
        TrainConfig {
            epochs: 10,
            seed: 42,
            decoder: DecoderKind::Viterbi,
            shuffle: true,
            average: true,
        }
    }
}
