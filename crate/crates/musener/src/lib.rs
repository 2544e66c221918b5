//! Recognition of Contributor and Musical Work mentions in short informal
//! messages from radio listeners.
//!
//! Two complementary recognizers are provided and then reconciled:
//!
//! - a trainable linear sequence tagger over sparse hand-crafted features
//!   ([`tagger`]), decodable either token-by-token or with Viterbi search;
//! - a broadcast-schedule matcher ([`matcher`]) that links a message to
//!   recently played tracks by time proximity and token-overlap similarity.
//!
//! [`corpus`] holds the shared data model (tokenized tweets, IOB labels,
//! schedules) and file formats; [`features`] the per-token feature extraction
//! and gazetteers; [`pipeline`] reconciliation, entity-level evaluation,
//! threshold sweeps and significance testing. The `musener` binary wires the
//! pieces into batch commands.

pub mod cli;
pub mod corpus;
pub mod error;
pub mod features;
pub mod matcher;
pub mod pipeline;
pub mod tagger;

pub use corpus::{EntitySpan, EntityType, Label, Schedule, ScheduleEntry, TaggedTweet, Token};
pub use error::{Error, Result};
