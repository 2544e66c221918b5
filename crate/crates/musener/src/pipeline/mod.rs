//! Reconciliation of the two recognizers, entity-level evaluation, threshold
//! sweeps and significance testing.

mod evaluate;
mod reconcile;
mod sweep;
mod wilcoxon;

pub use evaluate::{evaluate, evaluate_spans, EvalReport, TypeReport};
pub use reconcile::{reconcile, reconcile_corpora, Granularity};
pub use sweep::{sweep, SweepRow};
pub use wilcoxon::{
    wilcoxon_rank_sum, wilcoxon_rank_sum_with, WilcoxonMethod, WilcoxonResult, EXACT_CUTOFF,
};
