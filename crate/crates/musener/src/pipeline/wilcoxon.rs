//! Two-sample Wilcoxon rank-sum test.
//!
//! The statistic is the rank sum of the first sample over the pooled data,
//! with average ranks for ties. Small problems (`n <= 12` pooled) get an
//! exact two-sided p-value by enumerating every way of assigning ranks to
//! the first sample; larger ones use the normal approximation with tie and
//! continuity corrections.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};

/// Pooled size up to which the exact enumeration runs (C(12,6) = 924 cases).
pub const EXACT_CUTOFF: usize = 12;

const EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WilcoxonMethod {
    /// Exact for pooled sizes up to [`EXACT_CUTOFF`], normal beyond.
    Auto,
    Exact,
    NormalApprox,
}

impl WilcoxonMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            WilcoxonMethod::Auto => "auto",
            WilcoxonMethod::Exact => "exact",
            WilcoxonMethod::NormalApprox => "normal",
        }
    }
}

impl std::str::FromStr for WilcoxonMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "auto" => Ok(WilcoxonMethod::Auto),
            "exact" => Ok(WilcoxonMethod::Exact),
            "normal" => Ok(WilcoxonMethod::NormalApprox),
            other => Err(format!("unknown method `{other}` (expected auto|exact|normal)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WilcoxonResult {
    /// Rank sum of sample A (ties get average ranks).
    pub statistic: f64,
    pub p_two_sided: f64,
    /// True when the exact enumeration produced the p-value.
    pub exact: bool,
}

/// Runs the test with automatic method selection.
pub fn wilcoxon_rank_sum(sample_a: &[f64], sample_b: &[f64]) -> Result<WilcoxonResult> {
    wilcoxon_rank_sum_with(sample_a, sample_b, WilcoxonMethod::Auto)
}

pub fn wilcoxon_rank_sum_with(
    sample_a: &[f64],
    sample_b: &[f64],
    method: WilcoxonMethod,
) -> Result<WilcoxonResult> {
    if sample_a.is_empty() || sample_b.is_empty() {
        return Err(Error::EmptySample);
    }
    let n_a = sample_a.len();
    let n = n_a + sample_b.len();
    let pooled: Vec<f64> = sample_a.iter().chain(sample_b).copied().collect();
    let ranks = average_ranks(&pooled);
    let statistic: f64 = ranks[..n_a].iter().sum();

    let use_exact = match method {
        WilcoxonMethod::Exact => true,
        WilcoxonMethod::NormalApprox => false,
        WilcoxonMethod::Auto => n <= EXACT_CUTOFF,
    };
    let p_two_sided = if use_exact {
        let (p_le, p_ge) = exact_tail_probabilities(n_a, &ranks, statistic);
        (2.0 * p_le.min(p_ge)).min(1.0)
    } else {
        normal_approx_p(n_a, &ranks, statistic)
    };
    Ok(WilcoxonResult {
        statistic,
        p_two_sided,
        exact: use_exact,
    })
}

/// Ranks of the pooled values (1-based), ties sharing their average rank.
fn average_ranks(pooled: &[f64]) -> Vec<f64> {
    let n = pooled.len();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| pooled[i].total_cmp(&pooled[j]));
    let mut ranks = vec![0.0; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j < n && pooled[idx[j]] == pooled[idx[i]] {
            j += 1;
        }
        let avg = (i + 1 + j) as f64 / 2.0;
        for k in i..j {
            ranks[idx[k]] = avg;
        }
        i = j;
    }
    ranks
}

/// P(W <= observed) and P(W >= observed) over all C(n, n_a) assignments of
/// the observed rank multiset to sample A.
fn exact_tail_probabilities(n_a: usize, ranks: &[f64], observed: f64) -> (f64, f64) {
    let mut le = 0usize;
    let mut ge = 0usize;
    let mut total = 0usize;
    for combo in ranks.iter().combinations(n_a) {
        let sum: f64 = combo.into_iter().sum();
        if sum <= observed + EPS {
            le += 1;
        }
        if sum >= observed - EPS {
            ge += 1;
        }
        total += 1;
    }
    (le as f64 / total as f64, ge as f64 / total as f64)
}

/// Normal approximation with tie correction and continuity correction.
fn normal_approx_p(n_a: usize, ranks: &[f64], observed: f64) -> f64 {
    let n = ranks.len();
    let n_b = n - n_a;
    let mean = n_a as f64 * (n as f64 + 1.0) / 2.0;

    // tie correction term: sum of (t^3 - t) over tie groups
    let mut sorted = ranks.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut tie_term = 0.0;
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        let t = (j - i) as f64;
        tie_term += t * t * t - t;
        i = j;
    }
    let nf = n as f64;
    let var = (n_a as f64 * n_b as f64 / 12.0) * (nf + 1.0 - tie_term / (nf * (nf - 1.0)));
    if var <= 0.0 {
        return 1.0;
    }
    let diff = observed - mean;
    // continuity correction toward the mean; note signum(0.0) is 1, not 0
    let corrected = if diff == 0.0 { 0.0 } else { diff - 0.5 * diff.signum() };
    let z = corrected / var.sqrt();
    (2.0 * (1.0 - normal_cdf(z.abs()))).min(1.0)
}

fn normal_cdf(z: f64) -> f64 {
    0.5 * (1.0 + erf(z / std::f64::consts::SQRT_2))
}

/// Abramowitz & Stegun 7.1.26, absolute error below 1.5e-7.
fn erf(x: f64) -> f64 {
    let sign = if x < 0.0 { -1.0 } else { 1.0 };
    let x = x.abs();
    let t = 1.0 / (1.0 + 0.3275911 * x);
    let poly = t
        * (0.254829592
            + t * (-0.284496736 + t * (1.421413741 + t * (-1.453152027 + t * 1.061405429))));
    sign * (1.0 - poly * (-x * x).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn fully_separated_samples() {
        let result = wilcoxon_rank_sum(&[1.0, 2.0, 3.0], &[4.0, 5.0, 6.0]).unwrap();
        assert_eq!(result.statistic, 6.0);
        assert!(result.exact);
        assert!((result.p_two_sided - 0.10).abs() < 1e-12);
        // one-sided tail is 1/20
        let (p_le, _) = exact_tail_probabilities(3, &average_ranks(&[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]), 6.0);
        assert!((p_le - 0.05).abs() < 1e-12);
    }

    #[test]
    fn identical_samples_give_p_one() {
        let result = wilcoxon_rank_sum(&[2.0, 7.0, 7.0], &[7.0, 2.0, 7.0]).unwrap();
        assert_eq!(result.p_two_sided, 1.0);
        let result = wilcoxon_rank_sum(&[5.0], &[5.0]).unwrap();
        assert_eq!(result.p_two_sided, 1.0);
    }

    #[test]
    fn average_ranks_handle_ties() {
        let ranks = average_ranks(&[1.0, 2.0, 2.0, 4.0]);
        assert_eq!(ranks, vec![1.0, 2.5, 2.5, 4.0]);
    }

    #[test]
    fn two_sided_p_is_symmetric_in_samples() {
        let a = [1.0, 5.0, 3.5, 2.0];
        let b = [4.0, 6.0, 0.5];
        let ab = wilcoxon_rank_sum(&a, &b).unwrap();
        let ba = wilcoxon_rank_sum(&b, &a).unwrap();
        assert!((ab.p_two_sided - ba.p_two_sided).abs() < 1e-12);
    }

    #[test]
    fn enumeration_is_a_probability_distribution() {
        let pooled = [3.0, 1.0, 4.0, 1.0, 5.0, 9.0, 2.0];
        let ranks = average_ranks(&pooled);
        let sums: Vec<f64> = ranks
            .iter()
            .combinations(3)
            .map(|c| c.into_iter().sum())
            .collect();
        let total = sums.len() as f64;
        let mut distinct: Vec<f64> = sums.clone();
        distinct.sort_by(f64::total_cmp);
        distinct.dedup();
        let pmf_sum: f64 = distinct
            .iter()
            .map(|w| sums.iter().filter(|s| (*s - w).abs() < EPS).count() as f64 / total)
            .sum();
        assert!((pmf_sum - 1.0).abs() < 1e-12);
        // every achievable statistic has p in (0, 1]
        for w in distinct {
            let (p_le, p_ge) = exact_tail_probabilities(3, &ranks, w);
            let p = (2.0 * p_le.min(p_ge)).min(1.0);
            assert!(p > 0.0 && p <= 1.0);
        }
    }

    #[test]
    fn exact_and_normal_agree_for_moderate_sizes() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..25 {
            let a: Vec<f64> = (0..6).map(|_| rng.gen_range(0.0..10.0)).collect();
            let b: Vec<f64> = (0..6).map(|_| rng.gen_range(0.0..10.0)).collect();
            let exact = wilcoxon_rank_sum_with(&a, &b, WilcoxonMethod::Exact).unwrap();
            let approx = wilcoxon_rank_sum_with(&a, &b, WilcoxonMethod::NormalApprox).unwrap();
            assert!(
                (exact.p_two_sided - approx.p_two_sided).abs() < 0.02,
                "exact {} vs normal {}",
                exact.p_two_sided,
                approx.p_two_sided
            );
        }
    }

    #[test]
    fn auto_switches_to_normal_beyond_cutoff() {
        let a: Vec<f64> = (0..10).map(|i| i as f64).collect();
        let b: Vec<f64> = (0..10).map(|i| i as f64 + 0.5).collect();
        let result = wilcoxon_rank_sum(&a, &b).unwrap();
        assert!(!result.exact);
        assert!(result.p_two_sided > 0.0 && result.p_two_sided <= 1.0);
    }

    #[test]
    fn empty_samples_rejected() {
        assert!(matches!(wilcoxon_rank_sum(&[], &[1.0]), Err(Error::EmptySample)));
        assert!(matches!(wilcoxon_rank_sum(&[1.0], &[]), Err(Error::EmptySample)));
    }
}
