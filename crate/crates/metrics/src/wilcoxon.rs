use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, Normal};

use crate::MetricsError;

/// Largest sample size for which the exact null distribution is enumerated.
const EXACT_LIMIT: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WilcoxonResult {
    /// `min(W+, W−)` over the signed ranks of the nonzero differences.
    pub statistic: f64,
    /// Two-sided p-value.
    pub p_value: f64,
    /// Number of nonzero differences actually used.
    pub n_used: usize,
    /// Set when every difference was zero (p is reported as 1).
    pub all_zero: bool,
    /// Whether the exact distribution or the normal approximation was used.
    pub exact: bool,
}

/// Two-sided Wilcoxon signed-rank test on paired samples.
///
/// Zero differences are dropped; ties get averaged ranks. The exact null
/// distribution is used up to 25 nonzero pairs, above that a normal
/// approximation with continuity and tie corrections.
pub fn wilcoxon_signed_rank(x: &[f64], y: &[f64]) -> Result<WilcoxonResult, MetricsError> {
    if x.len() != y.len() || x.len() < 6 {
        return Err(MetricsError::BadPairing {
            x: x.len(),
            y: y.len(),
        });
    }
    let diffs: Vec<f64> = x
        .iter()
        .zip(y)
        .map(|(a, b)| a - b)
        .filter(|d| *d != 0.0)
        .collect();
    if diffs.is_empty() {
        return Ok(WilcoxonResult {
            statistic: 0.0,
            p_value: 1.0,
            n_used: 0,
            all_zero: true,
            exact: true,
        });
    }

    let n = diffs.len();
    let ranks = averaged_ranks(&diffs);
    let w_plus: f64 = diffs
        .iter()
        .zip(&ranks)
        .filter(|(d, _)| **d > 0.0)
        .map(|(_, r)| *r)
        .sum();
    let total: f64 = ranks.iter().sum(); // n(n+1)/2
    let w_minus = total - w_plus;
    let w_min = w_plus.min(w_minus);

    let p = if n <= EXACT_LIMIT {
        exact_two_sided_p(&ranks, w_min)
    } else {
        normal_two_sided_p(&diffs, w_min)
    };

    Ok(WilcoxonResult {
        statistic: w_min,
        p_value: p.min(1.0),
        n_used: n,
        all_zero: false,
        exact: n <= EXACT_LIMIT,
    })
}

/// Ranks of |d| with ties averaged.
fn averaged_ranks(diffs: &[f64]) -> Vec<f64> {
    let n = diffs.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        diffs[a]
            .abs()
            .partial_cmp(&diffs[b].abs())
            .expect("non-finite difference")
    });
    let mut ranks = vec![0.0; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && diffs[order[j + 1]].abs() == diffs[order[i]].abs() {
            j += 1;
        }
        // average of ranks i+1 ..= j+1
        let avg = (i + 1 + j + 1) as f64 / 2.0;
        for &idx in &order[i..=j] {
            ranks[idx] = avg;
        }
        i = j + 1;
    }
    ranks
}

/// Exact two-sided p: counts sign assignments by rank sum. Ranks are
/// doubled so tie-averaged half ranks become integers.
fn exact_two_sided_p(ranks: &[f64], w_min: f64) -> f64 {
    let doubled: Vec<usize> = ranks.iter().map(|r| (2.0 * r).round() as usize).collect();
    let max_sum: usize = doubled.iter().sum();
    let mut counts = vec![0u64; max_sum + 1];
    counts[0] = 1;
    for &r in &doubled {
        for s in (r..=max_sum).rev() {
            counts[s] += counts[s - r];
        }
    }
    let threshold = (2.0 * w_min).round() as usize;
    let le: u64 = counts[..=threshold.min(max_sum)].iter().sum();
    let total = 2f64.powi(ranks.len() as i32);
    (2.0 * le as f64 / total).min(1.0)
}

fn normal_two_sided_p(diffs: &[f64], w_min: f64) -> f64 {
    let n = diffs.len() as f64;
    let mu = n * (n + 1.0) / 4.0;
    // tie correction: sum over tie groups of (t^3 - t) / 48
    let mut sorted: Vec<f64> = diffs.iter().map(|d| d.abs()).collect();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("non-finite difference"));
    let mut tie_term = 0.0;
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j + 1 < sorted.len() && sorted[j + 1] == sorted[i] {
            j += 1;
        }
        let t = (j - i + 1) as f64;
        tie_term += (t * t * t - t) / 48.0;
        i = j + 1;
    }
    let sigma = (n * (n + 1.0) * (2.0 * n + 1.0) / 24.0 - tie_term).sqrt();
    if sigma == 0.0 {
        return 1.0;
    }
    let z = (w_min - mu + 0.5) / sigma;
    let normal = Normal::new(0.0, 1.0).expect("unit normal");
    (2.0 * normal.cdf(z)).min(1.0)
}
