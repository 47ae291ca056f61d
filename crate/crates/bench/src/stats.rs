//! Wilcoxon rank-sum test and the domination ranking built on it.

use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{BenchError, Result};

/// Total sample size up to which tie-free samples use the exact null
/// distribution.
pub const EXACT_LIMIT: usize = 22;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TestResult {
    pub p: f64,
    pub reject: bool,
    pub exact: bool,
}

/// Mid-ranks (1-based) of the pooled sample and the tie group sizes.
fn pooled_ranks(pooled: &[f64]) -> (Vec<f64>, Vec<usize>) {
    let mut order: Vec<usize> = (0..pooled.len()).collect();
    order.sort_by(|&a, &b| pooled[a].total_cmp(&pooled[b]));
    let mut ranks = vec![0.0; pooled.len()];
    let mut ties = Vec::new();
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && pooled[order[j + 1]] == pooled[order[i]] {
            j += 1;
        }
        let mid = (i + j) as f64 / 2.0 + 1.0;
        for k in i..=j {
            ranks[order[k]] = mid;
        }
        ties.push(j - i + 1);
        i = j + 1;
    }
    (ranks, ties)
}

/// Number of `n`-subsets of ranks `1..=total` per rank sum.
fn subset_sum_counts(n: usize, total: usize) -> Vec<f64> {
    let max_sum = n * (2 * total - n + 1) / 2;
    let mut table = vec![vec![0.0f64; max_sum + 1]; n + 1];
    table[0][0] = 1.0;
    for r in 1..=total {
        for k in (1..=n.min(r)).rev() {
            for s in (r..=max_sum).rev() {
                table[k][s] += table[k - 1][s - r];
            }
        }
    }
    table.swap_remove(n)
}

/// One-sided rank-sum test of the alternative "`x` tends to be smaller
/// than `y`".
pub fn wilcoxon_ranksum_less(x: &[f64], y: &[f64], alpha: f64) -> Result<TestResult> {
    if x.len() < 2 || y.len() < 2 {
        return Err(BenchError::Statistics("rank-sum test needs two values per sample".into()));
    }
    if x.iter().chain(y).any(|v| v.is_nan()) {
        return Err(BenchError::Statistics("rank-sum test got NaN".into()));
    }
    let (n, m) = (x.len(), y.len());
    let total = n + m;
    let pooled: Vec<f64> = x.iter().chain(y).copied().collect();
    let (ranks, ties) = pooled_ranks(&pooled);
    let w: f64 = ranks[..n].iter().sum();
    let tied = ties.iter().any(|&t| t > 1);
    if ties.len() == 1 {
        return Ok(TestResult { p: 1.0, reject: false, exact: false });
    }

    if total <= EXACT_LIMIT && !tied {
        let counts = subset_sum_counts(n, total);
        let w = w.round() as usize;
        let all: f64 = counts.iter().sum();
        let below: f64 = counts[..=w.min(counts.len() - 1)].iter().sum();
        let p = below / all;
        return Ok(TestResult { p, reject: p < alpha, exact: true });
    }

    let (nf, mf, tf) = (n as f64, m as f64, total as f64);
    let mean = nf * (tf + 1.0) / 2.0;
    let tie_term: f64 = ties.iter().map(|&t| (t * t * t - t) as f64).sum::<f64>() / (tf * (tf - 1.0));
    let var = nf * mf / 12.0 * ((tf + 1.0) - tie_term);
    if !(var > 0.0) {
        return Ok(TestResult { p: 1.0, reject: false, exact: false });
    }
    let z = (w - mean + 0.5) / var.sqrt();
    let p = Normal::new(0.0, 1.0).expect("standard normal").cdf(z);
    Ok(TestResult { p, reject: p < alpha, exact: false })
}

/// Per-algorithm outcome of the domination ranking on one problem.
#[derive(Debug, Clone, PartialEq)]
pub struct RankRow {
    /// Number of algorithms significantly better than this one.
    pub dominated_by: Vec<usize>,
    pub ranks: Vec<f64>,
    pub failed: Vec<bool>,
}

/// Ranks algorithms by how many others beat them significantly. Equal
/// counts share the average of the ranks they occupy. An algorithm without
/// any finite indicator value failed and takes the last ranks.
pub fn domination_ranks(samples: &[Vec<f64>], alpha: f64) -> Result<RankRow> {
    let m = samples.len();
    if m == 0 {
        return Err(BenchError::Statistics("no algorithms to rank".into()));
    }
    let failed: Vec<bool> = samples.iter().map(|s| s.iter().all(|v| !v.is_finite())).collect();
    let mut dominated_by = vec![0usize; m];
    for a in 0..m {
        if failed[a] {
            continue;
        }
        for b in 0..m {
            if a != b && !failed[b] && wilcoxon_ranksum_less(&samples[b], &samples[a], alpha)?.reject {
                dominated_by[a] += 1;
            }
        }
    }
    let key = |i: usize| if failed[i] { usize::MAX } else { dominated_by[i] };
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&i| key(i));
    let mut ranks = vec![0.0; m];
    let mut i = 0;
    while i < m {
        let mut j = i;
        while j + 1 < m && key(order[j + 1]) == key(order[i]) {
            j += 1;
        }
        let avg = (i + j) as f64 / 2.0 + 1.0;
        for k in i..=j {
            ranks[order[k]] = avg;
        }
        i = j + 1;
    }
    for a in 0..m {
        if failed[a] {
            dominated_by[a] = m - 1;
        }
    }
    Ok(RankRow { dominated_by, ranks, failed })
}
