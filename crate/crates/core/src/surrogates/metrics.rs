use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Normalized Kendall tau distance between two rankings: the share of
/// discordant pairs, with pairs tied in either vector counting one half.
pub fn kendall_tau_distance(pred: &[f64], truth: &[f64]) -> Result<f64> {
    if pred.len() != truth.len() {
        return Err(Error::ContractViolation("rankings differ in length".into()));
    }
    let n = pred.len();
    if n < 2 {
        return Err(Error::UndefinedMetric("Kendall tau needs at least two values".into()));
    }
    let mut discordant = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            let dp = pred[i] - pred[j];
            let dt = truth[i] - truth[j];
            if dp == 0.0 || dt == 0.0 {
                discordant += 0.5;
            } else if (dp > 0.0) != (dt > 0.0) {
                discordant += 1.0;
            }
        }
    }
    Ok(discordant / (n * (n - 1) / 2) as f64)
}

/// Largest absolute prediction error.
pub fn max_abs_error(pred: &[f64], truth: &[f64]) -> Result<f64> {
    if pred.len() != truth.len() || pred.is_empty() {
        return Err(Error::ContractViolation("error needs aligned non-empty vectors".into()));
    }
    Ok(pred
        .iter()
        .zip(truth)
        .map(|(p, t)| (p - t).abs())
        .fold(0.0, f64::max))
}

/// Fixed-length moving window; the smoothed value is the arithmetic mean.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Window {
    values: VecDeque<f64>,
}

impl Window {
    pub const LEN: usize = 5;

    pub fn push(&mut self, v: f64) {
        if self.values.len() == Self::LEN {
            self.values.pop_front();
        }
        self.values.push_back(v);
    }

    pub fn mean(&self) -> Option<f64> {
        if self.values.is_empty() {
            None
        } else {
            Some(self.values.iter().sum::<f64>() / self.values.len() as f64)
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
    pub fn values(&self) -> impl Iterator<Item = &f64> {
        self.values.iter()
    }
}
